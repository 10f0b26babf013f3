// zg/group.hpp
//
// Finite groups in fully tabulated form. A group is built from one of
//   - a built-in name (C<n>, S3, S4, A4, A5, D4, Q8),
//   - permutation generators (closure under products),
//   - an explicit multiplication table,
// and afterwards exposes O(1) multiplication, inversion, element orders,
// the exponent, conjugacy classes, and power maps on classes.
//
// Indexing invariants:
//   - the identity has element index 0;
//   - elements of a closure are numbered in discovery order (breadth-first
//     over products, applied left to right, generators in listed order);
//   - conjugacy classes are numbered ascending by their representative,
//     which is the minimal element index of the class; the identity class
//     is therefore class 0.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zg/errors.hpp"
#include "zg/perm.hpp"

namespace zg {

inline constexpr int default_closure_cap = 2000;

// ---------------------------------------------------------------------------
// Group description, prior to construction.

struct group_spec {
  enum class kind { named, permutation, table };

  kind k = kind::named;
  std::string name;                       // kind::named
  int npoints = 0;                        // kind::permutation
  std::vector<std::string> generators;    // kind::permutation, cycle notation
  std::vector<std::vector<int32_t>> table;  // kind::table, zero-based indices
  std::string id;                         // display identifier

  static group_spec named(const std::string& name);
  static group_spec permutation(int npoints, std::vector<std::string> gens,
                                std::string id = "");
  static group_spec from_table(std::vector<std::vector<int32_t>> table,
                               std::string id = "");
  static group_spec parse(std::istream& in, const std::string& id);
  static group_spec parse_file(const std::string& path);
};

inline bool is_builtin_group_name(const std::string& s) {
  if (s == "S3" || s == "S4" || s == "A4" || s == "A5" || s == "D4" || s == "Q8")
    return true;
  if (s.size() < 2 || s[0] != 'C' || s[1] == '0') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline group_spec group_spec::named(const std::string& name) {
  if (!is_builtin_group_name(name))
    throw parse_error("unknown built-in group name: '" + name + "'");
  group_spec s;
  s.k = kind::named;
  s.name = name;
  s.id = name;
  return s;
}

inline group_spec group_spec::permutation(int npoints, std::vector<std::string> gens,
                                          std::string id) {
  if (npoints < 1) throw parse_error("permutation group needs npoints >= 1");
  if (gens.empty()) throw parse_error("permutation group needs at least one generator");
  group_spec s;
  s.k = kind::permutation;
  s.npoints = npoints;
  s.generators = std::move(gens);
  s.id = id.empty() ? "perm" + std::to_string(npoints) : std::move(id);
  return s;
}

inline group_spec group_spec::from_table(std::vector<std::vector<int32_t>> table,
                                         std::string id) {
  if (table.empty()) throw parse_error("empty multiplication table");
  group_spec s;
  s.k = kind::table;
  s.table = std::move(table);
  s.id = id.empty() ? "table" + std::to_string(s.table.size()) : std::move(id);
  return s;
}

// Text format, one directive per file ('#' starts a comment):
//   named <NAME>
//   perm <n>         followed by one generator per line, cycle notation
//   table <m>        followed by m rows of m zero-based indices
inline group_spec group_spec::parse(std::istream& in, const std::string& id) {
  auto next_line = [&in](std::string& line) -> bool {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto end = line.find_last_not_of(" \t\r\n");
      if (end == std::string::npos) continue;
      line.erase(end + 1);
      auto begin = line.find_first_not_of(" \t");
      line.erase(0, begin);
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw parse_error("empty group description");
  std::istringstream head(line);
  std::string keyword;
  head >> keyword;

  if (keyword == "named") {
    std::string name, extra;
    if (!(head >> name)) throw parse_error("'named' requires a group name");
    if (head >> extra) throw parse_error("trailing tokens after 'named " + name + "'");
    if (next_line(line)) throw parse_error("unexpected content after 'named' directive");
    group_spec s = named(name);
    s.id = id.empty() ? s.name : id;
    return s;
  }

  if (keyword == "perm") {
    int n = 0;
    std::string extra;
    if (!(head >> n) || n < 1) throw parse_error("'perm' requires a positive point count");
    if (head >> extra) throw parse_error("trailing tokens after 'perm'");
    std::vector<std::string> gens;
    while (next_line(line)) gens.push_back(line);
    if (gens.empty()) throw parse_error("'perm' requires at least one generator line");
    return permutation(n, std::move(gens), id);
  }

  if (keyword == "table") {
    int m = 0;
    std::string extra;
    if (!(head >> m) || m < 1) throw parse_error("'table' requires a positive size");
    if (head >> extra) throw parse_error("trailing tokens after 'table'");
    std::vector<std::vector<int32_t>> table;
    table.reserve(m);
    for (int r = 0; r < m; ++r) {
      if (!next_line(line))
        throw parse_error("table row " + std::to_string(r) + " missing");
      std::istringstream row(line);
      std::vector<int32_t> vals;
      long long v;
      while (row >> v) vals.push_back(static_cast<int32_t>(v));
      if (static_cast<int>(vals.size()) != m)
        throw parse_error("table row " + std::to_string(r) + " has " +
                          std::to_string(vals.size()) + " entries, expected " +
                          std::to_string(m));
      table.push_back(std::move(vals));
    }
    if (next_line(line)) throw parse_error("unexpected content after table rows");
    return from_table(std::move(table), id);
  }

  throw parse_error("unknown group directive: '" + keyword + "'");
}

inline group_spec group_spec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open group file: '" + path + "'");
  return parse(in, path);
}

// ---------------------------------------------------------------------------
// Conjugacy classes.

struct conj_class {
  int32_t rep = 0;                 // minimal element index in the class
  int32_t size = 0;
  std::vector<int32_t> members;    // ascending
};

class class_table {
 public:
  class_table() = default;
  class_table(std::vector<conj_class> classes, std::vector<int32_t> class_of)
      : classes_(std::move(classes)), class_of_(std::move(class_of)) {}

  int count() const { return static_cast<int>(classes_.size()); }
  const conj_class& at(int c) const { return classes_.at(c); }
  const std::vector<conj_class>& all() const { return classes_; }
  int class_of(int32_t element) const { return class_of_.at(element); }
  // The identity class is class 0 by the representative-ordering invariant.
  int identity_class() const { return 0; }

 private:
  std::vector<conj_class> classes_;
  std::vector<int32_t> class_of_;
};

// ---------------------------------------------------------------------------
// The group itself.

class group {
 public:
  int order() const { return order_; }
  const std::string& id() const { return id_; }

  int32_t mul(int32_t a, int32_t b) const {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  int32_t inv(int32_t a) const { return inv_[a]; }
  int32_t identity() const { return 0; }

  int element_order(int32_t a) const { return elem_order_[a]; }
  long long exponent() const { return exponent_; }

  const class_table& classes() const { return classes_; }

  // Permutation picture of an element: the natural action for permutation
  // built groups, the right-regular action for table built groups.
  const perm& display_perm(int32_t a) const { return display_[a]; }

  bool in_range(int32_t a) const { return a >= 0 && a < order_; }
  void check_element(int32_t a, const std::string& what) const {
    if (!in_range(a))
      throw precondition_error(what + " index " + std::to_string(a) +
                               " outside 0.." + std::to_string(order_ - 1));
  }

  friend std::shared_ptr<const group> build_group(const group_spec& spec, int closure_cap);

 private:
  group() = default;

  void finish_tables() {
    // Inverses: the row of each element is a permutation of the group.
    inv_.assign(order_, -1);
    for (int32_t a = 0; a < order_; ++a)
      for (int32_t b = 0; b < order_; ++b)
        if (mul(a, b) == 0) {
          inv_[a] = b;
          break;
        }

    // Element orders by iterated multiplication; the exponent is their lcm.
    elem_order_.assign(order_, 0);
    exponent_ = 1;
    for (int32_t a = 0; a < order_; ++a) {
      int32_t t = a;
      int ord = 1;
      while (t != 0) {
        t = mul(t, a);
        ++ord;
      }
      elem_order_[a] = ord;
      exponent_ = std::lcm(exponent_, static_cast<long long>(ord));
    }

    // Conjugacy classes, discovered in ascending order of minimal member.
    std::vector<int32_t> class_of(order_, -1);
    std::vector<conj_class> classes;
    for (int32_t x = 0; x < order_; ++x) {
      if (class_of[x] != -1) continue;
      std::set<int32_t> orbit;
      for (int32_t g = 0; g < order_; ++g) orbit.insert(mul(mul(g, x), inv_[g]));
      conj_class c;
      c.rep = x;
      c.size = static_cast<int32_t>(orbit.size());
      c.members.assign(orbit.begin(), orbit.end());
      int idx = static_cast<int>(classes.size());
      for (int32_t m : c.members) class_of[m] = idx;
      classes.push_back(std::move(c));
    }
    classes_ = class_table(std::move(classes), std::move(class_of));
  }

  std::string id_;
  int order_ = 0;
  std::vector<int32_t> mul_;        // row-major order_ x order_
  std::vector<int32_t> inv_;
  std::vector<int> elem_order_;
  long long exponent_ = 1;
  class_table classes_;
  std::vector<perm> display_;
};

namespace detail {

struct named_perm_group {
  int npoints;
  std::vector<std::string> generators;
};

inline std::optional<named_perm_group> builtin_generators(const std::string& name) {
  if (name == "S3") return named_perm_group{3, {"(1 2)", "(1 2 3)"}};
  if (name == "S4") return named_perm_group{4, {"(1 2)", "(1 2 3 4)"}};
  if (name == "A4") return named_perm_group{4, {"(1 2 3)", "(2 3 4)"}};
  if (name == "A5") return named_perm_group{5, {"(1 2 3 4 5)", "(1 2 3)"}};
  if (name == "D4") return named_perm_group{4, {"(1 2 3 4)", "(1 3)"}};
  // Quaternion group acting on its eight elements {1,-1,i,-i,j,-j,k,-k}.
  if (name == "Q8")
    return named_perm_group{8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"}};
  return std::nullopt;
}

inline void validate_table(const std::vector<std::vector<int32_t>>& t) {
  const int m = static_cast<int>(t.size());
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(t[r].size()) != m)
      throw parse_error("multiplication table is not square");
    std::vector<char> seen(m, 0);
    for (int32_t v : t[r]) {
      if (v < 0 || v >= m) throw parse_error("table entry out of range");
      if (seen[v]) throw parse_error("table row " + std::to_string(r) + " repeats an entry");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < m; ++c) {
    std::vector<char> seen(m, 0);
    for (int r = 0; r < m; ++r) {
      int32_t v = t[r][c];
      if (seen[v]) throw parse_error("table column " + std::to_string(c) + " repeats an entry");
      seen[v] = 1;
    }
  }
}

inline int find_table_identity(const std::vector<std::vector<int32_t>>& t) {
  const int m = static_cast<int>(t.size());
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int j = 0; j < m && ok; ++j)
      if (t[e][j] != j || t[j][e] != j) ok = false;
    if (ok) return e;
  }
  throw parse_error("multiplication table has no identity element");
}

inline void check_associative(const std::vector<std::vector<int32_t>>& t) {
  const int m = static_cast<int>(t.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw parse_error("multiplication table is not associative at (" +
                            std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + ")");
}

}  // namespace detail

inline std::shared_ptr<const group> build_group(const group_spec& spec,
                                                int closure_cap = default_closure_cap) {
  auto g = std::shared_ptr<group>(new group());
  g->id_ = spec.id;

  switch (spec.k) {
    case group_spec::kind::named: {
      if (auto gens = detail::builtin_generators(spec.name)) {
        group_spec ps = group_spec::permutation(gens->npoints, gens->generators, spec.name);
        return build_group(ps, closure_cap);
      }
      // C<n>: the cyclic group, tabulated directly. Index i stands for the
      // i-th power of the generator, which matches the closure numbering the
      // generic path would produce from the single n-cycle.
      long long n = std::stoll(spec.name.substr(1));
      if (n > closure_cap)
        throw budget_error("group order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(closure_cap));
      g->order_ = static_cast<int>(n);
      g->mul_.resize(static_cast<std::size_t>(n) * n);
      for (int32_t i = 0; i < n; ++i)
        for (int32_t j = 0; j < n; ++j)
          g->mul_[static_cast<std::size_t>(i) * n + j] = static_cast<int32_t>((i + j) % n);
      g->display_.reserve(n);
      for (int32_t i = 0; i < n; ++i) {
        perm p;
        p.img.resize(n);
        for (int32_t j = 0; j < n; ++j) p.img[j] = static_cast<int32_t>((j + i) % n);
        g->display_.push_back(std::move(p));
      }
      break;
    }

    case group_spec::kind::permutation: {
      std::vector<perm> gens;
      gens.reserve(spec.generators.size());
      for (const std::string& s : spec.generators)
        gens.push_back(parse_cycles(s, spec.npoints));

      std::vector<perm> elems{perm_identity(spec.npoints)};
      std::map<perm, int32_t> index{{elems[0], 0}};
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const perm& gen : gens) {
          perm p = compose(elems[i], gen);
          if (index.emplace(p, static_cast<int32_t>(elems.size())).second) {
            if (static_cast<int>(elems.size()) + 1 > closure_cap)
              throw budget_error("closure exceeds cap " + std::to_string(closure_cap));
            elems.push_back(std::move(p));
          }
        }
      }

      g->order_ = static_cast<int>(elems.size());
      g->mul_.resize(static_cast<std::size_t>(g->order_) * g->order_);
      for (int32_t a = 0; a < g->order_; ++a)
        for (int32_t b = 0; b < g->order_; ++b)
          g->mul_[static_cast<std::size_t>(a) * g->order_ + b] =
              index.at(compose(elems[a], elems[b]));
      g->display_ = std::move(elems);
      break;
    }

    case group_spec::kind::table: {
      const int m = static_cast<int>(spec.table.size());
      if (m > closure_cap)
        throw budget_error("group order " + std::to_string(m) + " exceeds cap " +
                           std::to_string(closure_cap));
      detail::validate_table(spec.table);
      int e = detail::find_table_identity(spec.table);
      detail::check_associative(spec.table);

      // Relabel so the identity is element 0 (swap labels 0 and e).
      auto relabel = [e](int32_t x) -> int32_t {
        if (x == e) return 0;
        if (x == 0) return static_cast<int32_t>(e);
        return x;
      };
      g->order_ = m;
      g->mul_.resize(static_cast<std::size_t>(m) * m);
      for (int32_t a = 0; a < m; ++a)
        for (int32_t b = 0; b < m; ++b)
          g->mul_[static_cast<std::size_t>(a) * m + b] =
              relabel(spec.table[relabel(a)][relabel(b)]);

      // Right-regular picture: element a acts by x -> x*a. This is a faithful
      // homomorphism under left-to-right composition, so the printed cycles
      // multiply the same way the table does.
      g->display_.reserve(m);
      for (int32_t a = 0; a < m; ++a) {
        perm p;
        p.img.resize(m);
        for (int32_t x = 0; x < m; ++x)
          p.img[x] = g->mul_[static_cast<std::size_t>(x) * m + a];
        g->display_.push_back(std::move(p));
      }
      break;
    }
  }

  g->finish_tables();
  return g;
}

// Resolve a CLI-facing group argument: a built-in name, otherwise a file path.
inline std::shared_ptr<const group> resolve_group(const std::string& name_or_path,
                                                  int closure_cap = default_closure_cap) {
  if (is_builtin_group_name(name_or_path))
    return build_group(group_spec::named(name_or_path), closure_cap);
  if (std::filesystem::exists(name_or_path))
    return build_group(group_spec::parse_file(name_or_path), closure_cap);
  throw parse_error("'" + name_or_path + "' is neither a built-in group name nor a file");
}

// ---------------------------------------------------------------------------
// Power maps on elements and classes.

// a^e for any integer e (negative exponents via the inverse), by repeated squaring.
inline int32_t element_power(const group& G, int32_t a, long long e) {
  G.check_element(a, "element");
  if (e < 0) {
    a = G.inv(a);
    e = -e;
  }
  int32_t acc = G.identity();
  int32_t base = a;
  while (e > 0) {
    if (e & 1) acc = G.mul(acc, base);
    e >>= 1;
    if (e) base = G.mul(base, base);
  }
  return acc;
}

// The map classes -> classes induced by x -> x^e. Well defined because
// (g x g^{-1})^e = g x^e g^{-1}; well-definedness is exercised in tests.
inline std::vector<int> power_class_map(const group& G, long long e) {
  const class_table& ct = G.classes();
  std::vector<int> out(ct.count());
  for (int c = 0; c < ct.count(); ++c)
    out[c] = ct.class_of(element_power(G, ct.at(c).rep, e));
  return out;
}

// Image of the e-th power map on classes: the set of classes that contain
// some e-th power. Returned as a sorted list of class ids.
inline std::vector<int> power_image(const group& G, long long e) {
  std::vector<int> pm = power_class_map(G, e);
  std::set<int> img(pm.begin(), pm.end());
  return std::vector<int>(img.begin(), img.end());
}

// Membership mask over classes for power_image(e).
inline std::vector<char> power_image_mask(const group& G, long long e) {
  std::vector<char> mask(G.classes().count(), 0);
  for (int c : power_class_map(G, e)) mask[c] = 1;
  return mask;
}

// ---------------------------------------------------------------------------
// Subgroup enumeration (small groups only; used for idempotent experiments).

namespace detail {

inline std::vector<int32_t> subgroup_closure(const group& G, std::set<int32_t> s) {
  s.insert(G.identity());
  std::vector<int32_t> work(s.begin(), s.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < work.size(); ++j) {
      int32_t p = G.mul(work[i], work[j]);
      if (s.insert(p).second) work.push_back(p);
      p = G.mul(work[j], work[i]);
      if (s.insert(p).second) work.push_back(p);
    }
    int32_t v = G.inv(work[i]);
    if (s.insert(v).second) work.push_back(v);
  }
  return std::vector<int32_t>(s.begin(), s.end());
}

}  // namespace detail

// Every subgroup of G, each as an ascending element list, ordered by
// (size, lexicographic members). Exhaustive lattice walk; fine for |G| <= 60.
inline std::vector<std::vector<int32_t>> all_subgroups(const group& G) {
  std::set<std::vector<int32_t>> seen;
  std::vector<std::vector<int32_t>> queue;
  queue.push_back(detail::subgroup_closure(G, {}));
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<int32_t> base = queue[i];
    std::set<int32_t> in_base(base.begin(), base.end());
    for (int32_t gidx = 0; gidx < G.order(); ++gidx) {
      if (in_base.count(gidx)) continue;
      std::set<int32_t> seed = in_base;
      seed.insert(gidx);
      std::vector<int32_t> bigger = detail::subgroup_closure(G, std::move(seed));
      if (seen.insert(bigger).second) queue.push_back(bigger);
    }
  }
  std::vector<std::vector<int32_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace zg
