// zg/group_ring.hpp
//
// Elements of the integral group ring ZG over a tabulated finite group:
// sparse integer coefficient vectors indexed by group elements, with exact
// bigint arithmetic. On top of the ring operations sit the quantities the
// verification relations consume: augmentation, partial augmentations per
// conjugacy class, generalized traces, exact inversion over Q, torsion
// order search, bicyclic units, and subgroup sums.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "zg/errors.hpp"
#include "zg/group.hpp"
#include "zg/integers.hpp"
#include "zg/numth.hpp"

namespace zg {

class ring_element {
 public:
  explicit ring_element(std::shared_ptr<const group> g) : grp_(std::move(g)) {
    if (!grp_) throw precondition_error("ring element needs a group");
  }

  static ring_element zero(std::shared_ptr<const group> g) { return ring_element(std::move(g)); }

  static ring_element one(std::shared_ptr<const group> g) {
    ring_element u(std::move(g));
    u.coeff_[u.grp().identity()] = 1;
    return u;
  }

  static ring_element of_element(std::shared_ptr<const group> g, int32_t idx) {
    ring_element u(std::move(g));
    u.grp().check_element(idx, "element");
    u.coeff_[idx] = 1;
    return u;
  }

  const group& grp() const { return *grp_; }
  const std::shared_ptr<const group>& grp_ptr() const { return grp_; }

  // Coefficient map holds no explicit zeros; it is the canonical form used
  // by equality comparison.
  const std::map<int32_t, int_t>& coeffs() const { return coeff_; }

  int_t coeff(int32_t idx) const {
    auto it = coeff_.find(idx);
    return it == coeff_.end() ? int_t(0) : it->second;
  }

  void add_term(int32_t idx, const int_t& value) {
    grp().check_element(idx, "element");
    if (value == 0) return;
    auto it = coeff_.try_emplace(idx, 0).first;
    it->second += value;
    if (it->second == 0) coeff_.erase(it);
  }

  bool is_zero() const { return coeff_.empty(); }
  int support_size() const { return static_cast<int>(coeff_.size()); }

  bool operator==(const ring_element& o) const {
    return grp_.get() == o.grp_.get() && coeff_ == o.coeff_;
  }

 private:
  std::shared_ptr<const group> grp_;
  std::map<int32_t, int_t> coeff_;
};

namespace detail {

inline void check_same_group(const ring_element& u, const ring_element& v,
                             const char* what) {
  if (u.grp_ptr().get() != v.grp_ptr().get())
    throw precondition_error(std::string(what) + " over different groups");
}

}  // namespace detail

inline ring_element ring_add(const ring_element& u, const ring_element& v) {
  detail::check_same_group(u, v, "adding elements");
  ring_element out = u;
  for (const auto& [g, c] : v.coeffs()) out.add_term(g, c);
  return out;
}

inline ring_element ring_neg(const ring_element& u) {
  ring_element out(u.grp_ptr());
  for (const auto& [g, c] : u.coeffs()) out.add_term(g, -c);
  return out;
}

inline ring_element ring_sub(const ring_element& u, const ring_element& v) {
  return ring_add(u, ring_neg(v));
}

inline ring_element ring_scale(const int_t& c, const ring_element& u) {
  ring_element out(u.grp_ptr());
  for (const auto& [g, a] : u.coeffs()) out.add_term(g, c * a);
  return out;
}

inline ring_element ring_mul(const ring_element& u, const ring_element& v) {
  detail::check_same_group(u, v, "multiplying elements");
  const group& G = u.grp();
  ring_element out(u.grp_ptr());
  for (const auto& [g, a] : u.coeffs())
    for (const auto& [h, b] : v.coeffs()) out.add_term(G.mul(g, h), a * b);
  return out;
}

inline ring_element operator+(const ring_element& u, const ring_element& v) { return ring_add(u, v); }
inline ring_element operator-(const ring_element& u, const ring_element& v) { return ring_sub(u, v); }
inline ring_element operator-(const ring_element& u) { return ring_neg(u); }
inline ring_element operator*(const ring_element& u, const ring_element& v) { return ring_mul(u, v); }
inline ring_element operator*(const int_t& c, const ring_element& u) { return ring_scale(c, u); }

// u^q for q >= 0 by repeated squaring.
inline ring_element ring_pow(ring_element base, long long q) {
  if (q < 0) throw precondition_error("ring_pow requires q >= 0");
  ring_element acc = ring_element::one(base.grp_ptr());
  while (q > 0) {
    if (q & 1) acc = ring_mul(acc, base);
    q >>= 1;
    if (q) base = ring_mul(base, base);
  }
  return acc;
}

// u^q by naive q-fold multiplication; the independent check for ring_pow.
inline ring_element ring_pow_naive(const ring_element& u, long long q) {
  if (q < 0) throw precondition_error("ring_pow_naive requires q >= 0");
  ring_element acc = ring_element::one(u.grp_ptr());
  for (long long i = 0; i < q; ++i) acc = ring_mul(acc, u);
  return acc;
}

// ---------------------------------------------------------------------------
// Augmentations and traces.

// Sum of all coefficients; a ring homomorphism ZG -> Z.
inline int_t augmentation(const ring_element& u) {
  int_t s = 0;
  for (const auto& [g, c] : u.coeffs()) s += c;
  return s;
}

// Sum of the coefficients over one conjugacy class.
inline int_t partial_augmentation(const ring_element& u, int class_id) {
  const class_table& ct = u.grp().classes();
  if (class_id < 0 || class_id >= ct.count())
    throw precondition_error("class id out of range");
  int_t s = 0;
  for (const auto& [g, c] : u.coeffs())
    if (ct.class_of(g) == class_id) s += c;
  return s;
}

// Partial augmentation addressed by any member of the class.
inline int_t partial_augmentation_at(const ring_element& u, int32_t element) {
  u.grp().check_element(element, "element");
  return partial_augmentation(u, u.grp().classes().class_of(element));
}

// The full vector of partial augmentations, in canonical class order.
class pa_vector {
 public:
  pa_vector(std::shared_ptr<const group> g, std::vector<int_t> v)
      : grp_(std::move(g)), v_(std::move(v)) {
    if (!grp_) throw precondition_error("pa_vector needs a group");
    if (static_cast<int>(v_.size()) != grp_->classes().count())
      throw precondition_error("pa_vector length differs from class count");
  }

  const group& grp() const { return *grp_; }
  const std::shared_ptr<const group>& grp_ptr() const { return grp_; }
  int size() const { return static_cast<int>(v_.size()); }
  const int_t& operator[](int c) const { return v_.at(c); }
  const std::vector<int_t>& values() const { return v_; }

  bool operator==(const pa_vector& o) const {
    return grp_.get() == o.grp_.get() && v_ == o.v_;
  }

 private:
  std::shared_ptr<const group> grp_;
  std::vector<int_t> v_;
};

inline pa_vector partial_augmentations(const ring_element& u) {
  const class_table& ct = u.grp().classes();
  std::vector<int_t> v(ct.count(), int_t(0));
  for (const auto& [g, c] : u.coeffs()) v[ct.class_of(g)] += c;
  return pa_vector(u.grp_ptr(), std::move(v));
}

// Generalized trace: the coefficient sum over elements of order exactly p^n.
// n = 0 gives the coefficient of the identity.
inline int_t generalized_trace(const ring_element& u, long long p, int n) {
  if (!is_prime(p)) throw precondition_error("generalized_trace requires p prime");
  if (n < 0) throw precondition_error("generalized_trace requires n >= 0");
  long long target = 1;
  for (int i = 0; i < n; ++i) {
    target *= p;
    if (target > u.grp().order()) return 0;  // no element has that order
  }
  int_t s = 0;
  for (const auto& [g, c] : u.coeffs())
    if (u.grp().element_order(g) == target) s += c;
  return s;
}

// ---------------------------------------------------------------------------
// Inversion over Q and torsion order.

// Exact inverse in QZ-terms: solves u * v = 1 by Gauss-Jordan elimination of
// the left-multiplication matrix over the rationals, then accepts only
// integer solutions. Returns nullopt when u is not invertible in QG or the
// inverse is not integral. A found inverse is verified on both sides.
inline std::optional<ring_element> inverse(const ring_element& u) {
  const group& G = u.grp();
  const int n = G.order();
  if (u.is_zero()) return std::nullopt;

  // Column h of A holds the coefficients of u * h over the group basis:
  // (u * h)[w] = u[w * h^{-1}].
  std::vector<std::vector<rat_t>> a(n, std::vector<rat_t>(n + 1, rat_t(0)));
  for (int32_t w = 0; w < n; ++w)
    for (int32_t h = 0; h < n; ++h) {
      int_t c = u.coeff(G.mul(w, G.inv(h)));
      if (c != 0) a[w][h] = rat_t(c);
    }
  a[G.identity()][n] = 1;

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;  // singular: u is not invertible in QG
    std::swap(a[col], a[pivot]);
    rat_t inv_p = rat_t(1) / a[col][col];
    for (int c = col; c <= n; ++c) a[col][c] *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      rat_t f = a[r][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }

  ring_element v(u.grp_ptr());
  for (int32_t h = 0; h < n; ++h) {
    if (!is_integral(a[h][n])) return std::nullopt;  // unit of QG but not of ZG
    v.add_term(h, to_int(a[h][n]));
  }

  ring_element e = ring_element::one(u.grp_ptr());
  if (!(ring_mul(u, v) == e) || !(ring_mul(v, u) == e))
    throw error("internal: inverse verification failed");
  return v;
}

inline bool is_unit(const ring_element& u) { return inverse(u).has_value(); }

// Least d >= 1 with u^d = 1, searching divisors of exp(G) first (the true
// order of a torsion unit divides the exponent), then 1..cap as a fallback.
// cap = 0 means cap = exp(G). Requires augmentation +-1, which every unit
// has; returns nullopt if no power up to the cap is 1.
inline std::optional<long long> torsion_order(const ring_element& u, long long cap = 0) {
  int_t aug = augmentation(u);
  if (aug != 1 && aug != -1)
    throw precondition_error("torsion_order requires a unit (augmentation must be +-1)");
  const long long e = u.grp().exponent();
  if (cap <= 0) cap = e;
  ring_element one = ring_element::one(u.grp_ptr());
  for (long long d : divisors(e)) {
    if (d > cap) break;
    if (ring_pow(u, d) == one) return d;
  }
  ring_element w = u;
  for (long long d = 1; d <= cap; ++d) {
    if (w == one) return d;
    if (d < cap) w = ring_mul(w, u);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Unit constructions.

// Bicyclic unit 1 + (1 - h) g hhat with hhat the sum over <h>. Its inverse
// is 1 - (1 - h) g hhat, because ((1 - h) g hhat)^2 = 0.
inline ring_element bicyclic_unit(std::shared_ptr<const group> gptr, int32_t gidx, int32_t hidx) {
  const group& G = *gptr;
  G.check_element(gidx, "g");
  G.check_element(hidx, "h");
  ring_element hhat(gptr);
  int32_t t = G.identity();
  for (int i = 0; i < G.element_order(hidx); ++i) {
    hhat.add_term(t, 1);
    t = G.mul(t, hidx);
  }
  ring_element one = ring_element::one(gptr);
  ring_element h = ring_element::of_element(gptr, hidx);
  ring_element g = ring_element::of_element(gptr, gidx);
  ring_element c = ring_mul(ring_mul(ring_sub(one, h), g), hhat);
  return ring_add(one, c);
}

// Sum over a subgroup given as an element list. Validates closure under
// products and inverses. Returns (hhat, |H|); hhat^2 = |H| * hhat.
inline std::pair<ring_element, long long> subgroup_sum(std::shared_ptr<const group> gptr,
                                                       const std::vector<int32_t>& members) {
  const group& G = *gptr;
  if (members.empty()) throw precondition_error("subgroup must be nonempty");
  std::set<int32_t> h;
  for (int32_t m : members) {
    G.check_element(m, "subgroup member");
    if (!h.insert(m).second)
      throw precondition_error("subgroup list repeats element " + std::to_string(m));
  }
  for (int32_t a : h) {
    if (!h.count(G.inv(a)))
      throw precondition_error("subgroup not closed under inverses at " + std::to_string(a));
    for (int32_t b : h)
      if (!h.count(G.mul(a, b)))
        throw precondition_error("subgroup not closed under products at (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  ring_element sum(gptr);
  for (int32_t a : h) sum.add_term(a, 1);
  return {sum, static_cast<long long>(h.size())};
}

// Conjugate v -> b v b^{-1} by a unit b.
inline ring_element conjugate_by_unit(const ring_element& b, const ring_element& v) {
  detail::check_same_group(b, v, "conjugating");
  std::optional<ring_element> binv = inverse(b);
  if (!binv) throw precondition_error("conjugating element is not a unit");
  return ring_mul(ring_mul(b, v), *binv);
}

}  // namespace zg
