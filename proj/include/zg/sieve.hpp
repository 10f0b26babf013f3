// zg/sieve.hpp
//
// Constraint sieve on hypothetical partial-augmentation vectors. For a
// hypothesized torsion-unit order o in a group G, the admissible vectors
// (nu_x per class x) must satisfy
//   - augmentation: sum of all nu_x = 1;
//   - vanishing identity coefficient when o > 1;
//   - for each instance (n, k) with gcd(k, exp) = 1, n = k = 1 (mod o):
//       nu_s = sum_x c_{s,x} nu_x, with c_{s,x} summing mu(r) over divisor
//       pairs r | t | n for which class(x^k) = class(s) and that class lies
//       in power_image(k*n*r/t);
//   - per-class bounds |nu_x| <= floor(sqrt(|x^G|)).
// Every group element of order o satisfies all of the above, so its vector
// must survive: the sieve narrows candidates, it never rules real ones out.
//
// The enumerator walks the bounded integer box depth-first in lexicographic
// order with partial-sum pruning; certify() re-evaluates every constraint
// independently and is the enumerator's oracle in tests.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "zg/errors.hpp"
#include "zg/group_ring.hpp"
#include "zg/numth.hpp"

namespace zg {

inline constexpr long long default_sieve_cap = 10000000;

struct sieve_problem {
  std::shared_ptr<const group> grp;
  long long order = 1;
  std::vector<std::pair<long long, long long>> instances;  // (n, k)
  long long enumeration_cap = default_sieve_cap;
};

// Default instance set: all k < exp with gcd(k, exp) = 1 and k = 1 (mod o),
// crossed with n in {o*j + 1 : j = 0..3}.
inline sieve_problem make_sieve_problem(std::shared_ptr<const group> grp, long long order,
                                        long long cap = default_sieve_cap) {
  if (!grp) throw precondition_error("sieve needs a group");
  if (order < 1) throw precondition_error("sieve order must be >= 1");
  sieve_problem prob;
  prob.grp = std::move(grp);
  prob.order = order;
  prob.enumeration_cap = cap;
  const long long e = prob.grp->exponent();
  for (long long k = 1; k < std::max<long long>(e, 2); ++k) {
    if (std::gcd(k, e) != 1 || k % order != 1 % order) continue;
    for (long long j = 0; j <= 3; ++j) prob.instances.emplace_back(order * j + 1, k);
  }
  return prob;
}

// Per-class absolute bounds on nu. For o = 1 the only unit of order 1 is the
// identity, so every non-identity class is pinned to zero; this keeps the
// documented o = 1 answer {(1, 0, ..., 0)} while remaining a sound bound.
inline std::vector<long long> sieve_class_bounds(const sieve_problem& prob) {
  const class_table& ct = prob.grp->classes();
  std::vector<long long> bounds(ct.count());
  for (int c = 0; c < ct.count(); ++c)
    bounds[c] = prob.order == 1 && c != ct.identity_class()
                    ? 0
                    : isqrt_ll(ct.at(c).size);
  return bounds;
}

struct constraint {
  enum class kind { augmentation, berman_higman, eq1_relation, class_bound };

  kind k = kind::augmentation;
  int target_class = -1;            // eq1_relation, class_bound
  long long bound = 0;              // class_bound
  long long n = 0, kexp = 0;        // eq1_relation instance
  std::vector<long long> coeff;     // eq1_relation: c_{s,x} per class x

  bool satisfied(const std::vector<long long>& v) const {
    switch (k) {
      case kind::augmentation: {
        long long s = 0;
        for (long long x : v) s += x;
        return s == 1;
      }
      case kind::berman_higman:
        return v.at(target_class) == 0;
      case kind::eq1_relation: {
        long long rhs = 0;
        for (std::size_t x = 0; x < v.size(); ++x) rhs += coeff.at(x) * v[x];
        return v.at(target_class) == rhs;
      }
      case kind::class_bound:
        return v.at(target_class) >= -bound && v.at(target_class) <= bound;
    }
    return false;
  }

  std::string describe() const {
    switch (k) {
      case kind::augmentation:
        return "augmentation: sum nu = 1";
      case kind::berman_higman:
        return "berman_higman: nu_" + std::to_string(target_class) + " = 0";
      case kind::eq1_relation: {
        std::string s = "eq1 n=" + std::to_string(n) + " k=" + std::to_string(kexp) +
                        " s=" + std::to_string(target_class) + ": nu_s =";
        bool any = false;
        for (std::size_t x = 0; x < coeff.size(); ++x) {
          if (coeff[x] == 0) continue;
          s += (any ? " + " : " ") + std::to_string(coeff[x]) + "*nu_" + std::to_string(x);
          any = true;
        }
        if (!any) s += " 0";
        return s;
      }
      case kind::class_bound:
        return "class_bound: |nu_" + std::to_string(target_class) + "| <= " +
               std::to_string(bound);
    }
    return "";
  }
};

inline std::vector<constraint> build_constraints(const sieve_problem& prob) {
  const group& G = *prob.grp;
  const class_table& ct = G.classes();
  const long long e = G.exponent();
  std::vector<constraint> out;

  constraint aug;
  aug.k = constraint::kind::augmentation;
  out.push_back(std::move(aug));

  if (prob.order > 1) {
    constraint bh;
    bh.k = constraint::kind::berman_higman;
    bh.target_class = ct.identity_class();
    out.push_back(std::move(bh));
  }

  for (auto [n, kk] : prob.instances) {
    if (n < 1 || kk < 1 || std::gcd(kk, e) != 1 || n % prob.order != 1 % prob.order ||
        kk % prob.order != 1 % prob.order)
      throw precondition_error("invalid sieve instance (n, k) = (" + std::to_string(n) +
                               ", " + std::to_string(kk) + ") for order " +
                               std::to_string(prob.order));

    std::vector<int> sigma_k = power_class_map(G, kk);
    // coeffs[s][x] accumulates mu(r) whenever class(x^k) = s lies in the
    // power image of exponent k*n*r/t.
    std::vector<std::vector<long long>> coeffs(ct.count(),
                                               std::vector<long long>(ct.count(), 0));
    for (auto [r, t] : divisor_pairs(n)) {
      int mu = moebius(r);
      if (mu == 0) continue;
      long long exp_rt = kk * (n / t) * r;
      long long canonical = exp_rt % e == 0 ? e : exp_rt % e;
      std::vector<char> mask = power_image_mask(G, canonical);
      for (int x = 0; x < ct.count(); ++x)
        if (mask[sigma_k[x]]) coeffs[sigma_k[x]][x] += mu;
    }
    for (int s = 0; s < ct.count(); ++s) {
      constraint c;
      c.k = constraint::kind::eq1_relation;
      c.target_class = s;
      c.n = n;
      c.kexp = kk;
      c.coeff = std::move(coeffs[s]);
      out.push_back(std::move(c));
    }
  }

  std::vector<long long> bounds = sieve_class_bounds(prob);
  for (int c = 0; c < ct.count(); ++c) {
    constraint cb;
    cb.k = constraint::kind::class_bound;
    cb.target_class = c;
    cb.bound = bounds[c];
    out.push_back(std::move(cb));
  }
  return out;
}

// All integer vectors inside the class bounds satisfying every constraint,
// in lexicographic order.
inline std::vector<pa_vector> enumerate_admissible(const sieve_problem& prob) {
  const class_table& ct = prob.grp->classes();
  const int nc = ct.count();
  std::vector<long long> bounds = sieve_class_bounds(prob);

  int_t box = 1;
  for (long long b : bounds) box *= 2 * int_t(b) + 1;
  if (box > prob.enumeration_cap)
    throw budget_error("sieve search space " + box.str() + " exceeds cap " +
                       std::to_string(prob.enumeration_cap));

  std::vector<constraint> cons = build_constraints(prob);
  std::vector<const constraint*> eq1;
  for (const constraint& c : cons)
    if (c.k == constraint::kind::eq1_relation) eq1.push_back(&c);
  const bool identity_zero = prob.order > 1;

  // Suffix sums of bounds let the search prune on the augmentation total.
  std::vector<long long> suffix(nc + 1, 0);
  for (int i = nc - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] + (identity_zero && i == ct.identity_class() ? 0 : bounds[i]);

  std::vector<pa_vector> out;
  std::vector<long long> v(nc, 0);
  auto dfs = [&](auto&& self, int depth, long long partial) -> void {
    if (depth == nc) {
      if (partial != 1) return;
      for (const constraint* c : eq1)
        if (!c->satisfied(v)) return;
      std::vector<int_t> vals(v.begin(), v.end());
      out.emplace_back(prob.grp, std::move(vals));
      return;
    }
    long long lo = -bounds[depth], hi = bounds[depth];
    if (identity_zero && depth == ct.identity_class()) lo = hi = 0;
    for (long long x = lo; x <= hi; ++x) {
      long long p = partial + x;
      // Remaining classes can shift the sum by at most the suffix bound.
      if (p - suffix[depth + 1] > 1 || p + suffix[depth + 1] < 1) continue;
      v[depth] = x;
      self(self, depth + 1, p);
    }
    v[depth] = 0;
  };
  dfs(dfs, 0, 0);
  return out;
}

struct certify_entry {
  std::string description;
  bool satisfied = false;
};

// Independent re-evaluation of every constraint on a candidate vector.
inline std::vector<certify_entry> certify(const pa_vector& vec, const sieve_problem& prob) {
  if (vec.grp_ptr().get() != prob.grp.get())
    throw precondition_error("certify vector belongs to a different group");
  std::vector<long long> v;
  v.reserve(vec.size());
  for (const int_t& x : vec.values()) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
      throw precondition_error("certify vector entry out of range");
    v.push_back(static_cast<long long>(x));
  }
  std::vector<certify_entry> out;
  for (const constraint& c : build_constraints(prob))
    out.push_back({c.describe(), c.satisfied(v)});
  return out;
}

inline bool all_satisfied(const std::vector<certify_entry>& entries) {
  return std::all_of(entries.begin(), entries.end(),
                     [](const certify_entry& e) { return e.satisfied; });
}

struct sieve_result {
  sieve_problem problem;
  std::vector<std::string> constraints_used;
  std::vector<pa_vector> admissible;
  std::vector<int32_t> witnesses;  // class reps of real elements of the order
};

inline sieve_result run_sieve(const sieve_problem& prob) {
  sieve_result res{prob, {}, {}, {}};
  for (const constraint& c : build_constraints(prob))
    res.constraints_used.push_back(c.describe());
  res.admissible = enumerate_admissible(prob);
  const class_table& ct = prob.grp->classes();
  for (int c = 0; c < ct.count(); ++c)
    if (prob.grp->element_order(ct.at(c).rep) == prob.order)
      res.witnesses.push_back(ct.at(c).rep);
  return res;
}

inline nlohmann::json to_json(const sieve_result& res) {
  nlohmann::json j;
  j["group"] = res.problem.grp->id();
  j["order"] = res.problem.order;
  j["constraints_used"] = res.constraints_used;
  nlohmann::json adm = nlohmann::json::array();
  for (const pa_vector& v : res.admissible) {
    nlohmann::json row = nlohmann::json::array();
    for (const int_t& x : v.values()) row.push_back(static_cast<long long>(x));
    adm.push_back(std::move(row));
  }
  j["admissible"] = std::move(adm);
  j["witnesses"] = res.witnesses;
  return j;
}

}  // namespace zg
