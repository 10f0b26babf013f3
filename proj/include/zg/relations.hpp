// zg/relations.hpp
//
// The verification relations. All four share one right-hand side shape,
// realized once as rhs_sum:
//
//   rhs(s) = sum over pairs (r, t) with r | t | outer_n of
//              mu(r) * sum over classes x with
//                        class(x^inner) = class(s)  and
//                        class(x^inner) in power_image(base*r/t)
//                      of paVec[x]
//
// The verify_* wrappers fix (paVec, outer_n, base, inner) per relation:
//
//   thm2(u, q, p):  lhs = nu_s(u^q),   paVec = pa(u^q'), outer = q', base = q,
//                   inner = m, verdict mod p, where q = q'*m with m the
//                   p-part of q. Holds for every u in ZG.
//   eq9(u, n, k):   lhs = nu_s(u^(nk)), paVec = pa(u^n), outer = n,
//                   base = k*n, inner = k, exact. Requires u a normalized
//                   torsion unit and gcd(k, exp(G)) = 1.
//   thm1(u, n, k):  lhs = nu_s(u),     paVec = pa(u),   outer = n,
//                   base = k*n, inner = k, exact. Additionally requires
//                   n = k = 1 mod |u|, which gives u^n = u and u^(nk) = u.
//   cor1(u, b, q, p, mode): lhs = nu_s(u) for u with u^2 = b*u, p not
//                   dividing b; paVec = pa(u), outer = q', base = q,
//                   inner = m; verdict mod p, or exact when p is at least
//                   cor1_prime_bound(q', b, |G|).

#pragma once

#include <list>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zg/errors.hpp"
#include "zg/group_ring.hpp"
#include "zg/numth.hpp"
#include "zg/report.hpp"

namespace zg {

namespace detail {

// Precomputed evaluator for rhs(s) over all classes s: per-class bucket sums
// of paVec under x -> class(x^inner), plus one (mu, membership mask) pair per
// divisor pair. eval(s) is then O(number of divisor pairs).
class rhs_evaluator {
 public:
  rhs_evaluator(const pa_vector& pav, long long outer_n, long long base, long long inner) {
    if (outer_n < 1 || base < 1 || inner < 1)
      throw precondition_error("rhs_sum exponents must be positive");
    const group& G = pav.grp();
    const class_table& ct = G.classes();

    std::vector<int> sigma = power_class_map(G, inner);
    bucket_.assign(ct.count(), int_t(0));
    for (int x = 0; x < ct.count(); ++x) bucket_[sigma[x]] += pav[x];

    // Exponents base*r/t repeat modulo the group exponent; masks are shared.
    std::map<long long, const std::vector<char>*> mask_cache;
    const long long e = G.exponent();
    for (auto [r, t] : divisor_pairs(outer_n)) {
      if ((base * r) % t != 0)
        throw precondition_error("rhs_sum divisor pair (" + std::to_string(r) + ", " +
                                 std::to_string(t) + ") yields a non-integer exponent");
      int mu = moebius(r);
      if (mu == 0) continue;  // the pair contributes nothing
      long long exp_rt = base * r / t;
      long long canonical = exp_rt % e == 0 ? e : exp_rt % e;
      auto it = mask_cache.find(canonical);
      if (it == mask_cache.end()) {
        masks_.push_back(power_image_mask(G, canonical));
        it = mask_cache.emplace(canonical, &masks_.back()).first;
      }
      terms_.push_back({mu, it->second});
    }
  }

  int_t eval(int s) const {
    int_t acc = 0;
    for (const term& t : terms_)
      if ((*t.in_image)[s]) acc += t.mu * bucket_[s];
    return acc;
  }

 private:
  struct term {
    int mu;
    const std::vector<char>* in_image;
  };
  std::vector<int_t> bucket_;
  std::list<std::vector<char>> masks_;  // stable addresses for term pointers
  std::vector<term> terms_;
};

}  // namespace detail

// Single-class evaluation of the shared right-hand side.
inline int_t rhs_sum(const pa_vector& pav, long long outer_n, long long base,
                     long long inner_power, int s) {
  const class_table& ct = pav.grp().classes();
  if (s < 0 || s >= ct.count()) throw precondition_error("class id out of range");
  return detail::rhs_evaluator(pav, outer_n, base, inner_power).eval(s);
}

// ---------------------------------------------------------------------------
// Relation verdicts.

namespace detail {

inline bool congruent(const int_t& a, const int_t& b, long long p) {
  return (a - b) % p == 0;
}

// Assemble a per-class report comparing lhs(s) against evaluator rhs(s).
template <typename LhsFn>
inline void fill_rows(verification_report& rep, const group& G, LhsFn&& lhs_of,
                      const rhs_evaluator& rhs, std::optional<long long> modulus) {
  const class_table& ct = G.classes();
  for (int s = 0; s < ct.count(); ++s) {
    report_row row;
    row.class_rep = ct.at(s).rep;
    row.lhs = lhs_of(s);
    row.rhs = rhs.eval(s);
    row.modulus = modulus;
    row.pass = modulus ? congruent(row.lhs, row.rhs, *modulus) : row.lhs == row.rhs;
    rep.add_row(std::move(row));
  }
}

}  // namespace detail

// Congruence nu_s(u^q) = rhs (mod p) for arbitrary u in ZG.
inline verification_report verify_theorem2(const ring_element& u, long long q, long long p) {
  if (q < 1) throw precondition_error("thm2 requires q >= 1");
  if (!is_prime(p)) throw precondition_error("thm2 requires p prime");
  auto [qprime, m] = p_part_split(q, p);

  verification_report rep;
  rep.group_id = u.grp().id();
  rep.relation = "thm2";
  rep.params = {{"q", q}, {"p", p}, {"qprime", qprime}, {"m", m}};

  pa_vector lhs_pa = partial_augmentations(ring_pow(u, q));
  pa_vector rhs_pa = partial_augmentations(ring_pow(u, qprime));
  detail::rhs_evaluator rhs(rhs_pa, qprime, q, m);
  detail::fill_rows(rep, u.grp(), [&](int s) { return lhs_pa[s]; }, rhs, p);
  return rep;
}

namespace detail {

// Shared precondition: u a normalized torsion unit (augmentation 1 and of
// finite order as found by torsion_order), gcd(k, exp(G)) = 1.
inline long long require_normalized_torsion(const ring_element& u, const char* what) {
  if (augmentation(u) != 1)
    throw precondition_error(std::string(what) + " requires a normalized unit (augmentation 1)");
  std::optional<long long> d = torsion_order(u);
  if (!d)
    throw precondition_error(std::string(what) +
                             " requires a torsion unit (no power up to the cap is 1)");
  return *d;
}

inline void require_coprime_to_exponent(long long k, const group& G, const char* what) {
  if (k < 1) throw precondition_error(std::string(what) + " requires k >= 1");
  if (std::gcd(k, G.exponent()) != 1)
    throw precondition_error(std::string(what) + " requires gcd(k, exponent) = 1, got k = " +
                             std::to_string(k) + " with exponent " +
                             std::to_string(G.exponent()));
}

}  // namespace detail

// Exact equality nu_s(u^(nk)) = rhs for normalized torsion u, gcd(k, exp) = 1.
inline verification_report verify_eq9(const ring_element& u, long long n, long long k) {
  if (n < 1) throw precondition_error("eq9 requires n >= 1");
  long long order = detail::require_normalized_torsion(u, "eq9");
  detail::require_coprime_to_exponent(k, u.grp(), "eq9");

  verification_report rep;
  rep.group_id = u.grp().id();
  rep.relation = "eq9";
  rep.params = {{"n", n}, {"k", k}, {"order", order}};

  pa_vector lhs_pa = partial_augmentations(ring_pow(u, n * k));
  pa_vector rhs_pa = partial_augmentations(ring_pow(u, n));
  detail::rhs_evaluator rhs(rhs_pa, n, k * n, k);
  detail::fill_rows(rep, u.grp(), [&](int s) { return lhs_pa[s]; }, rhs, std::nullopt);
  return rep;
}

// Exact equality nu_s(u) = rhs under the stronger residue preconditions
// n = k = 1 (mod |u|), which collapse u^n and u^(nk) to u.
inline verification_report verify_theorem1(const ring_element& u, long long n, long long k) {
  if (n < 1) throw precondition_error("thm1 requires n >= 1");
  long long order = detail::require_normalized_torsion(u, "thm1");
  detail::require_coprime_to_exponent(k, u.grp(), "thm1");
  if (n % order != 1 % order || k % order != 1 % order)
    throw precondition_error("thm1 requires n and k congruent to 1 mod the unit order " +
                             std::to_string(order) + ", got n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));

  verification_report rep;
  rep.group_id = u.grp().id();
  rep.relation = "thm1";
  rep.params = {{"n", n}, {"k", k}, {"order", order}};

  pa_vector pav = partial_augmentations(u);
  detail::rhs_evaluator rhs(pav, n, k * n, k);
  detail::fill_rows(rep, u.grp(), [&](int s) { return pav[s]; }, rhs, std::nullopt);
  return rep;
}

enum class check_mode { congruence, equality };

// Congruence (or, for large p, equality) for idempotent multiples:
// u^2 = beta*u with p not dividing beta.
inline verification_report verify_corollary1(const ring_element& u, long long beta,
                                             long long q, long long p, check_mode mode) {
  if (q < 1) throw precondition_error("cor1 requires q >= 1");
  if (!is_prime(p)) throw precondition_error("cor1 requires p prime");
  if (beta % p == 0)
    throw precondition_error("cor1 requires p not dividing beta, got beta = " +
                             std::to_string(beta) + ", p = " + std::to_string(p));
  if (!(ring_mul(u, u) == ring_scale(int_t(beta), u)))
    throw precondition_error("cor1 requires u^2 = beta*u");
  auto [qprime, m] = p_part_split(q, p);
  if (mode == check_mode::equality) {
    long long bound = cor1_prime_bound(qprime, beta, u.grp().order());
    if (p < bound)
      throw precondition_error("cor1 equality mode requires p >= " + std::to_string(bound) +
                               ", got p = " + std::to_string(p));
  }

  verification_report rep;
  rep.group_id = u.grp().id();
  rep.relation = "cor1";
  rep.params = {{"q", q},
                {"p", p},
                {"beta", beta},
                {"qprime", qprime},
                {"m", m},
                {"mode", mode == check_mode::equality ? "equality" : "congruence"}};

  pa_vector pav = partial_augmentations(u);
  detail::rhs_evaluator rhs(pav, qprime, q, m);
  detail::fill_rows(rep, u.grp(), [&](int s) { return pav[s]; }, rhs,
                    mode == check_mode::congruence ? std::optional<long long>(p) : std::nullopt);
  return rep;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: nu_s(u^q) as a sum over support tuples.

inline constexpr long long default_tuple_budget = 1000000;

// Enumerates all q-tuples over the support of u whose product lies in class s
// and sums the coefficient products. Independent of ring_pow; agrees with it
// on the whole budget domain.
inline int_t oracle_nu_power(const ring_element& u, long long q, int s,
                             long long tuple_budget = default_tuple_budget) {
  if (q < 1) throw precondition_error("oracle_nu_power requires q >= 1");
  const group& G = u.grp();
  const class_table& ct = G.classes();
  if (s < 0 || s >= ct.count()) throw precondition_error("class id out of range");

  std::vector<std::pair<int32_t, int_t>> support(u.coeffs().begin(), u.coeffs().end());
  long long tuples = 1;
  for (long long i = 0; i < q; ++i) {
    tuples *= static_cast<long long>(support.size());
    if (tuples > tuple_budget)
      throw budget_error("oracle_nu_power tuple count exceeds budget " +
                         std::to_string(tuple_budget));
    if (tuples == 0) return 0;
  }

  int_t acc = 0;
  // Depth-first over tuple positions; prefix carries the running product.
  std::vector<std::size_t> choice(q, 0);
  std::vector<int32_t> prod(q + 1);
  std::vector<int_t> weight(q + 1);
  prod[0] = G.identity();
  weight[0] = 1;
  long long depth = 0;
  while (depth >= 0) {
    if (depth == q) {
      if (ct.class_of(prod[q]) == s) acc += weight[q];
      --depth;
      continue;
    }
    if (choice[depth] == support.size()) {
      choice[depth] = 0;
      --depth;
      continue;
    }
    const auto& [g, c] = support[choice[depth]];
    prod[depth + 1] = G.mul(prod[depth], g);
    weight[depth + 1] = weight[depth] * c;
    ++choice[depth];
    ++depth;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Trace-pattern probe for units of prime-power order.

// For a normalized torsion unit of order p^n, evaluates the generalized
// traces Tr^(i)(u) for i = 0..n and reports whether they follow the pattern
// (0, ..., 0, 1). A deviating pattern is a reported finding (pass = false),
// never an exception; violated preconditions are errors.
inline trace_probe_report probe_trace_conjecture(const ring_element& u, long long p) {
  if (!is_prime(p)) throw precondition_error("trace probe requires p prime");
  long long order = detail::require_normalized_torsion(u, "trace probe");
  if (order == 1)
    throw precondition_error("trace probe requires a nontrivial unit (order p^n, n >= 1)");
  long long rest = order;
  int n = 0;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1)
    throw precondition_error("trace probe requires the unit order to be a power of p, got order " +
                             std::to_string(order) + " with p = " + std::to_string(p));

  trace_probe_report rep;
  rep.group_id = u.grp().id();
  rep.p = p;
  rep.unit_order = order;
  rep.n = n;
  rep.element_coeffs = u.coeffs();
  rep.pass = true;
  for (int i = 0; i <= n; ++i) {
    rep.traces.push_back(generalized_trace(u, p, i));
    rep.pass = rep.pass && rep.traces.back() == (i == n ? 1 : 0);
  }
  return rep;
}

}  // namespace zg
