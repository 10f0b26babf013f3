// zg/numth.hpp
//
// Elementary number theory used by the verification relations: the Moebius
// function, divisor enumeration, p-part decomposition, deterministic
// primality at desk scale, primes in arithmetic progressions, and the two
// prime thresholds that switch congruences to exact equalities.

#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "zg/errors.hpp"
#include "zg/integers.hpp"

namespace zg {

// Moebius function: 0 on non-squarefree n, else (-1)^(number of prime factors).
inline int moebius(long long n) {
  if (n < 1) throw precondition_error("moebius requires n >= 1");
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// All positive divisors of n, ascending.
inline std::vector<long long> divisors(long long n) {
  if (n < 1) throw precondition_error("divisors requires n >= 1");
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// All pairs (r, t) with r | t | n, ordered by (t, r).
inline std::vector<std::pair<long long, long long>> divisor_pairs(long long n) {
  std::vector<std::pair<long long, long long>> out;
  for (long long t : divisors(n))
    for (long long r : divisors(t)) out.emplace_back(r, t);
  return out;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Split q as q' * m with m the p-part of q and gcd(q', p) = 1.
// Returns (q', m).
inline std::pair<long long, long long> p_part_split(long long q, long long p) {
  if (q < 1) throw precondition_error("p_part_split requires q >= 1");
  if (!is_prime(p)) throw precondition_error("p_part_split requires p prime");
  long long m = 1;
  while (q % p == 0) {
    q /= p;
    m *= p;
  }
  return {q, m};
}

// Least prime >= lower congruent to k mod e. Requires gcd(k, e) = 1 so that
// the progression contains infinitely many primes.
inline long long prime_in_progression(long long k, long long e, long long lower) {
  if (e < 1) throw precondition_error("prime_in_progression requires e >= 1");
  if (std::gcd(k, e) != 1)
    throw precondition_error("prime_in_progression requires gcd(k, e) = 1");
  long long rem = ((k % e) + e) % e;
  long long x = lower < 2 ? 2 : lower;
  long long shift = ((rem - x) % e + e) % e;
  x += shift;
  while (!is_prime(x)) x += e;
  return x;
}

// Least B with B*B > a, for exact threshold computations.
inline int_t least_exceeding_sqrt(const int_t& a) {
  if (a < 0) return 0;
  return isqrt_int(a) + 1;
}

// Threshold above which the order-n congruence for a torsion unit becomes an
// exact equality: least prime-free bound p > (2 sqrt(n))^2 * |G|^(3/2),
// computed exactly as the least integer B with B^2 > 16 n^2 |G|^3.
inline long long thm1_prime_bound(long long n, long long group_order) {
  if (n < 1 || group_order < 1)
    throw precondition_error("thm1_prime_bound requires n >= 1 and |G| >= 1");
  int_t a = int_t(4) * n;
  a *= a;                              // (4n)^2 = ((2 sqrt(n))^2)^2
  a *= int_t(group_order) * group_order * group_order;
  return static_cast<long long>(least_exceeding_sqrt(a));
}

// Same for idempotent multiples: least integer B with B^2 > (4 q' |beta|)^2 * |G|^3.
inline long long cor1_prime_bound(long long qprime, long long beta, long long group_order) {
  if (qprime < 1 || group_order < 1)
    throw precondition_error("cor1_prime_bound requires q' >= 1 and |G| >= 1");
  int_t a = int_t(4) * qprime * (beta < 0 ? -beta : beta);
  a *= a;
  a *= int_t(group_order) * group_order * group_order;
  return static_cast<long long>(least_exceeding_sqrt(a));
}

}  // namespace zg
