// zg/sampling.hpp
//
// Deterministic random generation for theorem sweeps. All randomness flows
// from an explicit master seed; per-trial seeds are derived by counter so a
// failing trial is reproducible in isolation. Uniform draws use explicit
// modulo mapping on the raw 64-bit stream: std::uniform_int_distribution is
// not specified identically across standard libraries, and byte-identical
// reports across platforms matter more here than negligible modulo bias.

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "zg/errors.hpp"
#include "zg/group_ring.hpp"
#include "zg/relations.hpp"

namespace zg {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t trial_seed(uint64_t master, uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

class det_rng {
 public:
  explicit det_rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniformly-ish in [0, m); m up to 2^32 keeps the modulo bias negligible.
  long long below(long long m) {
    if (m <= 0) throw precondition_error("det_rng::below requires m > 0");
    return static_cast<long long>(next() % static_cast<uint64_t>(m));
  }

  long long in_range(long long lo, long long hi) {
    if (lo > hi) throw precondition_error("det_rng::in_range requires lo <= hi");
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

// Random element with coefficients in [-coeff_bound, coeff_bound] on a
// support of up to max_support distinct group elements (0 = whole group).
inline ring_element random_element(std::shared_ptr<const group> grp, det_rng& rng,
                                   long long coeff_bound, int max_support = 0) {
  const int n = grp->order();
  if (max_support <= 0 || max_support > n) max_support = n;
  int support = 1 + static_cast<int>(rng.below(max_support));

  // Partial Fisher-Yates: the first `support` slots become a uniform sample.
  std::vector<int32_t> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < support; ++i) {
    int j = i + static_cast<int>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }

  ring_element u(std::move(grp));
  for (int i = 0; i < support; ++i) {
    long long c = rng.in_range(-coeff_bound, coeff_bound);
    u.add_term(idx[i], int_t(c));  // zero draws shrink the support; fine
  }
  return u;
}

struct thm2_sweep_config {
  long long trials = 200;
  long long coeff_bound = 3;
  long long q_max = 12;
  std::vector<long long> primes{2, 3, 5, 7};
  uint64_t seed = 0;
};

struct thm2_trial {
  ring_element element;
  bool pass = true;
  std::vector<verification_report> failures;  // full reports for q,p that failed
};

struct thm2_sweep_result {
  std::vector<thm2_trial> trials;
  bool pass = true;
};

// Seeded batch: for each trial element, verify the congruence for all
// q = 1..q_max and the configured primes. Failures carry the full report.
inline thm2_sweep_result random_test_thm2(std::shared_ptr<const group> grp,
                                          const thm2_sweep_config& cfg) {
  if (cfg.trials < 1) throw precondition_error("random test needs trials >= 1");
  if (cfg.q_max < 1) throw precondition_error("random test needs q_max >= 1");
  if (cfg.primes.empty()) throw precondition_error("random test needs at least one prime");
  for (long long p : cfg.primes)
    if (!is_prime(p))
      throw precondition_error("random test prime list contains non-prime " +
                               std::to_string(p));

  thm2_sweep_result result;
  for (long long t = 0; t < cfg.trials; ++t) {
    det_rng rng(trial_seed(cfg.seed, static_cast<uint64_t>(t)));
    thm2_trial trial{random_element(grp, rng, cfg.coeff_bound), true, {}};
    for (long long q = 1; q <= cfg.q_max; ++q)
      for (long long p : cfg.primes) {
        verification_report rep = verify_theorem2(trial.element, q, p);
        if (!rep.pass) {
          trial.pass = false;
          trial.failures.push_back(std::move(rep));
        }
      }
    result.pass = result.pass && trial.pass;
    result.trials.push_back(std::move(trial));
  }
  return result;
}

}  // namespace zg
