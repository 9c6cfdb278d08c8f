#pragma once

#include <cstdint>
#include <random>

#include "hecke8/metaplectic.hpp"

namespace hecke8 {

// Published default seed for every sampling-based check.
constexpr std::uint64_t kDefaultSeed = 271828182845904523ULL;

// Deterministic sampler for the property checks.  SL_2 elements are drawn as
// x(s) h(u) y(t) w(2^j) with s,t of valuation in [-4,4], u odd in [-31,31]
// and j in [-3,3]; the w factor is dropped and t set to 0 some of the time so
// both branches of tau/s_2 get exercised.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  long uniform(long lo, long hi);
  Int odd(long bound);  // random odd integer in [-bound, bound]
  Dyadic dyadic(int val_lo = -4, int val_hi = 4, long num_bound = 31);
  Dyadic dyadic_nonzero(int val_lo = -4, int val_hi = 4, long num_bound = 31);

  Mat2 random_sl2();
  Mat2 random_K0_8();
  Mat2 random_K1_8();
  MetaElement random_meta();       // random_sl2 with a random sign
  MetaElement random_K0_8_meta();  // element of the inverse image of K_0(8)

private:
  std::mt19937_64 rng_;
};

}  // namespace hecke8
