#include "hecke8/sampling.hpp"

namespace hecke8 {

long Sampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Int Sampler::odd(long bound) {
  long v = uniform(0, bound - 1) | 1;
  return uniform(0, 1) ? Int(v) : Int(-v);
}

Dyadic Sampler::dyadic(int val_lo, int val_hi, long num_bound) {
  if (uniform(0, 7) == 0) return Dyadic(0);
  return dyadic_nonzero(val_lo, val_hi, num_bound);
}

Dyadic Sampler::dyadic_nonzero(int val_lo, int val_hi, long num_bound) {
  Dyadic d(odd(num_bound));
  return d * Dyadic::two_pow(uniform(val_lo, val_hi));
}

Mat2 Sampler::random_sl2() {
  Mat2 g = mat_x(dyadic()) * mat_h(Dyadic(odd(31))) * mat_y(dyadic());
  if (uniform(0, 3) != 0) g = g * mat_w(Dyadic::two_pow(uniform(-3, 3)));
  return g;
}

Mat2 Sampler::random_K0_8() {
  return mat_x(Dyadic(uniform(-64, 64))) * mat_h(Dyadic(odd(63))) *
         mat_y(Dyadic(8 * uniform(-64, 64)));
}

Mat2 Sampler::random_K1_8() {
  long u;
  do {
    u = uniform(-63, 63) | 1;
  } while (((u % 8) + 8) % 8 != 1);
  return mat_x(Dyadic(uniform(-64, 64))) * mat_h(Dyadic(u)) *
         mat_y(Dyadic(8 * uniform(-64, 64)));
}

MetaElement Sampler::random_meta() {
  return MetaElement{random_sl2(), uniform(0, 1) ? +1 : -1};
}

MetaElement Sampler::random_K0_8_meta() {
  return MetaElement{random_K0_8(), uniform(0, 1) ? +1 : -1};
}

}  // namespace hecke8
