#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke8/metaplectic.hpp"
#include "hecke8/sampling.hpp"

using namespace hecke8;

namespace {

// Test-local evaluation of the defining cocycle formula, kept separate from
// the library path so the frozen values below are independently derived.
int naive_sigma(const Mat2& g, const Mat2& h) {
  auto naive_tau = [](const Mat2& m) { return m.c.is_zero() ? m.d : m.c; };
  auto naive_s = [](const Mat2& m) {
    if (m.c.is_zero() || m.d.is_zero()) return +1;
    if (*m.c.val2() % 2 == 0) return +1;
    return hilbert2(m.c, m.d);
  };
  Mat2 gh = g * h;
  return hilbert2(naive_tau(gh) * naive_tau(g), naive_tau(gh) * naive_tau(h)) *
         naive_s(g) * naive_s(h) * naive_s(gh);
}

}  // namespace

TEST_CASE("builders") {
  CHECK(mat_h(Dyadic(1)) == mat_identity());
  Mat2 w = mat_w(Dyadic::two_pow(-2));
  CHECK(w.a.is_zero());
  CHECK(w.b == Dyadic::from_fraction(1, 4));
  CHECK(w.c == Dyadic(-4));
  CHECK(w.d.is_zero());
  CHECK(mat_d(Dyadic(2)) * mat_z(Dyadic(2)) == Mat2{4, 0, 0, 2});
  CHECK_THROWS_AS(mat_h(Dyadic(0)), std::domain_error);
  CHECK_THROWS_AS(mat_w(Dyadic(0)), std::domain_error);
  CHECK(mat_x(Dyadic(3)).is_sl2());
  CHECK(v_min(mat_w(Dyadic::two_pow(-2))) == -2);
}

TEST_CASE("tau and s2") {
  CHECK(tau(mat_x(Dyadic(5))) == Dyadic(1));
  CHECK(tau(mat_w(Dyadic(2))) == Dyadic::from_fraction(-1, 2));
  CHECK(tau(mat_y(Dyadic(2))) == Dyadic(2));
  CHECK(s2(mat_identity()) == +1);
  CHECK(s2(mat_x(Dyadic(7))) == +1);  // c = 0 branch
  // [[1+2s+4s^2, 2s^2],[-4s, -2s+1]] at s = 2: s_2 = <-8,-3> = -1
  Mat2 m{21, 8, -8, -3};
  CHECK(m.is_sl2());
  CHECK(s2(m) == -1);
}

TEST_CASE("sigma2 pinned values") {
  Sampler rng(5);
  for (int i = 0; i < 100; ++i) {
    Dyadic s = rng.dyadic(), t = rng.dyadic();
    CHECK(sigma2(mat_x(s), mat_x(t)) == +1);
  }
  // sigma(g, g^{-1}) for g = w(1), frozen from the defining formula.
  Mat2 w1 = mat_w(Dyadic(1));
  CHECK(naive_sigma(w1, w1.inverse()) == +1);
  CHECK(sigma2(w1, w1.inverse()) == +1);
  // cocycle triple on (w(1), y(2), h(2)), both sides evaluated directly
  Mat2 g = w1, h = mat_y(Dyadic(2)), l = mat_h(Dyadic(2));
  CHECK(naive_sigma(g, h) * naive_sigma(g * h, l) ==
        naive_sigma(g, h * l) * naive_sigma(h, l));
  CHECK(sigma2(g, h) * sigma2(g * h, l) == sigma2(g, h * l) * sigma2(h, l));
}

TEST_CASE("cocycle identity on random triples") {
  Sampler rng(kDefaultSeed);
  for (int i = 0; i < 3000; ++i) {
    Mat2 g = rng.random_sl2(), h = rng.random_sl2(), l = rng.random_sl2();
    CAPTURE(g.str());
    CAPTURE(h.str());
    CAPTURE(l.str());
    REQUIRE(sigma2(g, h) * sigma2(g * h, l) == sigma2(g, h * l) * sigma2(h, l));
  }
}

TEST_CASE("group law of the cover") {
  MetaElement e = meta_identity();
  Sampler rng(13);
  MetaElement minus_i{Mat2{-1, 0, 0, -1}, +1};
  // (-I,1) generates a cyclic group of order 4
  MetaElement sq = meta_mul(minus_i, minus_i);
  CHECK(sq == MetaElement{mat_identity(), -1});
  CHECK(sq != e);
  CHECK(meta_mul(sq, sq) == e);
  for (int i = 0; i < 1000; ++i) {
    MetaElement x = rng.random_meta();
    MetaElement y = rng.random_meta();
    CHECK(meta_mul(e, x) == x);
    CHECK(meta_mul(x, meta_inv(x)) == e);
    CHECK(meta_mul(meta_inv(x), x) == e);
    // (-I,1) is central
    CHECK(meta_mul(minus_i, x) == meta_mul(x, minus_i));
    CHECK(meta_mul(x, y).g.is_sl2());
    CHECK(meta_inv(meta_mul(x, y)) == meta_mul(meta_inv(y), meta_inv(x)));
  }
}

TEST_CASE("associativity of meta_mul (cocycle identity, second form)") {
  Sampler rng(17);
  for (int i = 0; i < 2000; ++i) {
    MetaElement x = rng.random_meta(), y = rng.random_meta(), z = rng.random_meta();
    CHECK(meta_mul(meta_mul(x, y), z) == meta_mul(x, meta_mul(y, z)));
  }
}

TEST_CASE("pinned cover products") {
  // w(2^-1) x(1/2) carries the sign -1 and equals y(2) w(2^-1) x(1).
  Dyadic half = Dyadic::from_fraction(1, 2);
  MetaElement lhs = meta_mul(lift(mat_w(half)), lift(mat_x(half)));
  CHECK(lhs.g == (Mat2{0, half, -2, -1}));
  CHECK(lhs.eps == -1);
  MetaElement rhs = meta_mul(meta_mul(lift(mat_y(Dyadic(2))), lift(mat_w(half))),
                             lift(mat_x(Dyadic(1))));
  CHECK(lhs == rhs);
  // x(1/2) y(2) w(2^-1) carries the sign +1 and equals y(2) (-x(-1), 1).
  MetaElement lhs2 = meta_mul(meta_mul(lift(mat_x(half)), lift(mat_y(Dyadic(2)))),
                              lift(mat_w(half)));
  CHECK(lhs2.g == (Mat2{-1, 1, -2, 1}));
  CHECK(lhs2.eps == +1);
  Mat2 minus_x{-1, 1, 0, -1};
  CHECK(lhs2 == meta_mul(lift(mat_y(Dyadic(2))), lift(minus_x)));
}

TEST_CASE("torus-normalizer factorization (w(t) = h(t) w(1) on the cover)") {
  for (int n = -4; n <= 4; ++n) {
    MetaElement prod = meta_mul(lift(mat_h(Dyadic::two_pow(-n))), lift(mat_w(Dyadic(1))));
    CHECK(prod == lift(mat_w(Dyadic::two_pow(-n))));
  }
}
