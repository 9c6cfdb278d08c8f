#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hecke8/dyadic.hpp"
#include "hecke8/sampling.hpp"

using namespace hecke8;

namespace {

// Independent oracle: (a,b)_2 = +1 iff z^2 = a x^2 + b y^2 has a nontrivial
// 2-adic solution.  Both arguments are reduced modulo squares to 2^d * r with
// d in {0,1}, r in {1,3,5,7}; a primitive solution mod 2^6 then lifts by
// Hensel (the relevant partial derivative has valuation <= 2, and
// 2^-6 < (2^-2)^2), and conversely a primitive 2-adic solution reduces.
long square_class_rep(const Dyadic& v) {
  long d = *v.val2() & 1;
  long r = static_cast<long>(v.odd_part_residue(3));
  return (1L << d) * r;
}

bool oracle_solvable(long a, long b) {
  const long M = 64;
  for (long x = 0; x < M; ++x)
    for (long y = 0; y < M; ++y)
      for (long z = 0; z < M; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        if (((z * z - a * x * x - b * y * y) % M + M) % M == 0) return true;
      }
  return false;
}

int hilbert_oracle(const Dyadic& a, const Dyadic& b) {
  static std::map<std::pair<long, long>, int> cache;
  auto key = std::make_pair(square_class_rep(a), square_class_rep(b));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, oracle_solvable(key.first, key.second) ? +1 : -1).first;
  return it->second;
}

}  // namespace

TEST_CASE("dyadic canonical form and arithmetic") {
  Dyadic a = Dyadic::from_fraction(12, 8);  // 3/2
  CHECK(a.num() == 3);
  CHECK(a.den() == 1);
  CHECK(a.exp() == -1);
  CHECK(a == Dyadic::from_fraction(3, 2));
  CHECK((a + a) == Dyadic(3));
  CHECK((a * a) == Dyadic::from_fraction(9, 4));
  CHECK((a - a).is_zero());
  CHECK(a.inv() == Dyadic::from_fraction(2, 3));
  CHECK(Dyadic::from_fraction(2, 3).str() == "1/3*2^1");
  CHECK(Dyadic::parse("1/3*2^1") == Dyadic::from_fraction(2, 3));
  CHECK(Dyadic::parse("-5/4") == Dyadic::from_fraction(-5, 4));
  CHECK(Dyadic::parse("2^-3") == Dyadic::two_pow(-3));
  CHECK(Dyadic::parse("0").is_zero());

  Sampler rng(7);
  for (int i = 0; i < 2000; ++i) {
    Dyadic x = rng.dyadic(-5, 5, 99);
    Dyadic y = rng.dyadic(-5, 5, 99);
    Dyadic z = rng.dyadic(-5, 5, 99);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    if (!x.is_zero()) CHECK(x * x.inv() == Dyadic(1));
    CHECK(Dyadic::parse((x * y + z).str()) == x * y + z);
  }
}

TEST_CASE("val2") {
  CHECK(*Dyadic(8).val2() == 3);
  CHECK(*Dyadic::from_fraction(3, 4).val2() == -2);
  CHECK_FALSE(Dyadic(0).val2().has_value());  // +infinity marker
  CHECK(Dyadic(0).in_Z2());
  CHECK(Dyadic::from_fraction(9, 5).in_Z2());
  CHECK_FALSE(Dyadic::from_fraction(1, 2).in_Z2());
}

TEST_CASE("unit residues") {
  CHECK(Dyadic(5).unit_residue(3) == 5);
  CHECK(Dyadic(-3).unit_residue(3) == 5);
  CHECK(Dyadic::from_fraction(1, 3).unit_residue(3) == 3);  // 3^-1 = 3 mod 8
  CHECK(Dyadic::from_fraction(-1, 3).unit_residue(3) == 5);
  CHECK(UnitClass::of(Dyadic(65)).residue == 1);
  CHECK(UnitClass::of(Dyadic(5)).mod8() == 5);
}

TEST_CASE("hilbert2 pinned values") {
  CHECK(hilbert2(Dyadic(-2), Dyadic(-3)) == -1);
  CHECK(hilbert2(Dyadic(1), Dyadic(7)) == +1);
  CHECK(hilbert2(Dyadic(1), Dyadic::from_fraction(-5, 8)) == +1);
  // (2,5): frozen from the solvability oracle.
  CHECK(hilbert_oracle(Dyadic(2), Dyadic(5)) == -1);
  CHECK(hilbert2(Dyadic(2), Dyadic(5)) == -1);
  CHECK_THROWS_AS(hilbert2(Dyadic(0), Dyadic(1)), std::domain_error);
}

TEST_CASE("hilbert2 agrees with the solvability oracle on the full grid") {
  std::vector<Dyadic> grid;
  for (long num = -15; num <= 15; num += 2)
    for (long e = -3; e <= 3; ++e) grid.push_back(Dyadic(num) * Dyadic::two_pow(e));
  for (const Dyadic& a : grid)
    for (const Dyadic& b : grid) {
      CAPTURE(a.str());
      CAPTURE(b.str());
      REQUIRE(hilbert2(a, b) == hilbert_oracle(a, b));
    }
}

TEST_CASE("hilbert2 symmetry, bimultiplicativity, (a,-a)=1") {
  Sampler rng(11);
  for (int i = 0; i < 5000; ++i) {
    Dyadic a = rng.dyadic_nonzero(-6, 6, 63);
    Dyadic b = rng.dyadic_nonzero(-6, 6, 63);
    Dyadic c = rng.dyadic_nonzero(-6, 6, 63);
    CHECK(hilbert2(a, b) == hilbert2(b, a));
    CHECK(hilbert2(a, b * c) == hilbert2(a, b) * hilbert2(a, c));
    CHECK(hilbert2(a, -a) == +1);
    if (a != Dyadic(1)) CHECK(hilbert2(a, Dyadic(1) - a) == +1);
  }
}

TEST_CASE("kronecker2") {
  CHECK(kronecker2(Int(3)) == -1);
  CHECK(kronecker2(Int(7)) == +1);
  CHECK(kronecker2(Int(2 * 1 + 1)) == -1);  // k = 1
  CHECK(kronecker2(Int(-1)) == +1);
  CHECK(kronecker2(Int(-3)) == -1);
  CHECK_THROWS_AS(kronecker2(Int(4)), std::domain_error);
  // multiplicativity on odd integers
  for (long m = -31; m <= 31; m += 2)
    for (long n = -31; n <= 31; n += 2)
      CHECK(kronecker2(Int(m * n)) == kronecker2(Int(m)) * kronecker2(Int(n)));
}
