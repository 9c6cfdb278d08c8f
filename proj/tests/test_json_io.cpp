#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke8/json_io.hpp"
#include "hecke8/sampling.hpp"

using namespace hecke8;

TEST_CASE("dyadic and cyclo8 round-trips") {
  Sampler rng(101);
  for (int i = 0; i < 500; ++i) {
    Dyadic d = rng.dyadic(-6, 6, 99) / Dyadic(rng.odd(99));
    CHECK(dyadic_from_json(to_json(d)) == d);
    Cyclo8 c(rng.dyadic(-3, 3, 9), rng.dyadic(-3, 3, 9), rng.dyadic(-3, 3, 9),
             rng.dyadic(-3, 3, 9));
    CHECK(cyclo8_from_json(to_json(c)) == c);
  }
}

TEST_CASE("matrix parsing and round-trips") {
  Sampler rng(103);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = rng.random_sl2();
    CHECK(mat2_from_json(to_json(m)) == m);
  }
  Mat2 w = mat2_parse("[[0,1/2],[-2,0]]");
  CHECK(w == mat_w(Dyadic::from_fraction(1, 2)));
  CHECK_THROWS_AS(mat2_parse("[[1,2],[3]]"), std::domain_error);
}

TEST_CASE("hecke element round-trip") {
  HeckeAlgebra chi2(Algebra::Chi2);
  HeckeElement f = chi2.convolve(chi2.generator("U2"), chi2.generator("U2"));
  json j = hecke_element_to_json(f, chi2.chi().iota());
  CHECK(j.at("schema") == "hecke8/hecke-element/1");
  Algebra alg;
  int iota;
  HeckeElement back = hecke_element_from_json(j, &alg, &iota);
  CHECK(alg == Algebra::Chi2);
  CHECK(iota == +1);
  CHECK(back == f);

  HeckeAlgebra gl2(Algebra::GL2);
  HeckeElement g = gl2.convolve(gl2.generator("U1"), gl2.generator("U1"));
  CHECK(hecke_element_from_json(hecke_element_to_json(g, Cyclo8::i4(+1))) == g);
}

TEST_CASE("q-expansion round-trip") {
  for (const std::string& name : fixture_names()) {
    QExpansion f = load_fixture(name);
    QExpansion back = qexpansion_from_json(to_json(f));
    CHECK(back.k == f.k);
    CHECK(back.level == f.level);
    CHECK(back.N == f.N);
    for (long n = 1; n <= f.N; ++n) CHECK(back.coeff(n) == f.coeff(n));
  }
}

TEST_CASE("decomposition export shape") {
  CosetTables tables;
  json j = to_json(tables.get(CosetLabel{Shape::H, 1, 0}));
  CHECK(j.at("schema") == "hecke8/coset-decomposition/1");
  CHECK(j.at("label") == "H(1)");
  CHECK(j.at("count") == 4);
  CHECK(j.at("right_tails").size() == 4);
  CHECK(j.at("left_tails").size() == 4);
  CHECK(mat2_from_json(j.at("rep")) == mat_h(Dyadic(2)));
}
