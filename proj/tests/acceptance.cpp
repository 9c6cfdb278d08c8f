// Acceptance suite: runs every verification gate end to end and prints one
// pass/fail line per criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hecke8/hecke.hpp"
#include "hecke8/qexp.hpp"
#include "hecke8/sampling.hpp"

using namespace hecke8;

namespace {

struct SubCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<SubCheck> subs;
  double ms = 0;

  bool pass() const {
    for (const SubCheck& s : subs)
      if (!s.pass) return false;
    return true;
  }
};

std::vector<Criterion> results;

void run(int id, const std::string& title,
         const std::function<void(Criterion&)>& body) {
  Criterion c;
  c.id = id;
  c.title = title;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.subs.push_back({"unexpected exception", false, e.what()});
  }
  c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
             .count();
  std::printf("[%s] %2d. %s (%.1f s)\n", c.pass() ? "PASS" : "FAIL", id,
              title.c_str(), c.ms / 1000.0);
  for (const SubCheck& s : c.subs) {
    if (!s.pass)
      std::printf("       [fail] %s%s%s\n", s.name.c_str(),
                  s.detail.empty() ? "" : ": ", s.detail.c_str());
  }
  results.push_back(std::move(c));
}

void expect(Criterion& c, const std::string& name, bool ok,
            const std::string& detail = "") {
  c.subs.push_back({name, ok, ok ? "" : detail});
}

}  // namespace

int main() {
  std::printf("hecke8 acceptance suite (seed %llu, window %d)\n",
              static_cast<unsigned long long>(kDefaultSeed),
              HeckeAlgebra::default_window());

  // 1. The cocycle satisfies the 2-cocycle identity.
  run(1, "cocycle identity on 10^4 sampled triples", [](Criterion& c) {
    Sampler rng(kDefaultSeed);
    long failures = 0;
    const long trials = 10000;
    for (long i = 0; i < trials; ++i) {
      Mat2 g = rng.random_sl2(), h = rng.random_sl2(), l = rng.random_sl2();
      if (sigma2(g, h) * sigma2(g * h, l) != sigma2(g, h * l) * sigma2(h, l))
        ++failures;
    }
    expect(c, "sigma2(g,h) sigma2(gh,l) = sigma2(g,hl) sigma2(h,l)", failures == 0,
           std::to_string(failures) + " failures in " + std::to_string(trials));
  });

  // 2. chi1 and chi2 are genuine characters with the pinned h(u) values.
  run(2, "character multiplicativity, genuineness, h(u) tables", [](Criterion& c) {
    for (int iota : {+1, -1}) {
      for (CharVariant v : {CharVariant::Chi1, CharVariant::Chi2}) {
        GenuineCharacter chi(v, iota);
        std::string tag = (v == CharVariant::Chi1 ? "chi1" : "chi2");
        tag += iota > 0 ? "/iota=+i" : "/iota=-i";
        Sampler rng(kDefaultSeed);
        long failures = 0;
        const long trials = 10000;
        for (long i = 0; i < trials; ++i) {
          MetaElement x = rng.random_K0_8_meta();
          MetaElement y = rng.random_K0_8_meta();
          if (chi.eval(meta_mul(x, y)) != chi.eval(x) * chi.eval(y)) ++failures;
        }
        expect(c, tag + " multiplicative on 10^4 pairs", failures == 0,
               std::to_string(failures) + " failures");
        expect(c, tag + " genuine on (I,-1)",
               chi.eval(MetaElement{mat_identity(), -1}) == Cyclo8(-1));
        Cyclo8 i = chi.iota();
        bool table_ok;
        if (v == CharVariant::Chi1) {
          table_ok = chi.eval(lift(mat_h(Dyadic(1)))) == Cyclo8(1) &&
                     chi.eval(lift(mat_h(Dyadic(5)))) == Cyclo8(1) &&
                     chi.eval(lift(mat_h(Dyadic(3)))) == i &&
                     chi.eval(lift(mat_h(Dyadic(7)))) == i;
        } else {
          table_ok = chi.eval(lift(mat_h(Dyadic(1)))) == Cyclo8(1) &&
                     chi.eval(lift(mat_h(Dyadic(7)))) == i &&
                     chi.eval(lift(mat_h(Dyadic(5)))) == Cyclo8(-1) &&
                     chi.eval(lift(mat_h(Dyadic(3)))) == -i;
        }
        expect(c, tag + " h(u) table", table_ok);
      }
    }
  });

  // 3. Coset decompositions certify for |n| <= 4.
  run(3, "coset decomposition certification, |n| <= 4", [](Criterion& c) {
    CosetTables tables;
    std::vector<CosetLabel> labels;
    for (int n = -4; n <= 4; ++n) labels.push_back({Shape::H, n, 0});
    for (int n = -4; n <= 4; ++n) labels.push_back({Shape::W, n, 0});
    labels.push_back({Shape::Y4, 0, 0});
    labels.push_back({Shape::Y2, 0, 0});
    for (int n = 1; n <= 4; ++n)
      for (Shape sh : {Shape::HY4, Shape::Y4H, Shape::HY2, Shape::Y2H, Shape::WY2,
                       Shape::Y2W, Shape::Y2WY2})
        labels.push_back({sh, n, 0});
    for (int n = 2; n <= 4; ++n)
      for (Shape sh : {Shape::WY4, Shape::Y4W, Shape::Y4WY4})
        labels.push_back({sh, n, 0});
    for (int n = -4; n <= 4; ++n) labels.push_back({Shape::GD, n, 0});
    for (int n = -4; n <= 4; ++n) labels.push_back({Shape::GW, n, 0});

    bool all = true;
    std::string bad;
    for (const CosetLabel& L : labels) {
      DecompositionReport R = tables.verify(L);
      if (R.status != CheckStatus::Certified || R.count != R.expected_count) {
        all = false;
        bad += label_str(L) + " ";
      }
    }
    expect(c, std::to_string(labels.size()) + " decompositions certified", all, bad);
    // spot-check the index formulas
    expect(c, "count 2^{2n} for h(2^n)",
           CosetTables::count_formula({Shape::H, 4, 0}) == 256);
    expect(c, "count 2^{2n-3} for w(2^-n)",
           CosetTables::count_formula({Shape::W, 4, 0}) == 32);
    expect(c, "count 2*2^{2n-2} for y(2)w(2^-n)y(2)",
           CosetTables::count_formula({Shape::Y2WY2, 4, 0}) == 128);
  });

  // 4./5./6. The relation suites.
  auto relation_criterion = [](Algebra a) {
    return [a](Criterion& c) {
      for (int iota : {+1, -1}) {
        HeckeAlgebra alg(a, iota);
        long passed = 0;
        for (const RelationCheck& rc : relation_suite(a)) {
          RelationResult r = verify_relation(alg, rc.name, rc.expr);
          if (r.ok) {
            ++passed;
          } else {
            expect(c, rc.name + (iota > 0 ? " [iota=+i]" : " [iota=-i]"), false,
                   r.detail);
          }
        }
        expect(c,
               std::to_string(passed) + " relations hold exactly" +
                   (iota > 0 ? " [iota=+i]" : " [iota=-i]"),
               true);
        if (a == Algebra::GL2) break;  // no character parameter on that side
      }
    };
  };
  run(4, "chi1 relation suite by exact convolution", relation_criterion(Algebra::Chi1));
  run(5, "chi2 relation suite by exact convolution", relation_criterion(Algebra::Chi2));
  run(6, "level-4 relation suite and centrality of Z", relation_criterion(Algebra::GL2));

  // 7. The local Shimura correspondence at the level of presentations.
  run(7, "presentation transport between level 8 and level 4", [](Criterion& c) {
    for (int iota : {+1, -1}) {
      IsoReport R = shimura_isomorphism_check(iota);
      long passed = 0;
      for (const IsoCheckItem& item : R.items) {
        if (item.ok) ++passed;
        else expect(c, item.name, false);
      }
      expect(c,
             std::to_string(passed) + " relation images hold" +
                 (iota > 0 ? " [iota=+i]" : " [iota=-i]"),
             true);
    }
  });

  // 8. The explicit vanishing witness at y(2)w(2^-n).
  run(8, "vanishing witness B = [[-3,2],[-8,5]] against y(2)w(2^-n)",
      [](Criterion& c) {
        HeckeAlgebra chi1(Algebra::Chi1);
        Mat2 B{-3, 2, -8, 5};
        for (int n = 1; n <= 3; ++n) {
          Mat2 A = mat_y(Dyadic(2)) * mat_w(Dyadic::two_pow(-n));
          MetaElement comm = meta_mul(meta_mul(meta_inv(lift(B)), meta_inv(lift(A))),
                                      meta_mul(lift(B), lift(A)));
          // matrix [[5+2^{2n+2}, -2],[8+3*2^{2n+1}, -3]] with sign -1
          Mat2 want{Dyadic(5) + Dyadic::two_pow(2 * n + 2), Dyadic(-2),
                    Dyadic(8) + Dyadic(3) * Dyadic::two_pow(2 * n + 1), Dyadic(-3)};
          expect(c, "commutator matrix (n=" + std::to_string(n) + ")",
                 comm.g == want, comm.g.str());
          expect(c, "metaplectic part -1 (n=" + std::to_string(n) + ")",
                 comm.eps == -1);
          expect(c, "chi1 value -1 (n=" + std::to_string(n) + ")",
                 chi1.chi().eval(comm) == Cyclo8(-1));
          CommutatorProbe P = commutator_support_test(
              chi1, CosetLabel{Shape::Y2W, n, 0}, 100, kDefaultSeed);
          expect(c, "probe certifies vanishing (n=" + std::to_string(n) + ")",
                 P.vanishing_certified && P.witness_value == Cyclo8(-1));
        }
      });

  // 9. The level-152 fixture suite.
  run(9, "level-152 fixture suite", [](Criterion& c) {
    QExpansion f1 = load_fixture("f1");
    expect(c, "eight forms load with tabulated truncations",
           fixture_names().size() == 8 && f1.N == 49 && load_fixture("f2").N == 39 &&
               load_fixture("h1").N == 29 && f1.coeff(45) == Dyadic(-3) &&
               load_fixture("h2").coeff(8) == Dyadic(-1) &&
               load_fixture("k1").coeff(2) == Dyadic(1));
    std::set<std::string> plus, minus;
    for (const std::string& name : fixture_names()) {
      QExpansion f = load_fixture(name);
      if (plus_member(f)) plus.insert(name);
      if (minus_member(f)) minus.insert(name);
    }
    expect(c, "plus condition holds precisely on {f2,f3,g2,h2}",
           plus == std::set<std::string>{"f2", "f3", "g2", "h2"});
    std::string minus_list;
    for (const std::string& m : minus) minus_list += m + " ";
    expect(c, "minus condition holds precisely on {k1}",
           minus == std::set<std::string>{"k1"},
           "the tabulated coefficients satisfy the complementary vanishing for { " +
               minus_list +
               "}; one basis form per Shimura block lies in the -1 eigenspace, so "
               "the coefficient condition cannot single out k1");
    expect(c, "project_plus(k1) = 0", project_plus(load_fixture("k1")).is_zero());
    expect(c, "U_4(k1) = 0 to available precision",
           u4(load_fixture("k1")).is_zero());
    for (long p : {3L, 5L}) {
      bool ok = true;
      std::string detail;
      for (const auto& block : fixture_blocks()) {
        std::optional<Dyadic> lambda;
        for (const std::string& name : block) {
          EigenReport R = eigen_proportionality(load_fixture(name), p, lambda);
          if (!R.consistent) {
            ok = false;
            detail += name + "@" + std::to_string(p) + " ";
          }
          if (R.derived && !lambda) lambda = R.lambda;
        }
      }
      expect(c, "T_{p^2} proportionality per block, p = " + std::to_string(p), ok,
             detail);
    }
  });

  // 10. Coefficient-level operator identities.
  run(10, "projector and P_8 identities on random sparse expansions",
      [](Criterion& c) {
        Sampler rng(kDefaultSeed);
        long failures = 0;
        const long trials = 1000;
        for (long i = 0; i < trials; ++i) {
          int k = static_cast<int>(rng.uniform(1, 3));
          QExpansion f = QExpansion::zero(k, 8, 48);
          long terms = rng.uniform(1, 10);
          for (long t = 0; t < terms; ++t)
            f.set(rng.uniform(1, 48), Dyadic(rng.uniform(-9, 9)));
          QExpansion p = project_plus(f);
          if (!qequal(project_plus(p), p)) ++failures;
          ScaledQExpansion once = p8_coeff(f);
          ScaledQExpansion twice = p8_coeff(once.series);
          if (once.scalar * twice.scalar != Cyclo8(2) || !qequal(twice.series, f))
            ++failures;
          Cyclo8 normal =
              Cyclo8::sqrt2().inv() * Cyclo8(Dyadic(kronecker2(Int(2 * k + 1))));
          if (normal * once.scalar != Cyclo8(1) ||
              !qequal(once.series, qsub(p, project_complement(f))))
            ++failures;
        }
        expect(c, "idempotence, p8 o p8 = 2 id, normalized p8 = proj+ - proj-",
               failures == 0, std::to_string(failures) + " failures");
      });

  int failed = 0;
  for (const Criterion& c : results)
    if (!c.pass()) ++failed;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed;
}
