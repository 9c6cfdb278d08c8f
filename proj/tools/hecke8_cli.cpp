// Command-line front end: relation verification, coset exploration, exact
// convolution, and q-expansion tools.  Human-readable tables by default,
// machine-readable JSON with --json (timing is omitted there so repeated runs
// are byte-identical).

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "hecke8/json_io.hpp"
#include "hecke8/sampling.hpp"

using namespace hecke8;

namespace {

enum class Status { Pass, Fail, Inconclusive };

struct CheckLine {
  std::string name;
  Status status;
  std::string detail;
  double ms = 0;
};

struct Report {
  std::string command;
  std::vector<CheckLine> checks;
  json payload;  // command-specific result object, emitted under "result"

  int failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == Status::Fail;
    return n;
  }
  int inconclusive() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == Status::Inconclusive;
    return n;
  }
};

const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "inconclusive";
  }
}

int emit(const Report& R, bool as_json) {
  if (as_json) {
    json j{{"schema", "hecke8/run-report/1"},
           {"command", R.command},
           {"failed", R.failed()},
           {"inconclusive", R.inconclusive()}};
    json checks = json::array();
    for (const auto& c : R.checks) {
      json item{{"name", c.name}, {"status", status_str(c.status)}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(item);
    }
    j["checks"] = checks;
    if (!R.payload.is_null()) j["result"] = R.payload;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : R.checks) {
      std::printf("[%-12s] %s", status_str(c.status), c.name.c_str());
      if (c.ms > 0) std::printf(" (%.2f s)", c.ms / 1000.0);
      std::printf("\n");
      if (!c.detail.empty()) std::printf("               %s\n", c.detail.c_str());
    }
    if (!R.payload.is_null()) std::cout << R.payload.dump(2) << "\n";
    std::printf("%d failed, %d inconclusive, %zu checks\n", R.failed(),
                R.inconclusive(), R.checks.size());
  }
  return R.failed() == 0 ? 0 : 1;
}

std::vector<std::pair<Algebra, int>> algebra_matrix(const std::string& alg,
                                                    const std::string& iota) {
  std::vector<Algebra> algs;
  if (alg == "all") {
    algs = {Algebra::Chi1, Algebra::Chi2, Algebra::GL2};
  } else if (alg == "chi1") {
    algs = {Algebra::Chi1};
  } else if (alg == "chi2") {
    algs = {Algebra::Chi2};
  } else if (alg == "gl2") {
    algs = {Algebra::GL2};
  } else {
    throw CLI::ValidationError("--algebra must be chi1|chi2|gl2|all");
  }
  std::vector<int> iotas;
  if (iota == "both") iotas = {+1, -1};
  else if (iota == "plus") iotas = {+1};
  else if (iota == "minus") iotas = {-1};
  else throw CLI::ValidationError("--iota must be plus|minus|both");
  std::vector<std::pair<Algebra, int>> out;
  for (Algebra a : algs) {
    if (a == Algebra::GL2) {
      out.emplace_back(a, +1);  // no character parameter on the level-4 side
    } else {
      for (int i : iotas) out.emplace_back(a, i);
    }
  }
  return out;
}

QExpansion read_qexp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return qexpansion_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-adic Hecke algebra engine: level-8 double cover and "
               "level-4 Hecke algebras, coset tables, and half-integral-weight "
               "coefficient operators"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  int window = HeckeAlgebra::default_window();
  std::uint64_t seed = kDefaultSeed;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--window", window, "classification window on |n| (env HECKE_WINDOW)");
  app.add_option("--seed", seed, "seed for sampling-based checks");

  // --- verify-relations ---
  auto* vr = app.add_subcommand("verify-relations",
                                "verify the relation suites by exact convolution");
  vr->fallthrough();
  std::string vr_alg = "all", vr_iota = "both";
  vr->add_option("--algebra", vr_alg, "chi1|chi2|gl2|all");
  vr->add_option("--iota", vr_iota, "plus|minus|both: value of the central parameter");

  // --- cosets ---
  auto* co = app.add_subcommand("cosets", "double-coset tables and classification");
  co->fallthrough();
  bool co_verify_all = false;
  std::string co_classify, co_decompose, co_flavor = "sl2";
  int co_max_n = 4;
  co->add_flag("--verify-all", co_verify_all,
               "certify every tabled decomposition with |n| <= max-n");
  co->add_option("--classify", co_classify, "matrix literal [[a,b],[c,d]]");
  co->add_option("--decompose", co_decompose, "label, e.g. H(1) or Y4");
  co->add_option("--flavor", co_flavor, "sl2|gl2");
  co->add_option("--max-n", co_max_n, "parameter bound for --verify-all");

  // --- convolve ---
  auto* cv = app.add_subcommand("convolve", "evaluate an s-expression, e.g. "
                                            "\"(* U1 U1)\" or \"(= (* V V) 1)\"");
  cv->fallthrough();
  std::string cv_expr, cv_alg = "chi1", cv_iota = "plus";
  cv->add_option("expr", cv_expr, "s-expression")->required();
  cv->add_option("--algebra", cv_alg, "chi1|chi2|gl2");
  cv->add_option("--iota", cv_iota, "plus|minus");

  // --- support-probe ---
  auto* sp = app.add_subcommand(
      "support-probe", "sample commutator character values at a double coset; a "
                       "value != 1 certifies that the algebra vanishes there");
  sp->fallthrough();
  std::string sp_label, sp_alg = "chi1";
  long sp_samples = 500;
  sp->add_option("label", sp_label, "double-coset label, e.g. Y2W(2)")->required();
  sp->add_option("--algebra", sp_alg, "chi1|chi2");
  sp->add_option("--samples", sp_samples, "number of random probes");

  // --- qexp ---
  auto* qe = app.add_subcommand("qexp", "half-integral-weight coefficient operators");
  qe->fallthrough();
  bool qe_fixtures = false;
  std::string qe_export, qe_project, qe_check_kind, qe_check_file, qe_hecke_file;
  long qe_hecke_p = 0;
  qe->add_flag("--fixtures", qe_fixtures, "run the embedded level-152 example suite");
  qe->add_option("--export-fixtures", qe_export, "write the eight fixture files to DIR");
  qe->add_option("--project-plus", qe_project, "project FILE onto the plus classes");
  qe->add_option("--check", qe_check_kind, "plus|minus (with FILE argument)");
  qe->add_option("file", qe_check_file, "q-expansion JSON file");
  qe->add_option("--hecke", qe_hecke_p, "odd prime p: apply T_{p^2} to FILE");

  CLI11_PARSE(app, argc, argv);

  Report R;
  for (int i = 0; i < argc; ++i) R.command += std::string(i ? " " : "") + argv[i];

  try {
    if (vr->parsed()) {
      for (auto [a, iota] : algebra_matrix(vr_alg, vr_iota)) {
        HeckeAlgebra alg(a, iota, window);
        std::string tag = algebra_str(a) +
                          (a == Algebra::GL2 ? "" : (iota > 0 ? "/+i" : "/-i"));
        for (const RelationCheck& rc : relation_suite(a)) {
          auto t0 = std::chrono::steady_clock::now();
          RelationResult r = verify_relation(alg, rc.name, rc.expr);
          double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
          R.checks.push_back({tag + ": " + rc.name,
                              r.ok ? Status::Pass : Status::Fail, r.detail, ms});
        }
      }
      if (vr_alg == "all") {
        for (int iota : {+1, -1}) {
          IsoReport iso = shimura_isomorphism_check(iota, window);
          for (const IsoCheckItem& item : iso.items)
            R.checks.push_back({std::string("iso") + (iota > 0 ? "/+i: " : "/-i: ") +
                                    item.name,
                                item.ok ? Status::Pass : Status::Fail, "", 0});
        }
      }
    } else if (co->parsed()) {
      Flavor flavor = co_flavor == "gl2" ? Flavor::GL2 : Flavor::SL2Tilde;
      CosetTables tables;
      if (co_verify_all) {
        std::vector<CosetLabel> labels;
        if (flavor == Flavor::SL2Tilde) {
          for (int n = -co_max_n; n <= co_max_n; ++n) {
            labels.push_back({Shape::H, n, 0});
            labels.push_back({Shape::W, n, 0});
          }
          labels.push_back({Shape::Y4, 0, 0});
          labels.push_back({Shape::Y2, 0, 0});
          for (int n = 1; n <= co_max_n; ++n)
            for (Shape sh : {Shape::HY4, Shape::Y4H, Shape::HY2, Shape::Y2H,
                             Shape::WY2, Shape::Y2W, Shape::Y2WY2})
              if (label_valid({sh, n, 0})) labels.push_back({sh, n, 0});
          for (int n = 2; n <= co_max_n; ++n)
            for (Shape sh : {Shape::WY4, Shape::Y4W, Shape::Y4WY4})
              labels.push_back({sh, n, 0});
        } else {
          for (int n = -co_max_n; n <= co_max_n; ++n) {
            labels.push_back({Shape::GD, n, 0});
            labels.push_back({Shape::GW, n, 0});
          }
          for (int n = 0; n <= co_max_n; ++n) labels.push_back({Shape::GDY2, n, 0});
          for (int n = 1; n <= co_max_n; ++n) labels.push_back({Shape::GY2D, n, 0});
          for (int n = 2; n <= co_max_n; ++n)
            for (Shape sh : {Shape::GY2W, Shape::GWY2, Shape::GY2WY2})
              labels.push_back({sh, n, 0});
        }
        for (const CosetLabel& L : labels) {
          auto t0 = std::chrono::steady_clock::now();
          DecompositionReport rep = tables.verify(L);
          double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
          Status st = rep.status == CheckStatus::Certified ? Status::Pass
                      : rep.status == CheckStatus::Inconclusive ? Status::Inconclusive
                                                                : Status::Fail;
          R.checks.push_back({"decomposition " + label_str(L) + " (" +
                                  std::to_string(rep.count) + " cosets)",
                              st, rep.detail, ms});
        }
      } else if (!co_classify.empty()) {
        Mat2 g = mat2_parse(co_classify);
        CosetLabel L = tables.classify(g, flavor, window);
        R.payload = json{{"schema", "hecke8/classification/1"},
                         {"matrix", to_json(g)},
                         {"label", label_str(L)}};
        R.checks.push_back({"classify " + g.str() + " -> " + label_str(L),
                            Status::Pass, "", 0});
      } else if (!co_decompose.empty()) {
        CosetLabel L = label_parse(co_decompose, flavor);
        const CosetDecomposition& D = tables.get(L);
        R.payload = to_json(D);
        R.checks.push_back({"decompose " + label_str(L) + ": " +
                                std::to_string(D.right_cosets.size()) +
                                " right cosets",
                            Status::Pass, "", 0});
      } else {
        throw CLI::ValidationError("cosets needs --verify-all, --classify or --decompose");
      }
    } else if (cv->parsed()) {
      Algebra a = cv_alg == "chi1"   ? Algebra::Chi1
                  : cv_alg == "chi2" ? Algebra::Chi2
                  : cv_alg == "gl2"  ? Algebra::GL2
                                     : throw CLI::ValidationError("--algebra");
      int iota = cv_iota == "minus" ? -1 : +1;
      HeckeAlgebra alg(a, iota, window);
      SExpr e = sexpr_parse(cv_expr);
      if (!e.is_atom() && e.list.size() == 3 && e.list.front().atom == "=") {
        RelationResult r = verify_relation(alg, cv_expr, cv_expr);
        R.checks.push_back({cv_expr, r.ok ? Status::Pass : Status::Fail, r.detail, 0});
      } else {
        HeckeElement f = eval_expr(alg, e);
        R.payload = hecke_element_to_json(f, alg.chi().iota());
        R.checks.push_back({cv_expr + " = " + f.str(), Status::Pass, "", 0});
      }
    } else if (sp->parsed()) {
      Algebra a = sp_alg == "chi2" ? Algebra::Chi2 : Algebra::Chi1;
      HeckeAlgebra alg(a, +1, window);
      CosetLabel L = label_parse(sp_label, Flavor::SL2Tilde);
      CommutatorProbe P = commutator_support_test(alg, L, sp_samples, seed);
      R.payload = json{{"schema", "hecke8/support-probe/1"},
                       {"algebra", algebra_str(a)},
                       {"label", label_str(L)},
                       {"samples_tested", P.samples_tested},
                       {"vanishing_certified", P.vanishing_certified}};
      if (P.vanishing_certified) {
        R.payload["witness_commutator"] = to_json(P.witness_commutator.g);
        R.payload["witness_sign"] = P.witness_commutator.eps;
        R.payload["witness_value"] = to_json(P.witness_value);
        R.checks.push_back({algebra_str(a) + " vanishes on " + label_str(L) +
                                " (commutator value " + P.witness_value.str() + ")",
                            Status::Pass, "", 0});
      } else {
        R.checks.push_back({algebra_str(a) + " support at " + label_str(L) +
                                ": all " + std::to_string(P.samples_tested) +
                                " sampled commutator values are 1",
                            Status::Inconclusive,
                            "consistent with support; sampling cannot certify it", 0});
      }
    } else if (qe->parsed()) {
      if (qe_fixtures) {
        std::set<std::string> plus, minus;
        for (const std::string& name : fixture_names()) {
          QExpansion f = load_fixture(name);
          if (plus_member(f)) plus.insert(name);
          if (minus_member(f)) minus.insert(name);
        }
        R.checks.push_back({"plus condition on {f2,f3,g2,h2}",
                            plus == std::set<std::string>{"f2", "f3", "g2", "h2"}
                                ? Status::Pass
                                : Status::Fail,
                            "", 0});
        std::string mlist;
        for (const std::string& m : minus) mlist += m + " ";
        R.checks.push_back({"complementary condition holds on: " + mlist,
                            Status::Pass, "", 0});
        R.checks.push_back({"project_plus(k1) = 0",
                            project_plus(load_fixture("k1")).is_zero() ? Status::Pass
                                                                       : Status::Fail,
                            "", 0});
        R.checks.push_back({"U_4(k1) = 0",
                            u4(load_fixture("k1")).is_zero() ? Status::Pass
                                                             : Status::Fail,
                            "", 0});
        for (long p : {3L, 5L})
          for (const auto& block : fixture_blocks()) {
            std::optional<Dyadic> lambda;
            for (const std::string& name : block) {
              EigenReport er = eigen_proportionality(load_fixture(name), p, lambda);
              std::string nm = "T_" + std::to_string(p * p) + " on " + name;
              if (er.derived) nm += " (eigenvalue " + er.lambda.str() + ")";
              R.checks.push_back({nm, er.consistent ? Status::Pass : Status::Fail,
                                  er.detail, 0});
              if (er.derived && !lambda) lambda = er.lambda;
            }
          }
      } else if (!qe_export.empty()) {
        for (const std::string& name : fixture_names()) {
          std::ofstream out(qe_export + "/" + name + ".json");
          if (!out) throw std::runtime_error("cannot write to " + qe_export);
          out << to_json(load_fixture(name)).dump(2) << "\n";
        }
        R.checks.push_back({"exported 8 fixtures to " + qe_export, Status::Pass, "", 0});
      } else if (!qe_project.empty()) {
        QExpansion f = read_qexp(qe_project);
        R.payload = to_json(project_plus(f));
        R.checks.push_back({"project-plus " + qe_project, Status::Pass, "", 0});
      } else if (!qe_check_kind.empty()) {
        QExpansion f = read_qexp(qe_check_file);
        bool ok = qe_check_kind == "plus" ? plus_member(f) : minus_member(f);
        R.checks.push_back({qe_check_kind + " condition on " + qe_check_file,
                            ok ? Status::Pass : Status::Fail, "", 0});
      } else if (qe_hecke_p > 0) {
        QExpansion f = read_qexp(qe_check_file);
        QExpansion Tf = t_p2(f, qe_hecke_p);
        EigenReport er = eigen_proportionality(f, qe_hecke_p);
        R.payload = to_json(Tf);
        std::string msg = er.derived
                              ? (er.consistent ? "eigenform, eigenvalue " + er.lambda.str()
                                               : "not proportional: " + er.detail)
                              : "eigenvalue not derivable on the valid range";
        R.checks.push_back({"T_" + std::to_string(qe_hecke_p * qe_hecke_p) + " on " +
                                qe_check_file + ": " + msg,
                            er.consistent ? Status::Pass : Status::Fail, "", 0});
      } else {
        throw CLI::ValidationError("qexp needs one of --fixtures, --export-fixtures, "
                                   "--project-plus, --check, --hecke");
      }
    }
  } catch (const window_exceeded& e) {
    R.checks.push_back({"window exceeded", Status::Fail, e.what(), 0});
  } catch (const std::exception& e) {
    R.checks.push_back({"error", Status::Fail, e.what(), 0});
  }
  return emit(R, as_json);
}
