#include "hecke8/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hecke8/sampling.hpp"

namespace hecke8 {

Flavor algebra_flavor(Algebra a) {
  return a == Algebra::GL2 ? Flavor::GL2 : Flavor::SL2Tilde;
}

std::string algebra_str(Algebra a) {
  switch (a) {
    case Algebra::Chi1: return "chi1";
    case Algebra::Chi2: return "chi2";
    default: return "gl2";
  }
}

std::string HeckeElement::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [L, c] : coeffs) {
    if (!s.empty()) s += ", ";
    s += label_str(L) + ": " + c.str();
  }
  return "{" + s + "}";
}

GeneratorName GeneratorName::parse(const std::string& s) {
  auto num = [&](std::size_t at) { return std::atoi(s.c_str() + at); };
  if (s == "V") return {Kind::V, 0};
  if (s == "Vp") return {Kind::Vp, 0};
  if (s == "Z1p") return {Kind::Z1p, 0};
  if (s == "Z") return {Kind::Z, 1};
  if (s.rfind("Z^", 0) == 0) return {Kind::Z, num(2)};
  if (s.rfind("Uhat", 0) == 0) return {Kind::Uhat, num(4)};
  if (s.rfind("T", 0) == 0 && s.size() > 1) return {Kind::T, num(1)};
  if (s.rfind("U", 0) == 0 && s.size() > 1) return {Kind::U, num(1)};
  throw std::domain_error("GeneratorName: cannot parse '" + s + "'");
}

int HeckeAlgebra::default_window() {
  if (const char* env = std::getenv("HECKE_WINDOW")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 6;
}

HeckeAlgebra::HeckeAlgebra(Algebra alg, int iota_sign, int window)
    : alg_(alg),
      chi_(alg == Algebra::Chi2 ? CharVariant::Chi2 : CharVariant::Chi1, iota_sign),
      window_(window),
      tables_(std::make_shared<CosetTables>()) {}

const std::vector<Shape>& HeckeAlgebra::supported_shapes() const {
  static const std::vector<Shape> chi1 = {Shape::H,   Shape::W,   Shape::Y4,
                                          Shape::HY4, Shape::Y4H, Shape::WY4,
                                          Shape::Y4W, Shape::Y4WY4};
  static const std::vector<Shape> chi2 = {Shape::H,   Shape::W,   Shape::Y2,
                                          Shape::HY2, Shape::Y2H, Shape::WY2,
                                          Shape::Y2W, Shape::Y2WY2};
  static const std::vector<Shape> gl2 = {Shape::GD,   Shape::GW,   Shape::GDY2,
                                         Shape::GY2D, Shape::GY2W, Shape::GWY2,
                                         Shape::GY2WY2};
  switch (alg_) {
    case Algebra::Chi1: return chi1;
    case Algebra::Chi2: return chi2;
    default: return gl2;
  }
}

bool HeckeAlgebra::is_supported(const CosetLabel& L) const {
  if (!label_valid(L)) return false;
  const auto& shapes = supported_shapes();
  return std::find(shapes.begin(), shapes.end(), L.shape) != shapes.end();
}

const HeckeAlgebra::LabelCache& HeckeAlgebra::label_cache(const CosetLabel& L) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(L);
  if (it != cache_.end()) return it->second;
  LabelCache lc;
  lc.D = &tables_->get(L);
  lc.rep_vmin = v_min(lc.D->rep);
  lc.weight.reserve(lc.D->right_cosets.size());
  for (const SingleCoset& sc : lc.D->right_cosets) {
    if (flavor() == Flavor::GL2) {
      lc.weight.push_back(Cyclo8(1));
      lc.beta_gl2.push_back(sc.g_inv);
    } else {
      if (!sc.witnessed)
        throw std::logic_error("label_cache: missing coset witness in " + label_str(L));
      Cyclo8 w = chi_.eval_conj(lift(sc.kappa)) * chi_.eval_conj(lift(sc.k));
      if (sc.eta < 0) w = -w;
      lc.weight.push_back(w);
      lc.beta.push_back(meta_inv(lift(sc.g)));
    }
  }
  return cache_.emplace(L, std::move(lc)).first->second;
}

HeckeElement HeckeAlgebra::unit() const { return scalar(Cyclo8(1)); }

HeckeElement HeckeAlgebra::scalar(const Cyclo8& c) const {
  CosetLabel id{flavor() == Flavor::GL2 ? Shape::GD : Shape::H, 0, 0};
  return basis(id, c);
}

HeckeElement HeckeAlgebra::basis(const CosetLabel& L, const Cyclo8& value) const {
  HeckeElement f{alg_, {}};
  if (!is_supported(L))
    throw std::domain_error("basis: label " + label_str(L) + " not supported in " +
                            algebra_str(alg_));
  if (label_spread(L) > window_)
    throw window_exceeded("basis: label " + label_str(L) + " outside window");
  if (!value.is_zero()) f.coeffs[L] = value;
  return f;
}

HeckeElement HeckeAlgebra::generator(const GeneratorName& name) const {
  using Kind = GeneratorName::Kind;
  const bool meta = flavor() == Flavor::SL2Tilde;
  switch (name.kind) {
    case Kind::T: {
      if (std::abs(name.n) > window_)
        throw window_exceeded("generator: T index outside window");
      CosetLabel L{meta ? Shape::H : Shape::GD, name.n, 0};
      return basis(L, Cyclo8(1));
    }
    case Kind::U: {
      if (std::abs(name.n) > window_)
        throw window_exceeded("generator: U index outside window");
      if (!meta) return basis(CosetLabel{Shape::GW, name.n, 0}, Cyclo8(1));
      return basis(CosetLabel{Shape::W, name.n, 0}, chi_.zeta().conj());
    }
    case Kind::Uhat: {
      if (!meta || (name.n != 0 && name.n != 1 && name.n != 2))
        throw std::domain_error("generator: Uhat is U(0|1|2)/sqrt(2) in the genuine algebras");
      Cyclo8 s = Cyclo8::sqrt2().inv();
      if (name.n == 0) s = Dyadic::from_fraction(1, 2) * s;  // U0/(2 sqrt 2)
      return scale(s, generator(GeneratorName{Kind::U, name.n}));
    }
    case Kind::V:
      if (alg_ == Algebra::Chi1) return basis(CosetLabel{Shape::Y4, 0, 0}, Cyclo8(1));
      if (alg_ == Algebra::GL2) return basis(CosetLabel{Shape::GDY2, 0, 0}, Cyclo8(1));
      throw std::domain_error("generator: V lives in chi1/gl2 only");
    case Kind::Vp:
      if (alg_ != Algebra::Chi2) throw std::domain_error("generator: Vp lives in chi2");
      return basis(CosetLabel{Shape::Y2, 0, 0}, chi_.zeta());
    case Kind::Z1p:
      if (alg_ != Algebra::Chi2) throw std::domain_error("generator: Z1p lives in chi2");
      return basis(CosetLabel{Shape::Y2WY2, 1, 0}, Cyclo8(1));
    case Kind::Z:
      if (alg_ != Algebra::GL2) throw std::domain_error("generator: Z lives in gl2");
      return basis(CosetLabel{Shape::GD, 0, name.n}, Cyclo8(1));
  }
  throw std::domain_error("generator: unknown name");
}

HeckeElement HeckeAlgebra::generator(const std::string& name) const {
  return generator(GeneratorName::parse(name));
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
  if (a.alg != alg_ || b.alg != alg_)
    throw std::domain_error("add: algebra mismatch");
  HeckeElement r = a;
  for (const auto& [L, c] : b.coeffs) {
    auto it = r.coeffs.find(L);
    if (it == r.coeffs.end()) {
      r.coeffs[L] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs.erase(it);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& a, const HeckeElement& b) const {
  return add(a, scale(Cyclo8(-1), b));
}

HeckeElement HeckeAlgebra::scale(const Cyclo8& c, const HeckeElement& a) const {
  HeckeElement r{alg_, {}};
  if (c.is_zero()) return r;
  for (const auto& [L, v] : a.coeffs) {
    Cyclo8 cv = c * v;
    if (!cv.is_zero()) r.coeffs[L] = cv;
  }
  return r;
}

Cyclo8 HeckeAlgebra::eval_at_point(const HeckeElement& f, const MetaElement& x,
                                   const Mat2* gl2x) const {
  const Mat2& X = gl2x ? *gl2x : x.g;
  for (const auto& [L, cL] : f.coeffs) {
    const LabelCache& lc = label_cache(L);
    if (gl2x) {
      if (v_det(X) != label_vdet(L) || v_min(X) != lc.rep_vmin) continue;
      for (std::size_t i = 0; i < lc.D->right_cosets.size(); ++i) {
        if (in_K0_4_gl2(X * lc.D->right_cosets[i].g_inv)) return cL;
      }
    } else {
      if (v_min(X) != lc.rep_vmin) continue;
      for (std::size_t i = 0; i < lc.D->right_cosets.size(); ++i) {
        const SingleCoset& sc = lc.D->right_cosets[i];
        if (!in_K0_8(X * sc.g_inv)) continue;
        MetaElement k = meta_mul(x, meta_inv(lift(sc.g)));
        return chi_.eval_conj(k) * lc.weight[i] * cL;
      }
    }
  }
  return Cyclo8(0);
}

Cyclo8 HeckeAlgebra::evaluate(const HeckeElement& f, const MetaElement& x) const {
  if (f.alg != alg_) throw std::domain_error("evaluate: algebra mismatch");
  if (flavor() == Flavor::GL2) return eval_at_point(f, meta_identity(), &x.g);
  return eval_at_point(f, x, nullptr);
}

Cyclo8 HeckeAlgebra::evaluate_gl2(const HeckeElement& f, const Mat2& x) const {
  if (f.alg != alg_) throw std::domain_error("evaluate: algebra mismatch");
  return eval_at_point(f, meta_identity(), &x);
}

int HeckeAlgebra::max_spread(const HeckeElement& f) const {
  int s = 0;
  for (const auto& [L, c] : f.coeffs) s = std::max(s, label_spread(L));
  return s;
}

HeckeElement HeckeAlgebra::convolve(const HeckeElement& f1, const HeckeElement& f2) const {
  if (f1.alg != alg_ || f2.alg != alg_)
    throw std::domain_error("convolve: algebra mismatch");
  HeckeElement out{alg_, {}};
  if (f1.is_zero() || f2.is_zero()) return out;
  const int bound = max_spread(f1) + max_spread(f2);
  if (bound > window_)
    throw window_exceeded("convolve: support bound " + std::to_string(bound) +
                          " exceeds window " + std::to_string(window_));

  const bool gl2 = flavor() == Flavor::GL2;
  std::set<long> vdets1;
  for (const auto& [L1, c1] : f1.coeffs) vdets1.insert(label_vdet(L1));

  for (const auto& [L2, c2] : f2.coeffs) {
    const LabelCache& lc2 = label_cache(L2);
    std::vector<CosetLabel> candidates;
    if (gl2) {
      for (long v1 : vdets1) {
        auto part = tables_->labels_with_spread(Flavor::GL2, bound, supported_shapes(),
                                                v1 + label_vdet(L2));
        candidates.insert(candidates.end(), part.begin(), part.end());
      }
    } else {
      candidates = tables_->labels_with_spread(Flavor::SL2Tilde, bound, supported_shapes());
    }

    const std::size_t m = lc2.D->right_cosets.size();
    for (const CosetLabel& C : candidates) {
      MetaElement xc = lift(label_rep(C));
      Cyclo8 acc(0);
      for (std::size_t j = 0; j < m; ++j) {
        Cyclo8 f2v = lc2.weight[j] * c2;
        if (gl2) {
          Mat2 p = xc.g * lc2.beta_gl2[j];
          Cyclo8 f1v = eval_at_point(f1, meta_identity(), &p);
          if (!f1v.is_zero()) acc += f1v * f2v;
        } else {
          MetaElement p = meta_mul(xc, lc2.beta[j]);
          Cyclo8 f1v = eval_at_point(f1, p, nullptr);
          if (!f1v.is_zero()) acc += f1v * f2v;
        }
      }
      if (!acc.is_zero()) {
        auto it = out.coeffs.find(C);
        if (it == out.coeffs.end()) {
          out.coeffs[C] = acc;
        } else {
          it->second += acc;
          if (it->second.is_zero()) out.coeffs.erase(it);
        }
      }
    }
  }
  return out;
}

Cyclo8 HeckeAlgebra::convolve_value_at(const HeckeElement& f1, const HeckeElement& f2,
                                       const MetaElement& x) const {
  Cyclo8 acc(0);
  const bool gl2 = flavor() == Flavor::GL2;
  for (const auto& [L2, c2] : f2.coeffs) {
    const LabelCache& lc2 = label_cache(L2);
    for (std::size_t j = 0; j < lc2.D->right_cosets.size(); ++j) {
      Cyclo8 f2v = lc2.weight[j] * c2;
      if (gl2) {
        Mat2 p = x.g * lc2.beta_gl2[j];
        acc += eval_at_point(f1, meta_identity(), &p) * f2v;
      } else {
        MetaElement p = meta_mul(x, lc2.beta[j]);
        acc += eval_at_point(f1, p, nullptr) * f2v;
      }
    }
  }
  return acc;
}

HeckeElement HeckeAlgebra::specialize_center(const HeckeElement& f) const {
  if (flavor() != Flavor::GL2) return f;
  HeckeElement r{alg_, {}};
  for (const auto& [L, c] : f.coeffs) {
    CosetLabel L0 = L;
    L0.z = 0;
    auto it = r.coeffs.find(L0);
    if (it == r.coeffs.end()) {
      r.coeffs[L0] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs.erase(it);
    }
  }
  return r;
}

// --- s-expressions --------------------------------------------------------

namespace {

SExpr parse_tokens(const std::vector<std::string>& toks, std::size_t& i) {
  if (i >= toks.size()) throw std::domain_error("sexpr: unexpected end");
  if (toks[i] == "(") {
    SExpr e;
    ++i;
    while (i < toks.size() && toks[i] != ")") e.list.push_back(parse_tokens(toks, i));
    if (i >= toks.size()) throw std::domain_error("sexpr: missing ')'");
    ++i;
    if (e.list.empty()) throw std::domain_error("sexpr: empty list");
    return e;
  }
  if (toks[i] == ")") throw std::domain_error("sexpr: unexpected ')'");
  SExpr e;
  e.atom = toks[i++];
  return e;
}

}  // namespace

SExpr sexpr_parse(const std::string& s) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == ')') {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
      toks.push_back(std::string(1, ch));
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  std::size_t i = 0;
  SExpr e = parse_tokens(toks, i);
  if (i != toks.size()) throw std::domain_error("sexpr: trailing tokens");
  return e;
}

HeckeElement eval_expr(const HeckeAlgebra& alg, const SExpr& e, const Substitution* subst) {
  if (e.is_atom()) {
    const std::string& a = e.atom;
    if (subst) {
      auto it = subst->find(a);
      if (it != subst->end()) return it->second;
    }
    if (a == "sqrt2") return alg.scalar(Cyclo8::sqrt2());
    if (!a.empty() && (std::isdigit(static_cast<unsigned char>(a[0])) ||
                       (a[0] == '-' && a.size() > 1 &&
                        std::isdigit(static_cast<unsigned char>(a[1]))))) {
      return alg.scalar(Cyclo8(std::atoll(a.c_str())));
    }
    return alg.generator(a);
  }
  const std::string& op = e.list.front().atom;
  std::vector<HeckeElement> args;
  for (std::size_t i = 1; i < e.list.size(); ++i)
    args.push_back(eval_expr(alg, e.list[i], subst));
  if (args.empty()) throw std::domain_error("sexpr: operator without operands");
  if (op == "*") {
    HeckeElement r = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) r = alg.convolve(r, args[i]);
    return r;
  }
  if (op == "+") {
    HeckeElement r = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) r = alg.add(r, args[i]);
    return r;
  }
  if (op == "-") {
    if (args.size() == 1) return alg.scale(Cyclo8(-1), args[0]);
    HeckeElement r = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) r = alg.sub(r, args[i]);
    return r;
  }
  throw std::domain_error("sexpr: unknown operator '" + op + "'");
}

HeckeElement eval_expr(const HeckeAlgebra& alg, const std::string& expr,
                       const Substitution* subst) {
  return eval_expr(alg, sexpr_parse(expr), subst);
}

RelationResult verify_relation(const HeckeAlgebra& alg, const std::string& name,
                               const std::string& expr, const Substitution* subst,
                               bool mod_center) {
  RelationResult R;
  R.name = name;
  SExpr e = sexpr_parse(expr);
  if (e.is_atom() || e.list.size() != 3 || e.list.front().atom != "=")
    throw std::domain_error("verify_relation: expected (= lhs rhs)");
  HeckeElement lhs = eval_expr(alg, e.list[1], subst);
  HeckeElement rhs = eval_expr(alg, e.list[2], subst);
  if (mod_center) {
    lhs = alg.specialize_center(lhs);
    rhs = alg.specialize_center(rhs);
  }
  R.ok = lhs == rhs;
  if (!R.ok) {
    R.detail = "lhs = " + lhs.str() + "  rhs = " + rhs.str();
  }
  return R;
}

std::vector<RelationCheck> relation_suite(Algebra alg) {
  std::vector<RelationCheck> suite;
  auto add = [&](const std::string& name, const std::string& expr) {
    suite.push_back({name, expr});
  };
  auto T = [](int n) { return "T" + std::to_string(n); };
  auto U = [](int n) { return "U" + std::to_string(n); };
  auto Z = [](int n) {
    return n == 1 ? std::string("Z") : "Z^" + std::to_string(n);
  };
  const bool gl2 = alg == Algebra::GL2;

  // Index relations, |m|,|n| <= 3.
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      if (m * n < 0) continue;
      add("T" + std::to_string(m) + "*T" + std::to_string(n),
          "(= (* " + T(m) + " " + T(n) + ") " + T(m + n) + ")");
    }
  for (int n = -3; n <= 0; ++n)
    add("U1*" + T(n), "(= (* U1 " + T(n) + ") " + U(1 + n) + ")");
  for (int n = 0; n <= 3; ++n) {
    std::string rhs = gl2 && n > 0 ? "(* " + Z(n) + " " + U(1 - n) + ")" : U(1 - n);
    add(T(n) + "*U1", "(= (* " + T(n) + " U1) " + rhs + ")");
  }
  for (int n = 0; n <= 3; ++n)
    add("U2*" + T(n), "(= (* U2 " + T(n) + ") " + U(2 + n) + ")");
  for (int n = -3; n <= 0; ++n) {
    std::string rhs = gl2 && n < 0 ? "(* " + Z(n) + " " + U(2 - n) + ")" : U(2 - n);
    add(T(n) + "*U2", "(= (* " + T(n) + " U2) " + rhs + ")");
  }
  for (int m = 2; m <= 3; ++m) {
    std::string rhs1 = gl2 ? "(* Z " + T(m - 1) + ")" : T(m - 1);
    std::string rhs2 = gl2 ? "(* " + Z(m) + " " + T(1 - m) + ")" : T(1 - m);
    add("U1*" + U(m), "(= (* U1 " + U(m) + ") " + rhs1 + ")");
    add(U(m) + "*U1", "(= (* " + U(m) + " U1) " + rhs2 + ")");
  }
  for (int m = -3; m <= 1; ++m) {
    std::string rhs1 = gl2 ? "(* " + Z(2) + " " + T(m - 2) + ")" : T(m - 2);
    std::string rhs2 = gl2 ? (m == 0 ? T(2 - m) : "(* " + Z(m) + " " + T(2 - m) + ")")
                           : T(2 - m);
    add("U2*" + U(m), "(= (* U2 " + U(m) + ") " + rhs1 + ")");
    add(U(m) + "*U2", "(= (* " + U(m) + " U2) " + rhs2 + ")");
  }

  if (alg == Algebra::Chi1) {
    add("V*V", "(= (* V V) 1)");
    add("U1*V", "(= (* U1 V) U1)");
    add("V*U1", "(= (* V U1) U1)");
    add("U2*U2", "(= (* U2 U2) 2)");
    add("U1*U1", "(= (* U1 U1) (+ 2 (* 2 V)))");
    add("braid", "(= (* U2 V U2) (* sqrt2 V U2 V))");
    add("U0*U0", "(= (* U0 U0) (+ 8 (* 2 sqrt2 U0) (* 8 V)))");
    add("U0*V", "(= (* U0 V) U0)");
    add("V*U0", "(= (* V U0) U0)");
    add("cubic",
        "(= (* (* 2 Uhat0) (- (* 2 Uhat0) 4) (+ (* 2 Uhat0) 2)) 0)");
    add("pres.1", "(= (* Uhat1 Uhat1) (+ 1 V))");
    add("pres.2", "(= (* Uhat2 Uhat2) 1)");
    add("pres.3a", "(= (* Uhat1 V) Uhat1)");
    add("pres.3b", "(= (* V Uhat1) Uhat1)");
    add("pres.4", "(= (* Uhat2 V Uhat2) (* V Uhat2 V))");
  } else if (alg == Algebra::Chi2) {
    add("Z1p*Z1p", "(= (* Z1p Z1p) 1)");
    add("Z1p*U1*Z1p", "(= (* Z1p U1 Z1p) Vp)");
    add("U2*Z1p", "(= (* U2 Z1p) U2)");
    add("Z1p*U2", "(= (* Z1p U2) U2)");
    add("U2*U2", "(= (* U2 U2) (+ 2 (* 2 Z1p)))");
    add("U1*U1", "(= (* U1 U1) 2)");
    add("U1*Z1p*U1", "(= (* U1 Z1p U1) (* sqrt2 Vp))");
    add("U1*Z1p*U1.alt", "(= (* U1 Z1p U1) (* sqrt2 Z1p U1 Z1p))");
    add("pres.1", "(= (* Uhat1 Uhat1) 1)");
    add("pres.2", "(= (* Uhat2 Uhat2) (+ 1 Z1p))");
    add("pres.3a", "(= (* Uhat2 Z1p) Uhat2)");
    add("pres.3b", "(= (* Z1p Uhat2) Uhat2)");
    add("pres.4", "(= (* Uhat1 Z1p Uhat1) (* Z1p Uhat1 Z1p))");
  } else {
    add("V*V", "(= (* V V) 1)");
    add("U1*U1", "(= (* U1 U1) (* 2 Z (+ 1 V)))");
    add("U1*V", "(= (* U1 V) U1)");
    add("V*U1", "(= (* V U1) U1)");
    add("U2*U2", "(= (* U2 U2) Z^2)");
    add("braid", "(= (* U2 V U2) (* Z V U2 V))");
    add("U0*U0", "(= (* U0 U0) (+ 4 (* 2 U0) (* 4 V)))");
    add("U0*V", "(= (* U0 V) U0)");
    add("V*U0", "(= (* V U0) U0)");
    for (const char* g : {"T1", "T-1", "U0", "U1", "U2", "V"})
      add(std::string("Z central: ") + g,
          "(= (* Z " + std::string(g) + ") (* " + g + " Z))");
  }
  return suite;
}

CommutatorProbe commutator_support_test(const HeckeAlgebra& alg, const CosetLabel& L,
                                        long samples, std::uint64_t seed) {
  if (alg.flavor() != Flavor::SL2Tilde)
    throw std::domain_error("commutator_support_test: genuine algebras only");
  CommutatorProbe P;
  P.label = L;
  Mat2 A = label_rep(L);
  Mat2 Ainv = A.inverse();
  MetaElement At = lift(A);

  auto probe = [&](const Mat2& B) {
    if (!in_K0_8(B) || !in_K0_8(Ainv * B * A)) return;
    ++P.samples_tested;
    MetaElement Bt = lift(B);
    MetaElement comm = meta_mul(meta_mul(meta_inv(Bt), meta_inv(At)),
                                meta_mul(Bt, At));
    Cyclo8 v = alg.chi().eval(comm);
    if (v != Cyclo8(1) && !P.vanishing_certified) {
      P.vanishing_certified = true;
      P.witness_commutator = comm;
      P.witness_value = v;
    }
  };

  // Deterministic witnesses first, then the random triangular sample.
  probe(Mat2{-3, 2, -8, 5});
  for (long s = 1; s <= 8; ++s) probe(mat_x(Dyadic(2 * s)));
  for (long t = 1; t <= 8; ++t) probe(mat_y(Dyadic(8 * t)));
  for (long u : {3, 5, 7, -3}) probe(mat_h(Dyadic(u)));
  Sampler rng(seed);
  for (long i = 0; i < samples; ++i) probe(rng.random_K0_8());
  return P;
}

IsoReport shimura_isomorphism_check(int iota_sign, int window) {
  IsoReport R;
  HeckeAlgebra chi1(Algebra::Chi1, iota_sign, window);
  HeckeAlgebra chi2(Algebra::Chi2, iota_sign, window);
  HeckeAlgebra gl2(Algebra::GL2, iota_sign, window);
  Cyclo8 inv_sqrt2 = Cyclo8::sqrt2().inv();

  auto run = [&](const HeckeAlgebra& target, const std::string& name,
                 const std::string& expr, const Substitution* subst, bool mod_center) {
    RelationResult r = verify_relation(target, name, expr, subst, mod_center);
    R.items.push_back({r.name, r.ok});
    if (!r.ok) R.ok = false;
  };

  // chi1 presentation transported to the level-4 algebra with Z = 1:
  // Uhat1 -> U1/sqrt2, Uhat2 -> U2, V -> V.
  {
    Substitution s;
    s["Uhat1"] = gl2.scale(inv_sqrt2, gl2.generator("U1"));
    s["Uhat2"] = gl2.generator("U2");
    s["V"] = gl2.generator("V");
    run(gl2, "chi1->gl2: Uhat1^2 = 1+V", "(= (* Uhat1 Uhat1) (+ 1 V))", &s, true);
    run(gl2, "chi1->gl2: Uhat2^2 = 1", "(= (* Uhat2 Uhat2) 1)", &s, true);
    run(gl2, "chi1->gl2: Uhat1 V = V Uhat1 = Uhat1",
        "(= (* Uhat1 V) (* V Uhat1))", &s, true);
    run(gl2, "chi1->gl2: Uhat1 V = Uhat1", "(= (* Uhat1 V) Uhat1)", &s, true);
    run(gl2, "chi1->gl2: braid", "(= (* Uhat2 V Uhat2) (* V Uhat2 V))", &s, true);
  }
  // Level-4 presentation transported back into chi1 by the inverse
  // assignment U1 -> sqrt2 Uhat1 = U1, U2 -> Uhat2, V -> V.
  {
    Substitution s;
    s["U1"] = chi1.generator("U1");
    s["U2"] = chi1.generator("Uhat2");
    s["V"] = chi1.generator("V");
    run(chi1, "gl2->chi1: U1^2 = 2(1+V)", "(= (* U1 U1) (* 2 (+ 1 V)))", &s, false);
    run(chi1, "gl2->chi1: U2^2 = 1", "(= (* U2 U2) 1)", &s, false);
    run(chi1, "gl2->chi1: U1 V = V U1 = U1", "(= (* U1 V) (* V U1))", &s, false);
    run(chi1, "gl2->chi1: U1 V = U1", "(= (* U1 V) U1)", &s, false);
    run(chi1, "gl2->chi1: braid", "(= (* U2 V U2) (* V U2 V))", &s, false);
  }

  // chi2 presentation into the level-4 algebra: the reconstructed assignment
  // swaps the roles, Uhat1 -> U2, Uhat2 -> U1/sqrt2, Z1p -> V.
  {
    Substitution s;
    s["Uhat1"] = gl2.generator("U2");
    s["Uhat2"] = gl2.scale(inv_sqrt2, gl2.generator("U1"));
    s["Z1p"] = gl2.generator("V");
    run(gl2, "chi2->gl2: Uhat1^2 = 1", "(= (* Uhat1 Uhat1) 1)", &s, true);
    run(gl2, "chi2->gl2: Uhat2^2 = 1+Z1p", "(= (* Uhat2 Uhat2) (+ 1 Z1p))", &s, true);
    run(gl2, "chi2->gl2: Uhat2 Z1p = Z1p Uhat2 = Uhat2",
        "(= (* Uhat2 Z1p) (* Z1p Uhat2))", &s, true);
    run(gl2, "chi2->gl2: Uhat2 Z1p = Uhat2", "(= (* Uhat2 Z1p) Uhat2)", &s, true);
    run(gl2, "chi2->gl2: braid", "(= (* Uhat1 Z1p Uhat1) (* Z1p Uhat1 Z1p))", &s, true);
  }
  // Level-4 presentation into chi2: U1 -> sqrt2 Uhat2 = U2, U2 -> Uhat1, V -> Z1p.
  {
    Substitution s;
    s["U1"] = chi2.generator("U2");
    s["U2"] = chi2.generator("Uhat1");
    s["V"] = chi2.generator("Z1p");
    run(chi2, "gl2->chi2: U1^2 = 2(1+V)", "(= (* U1 U1) (* 2 (+ 1 V)))", &s, false);
    run(chi2, "gl2->chi2: U2^2 = 1", "(= (* U2 U2) 1)", &s, false);
    run(chi2, "gl2->chi2: U1 V = V U1 = U1", "(= (* U1 V) (* V U1))", &s, false);
    run(chi2, "gl2->chi2: U1 V = U1", "(= (* U1 V) U1)", &s, false);
    run(chi2, "gl2->chi2: braid", "(= (* U2 V U2) (* V U2 V))", &s, false);
  }

  // The chi1 and chi2 relation sets coincide under (V <-> Z1p, Uhat1 <-> Uhat2):
  // transported chi1 relations, checked inside chi2.
  {
    Substitution s;
    s["Uhat1"] = chi2.generator("Uhat2");
    s["Uhat2"] = chi2.generator("Uhat1");
    s["V"] = chi2.generator("Z1p");
    run(chi2, "chi1->chi2: Uhat1^2 = 1+V", "(= (* Uhat1 Uhat1) (+ 1 V))", &s, false);
    run(chi2, "chi1->chi2: Uhat2^2 = 1", "(= (* Uhat2 Uhat2) 1)", &s, false);
    run(chi2, "chi1->chi2: Uhat1 V = Uhat1", "(= (* Uhat1 V) Uhat1)", &s, false);
    run(chi2, "chi1->chi2: V Uhat1 = Uhat1", "(= (* V Uhat1) Uhat1)", &s, false);
    run(chi2, "chi1->chi2: braid", "(= (* Uhat2 V Uhat2) (* V Uhat2 V))", &s, false);
  }
  return R;
}

}  // namespace hecke8
