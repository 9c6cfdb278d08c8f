#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke8/cosets.hpp"

namespace hecke8 {

enum class Algebra { Chi1, Chi2, GL2 };

Flavor algebra_flavor(Algebra a);
std::string algebra_str(Algebra a);

// Finitely supported bi-equivariant function, stored as the value at the
// lifted base representative (rep,+1) of each double coset in its support
// (at rep itself for GL2).  Zero coefficients are never stored.
struct HeckeElement {
  Algebra alg = Algebra::Chi1;
  std::map<CosetLabel, Cyclo8> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.alg == b.alg && a.coeffs == b.coeffs;
  }
  std::string str() const;
};

struct GeneratorName {
  enum class Kind { T, U, Uhat, V, Vp, Z1p, Z } kind;
  int n = 0;  // index for T/U/Uhat, center power for Z

  static GeneratorName parse(const std::string& s);  // "T3", "U-1", "Uhat2", "V", "Vp", "Z1p", "Z", "Z^-2"
};

class window_exceeded : public std::runtime_error {
public:
  explicit window_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Context for one of the three algebras: character parameter iota, the
// classification/convolution window, and the shared coset tables.
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(Algebra alg, int iota_sign = +1, int window = default_window());

  static int default_window();  // 6 unless HECKE_WINDOW overrides

  Algebra tag() const { return alg_; }
  Flavor flavor() const { return algebra_flavor(alg_); }
  const GenuineCharacter& chi() const { return chi_; }
  int window() const { return window_; }
  CosetTables& tables() const { return *tables_; }

  const std::vector<Shape>& supported_shapes() const;
  bool is_supported(const CosetLabel& L) const;

  HeckeElement zero() const { return HeckeElement{alg_, {}}; }
  HeckeElement unit() const;
  HeckeElement scalar(const Cyclo8& c) const;
  HeckeElement basis(const CosetLabel& L, const Cyclo8& value) const;
  HeckeElement generator(const GeneratorName& name) const;
  HeckeElement generator(const std::string& name) const;

  HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement sub(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement scale(const Cyclo8& c, const HeckeElement& a) const;

  // Value of f at a point of the cover (SL2Tilde) or the group (GL2).
  // Points in unsupported double cosets give 0.
  Cyclo8 evaluate(const HeckeElement& f, const MetaElement& x) const;
  Cyclo8 evaluate_gl2(const HeckeElement& f, const Mat2& x) const;

  // Exact convolution.  Throws window_exceeded when the support bound
  // spread(f1)+spread(f2) leaves the window.
  HeckeElement convolve(const HeckeElement& f1, const HeckeElement& f2) const;

  // Convolution value at one point, usable at unsupported double cosets
  // (where the result must vanish; the support-closure tests rely on this).
  Cyclo8 convolve_value_at(const HeckeElement& f1, const HeckeElement& f2,
                           const MetaElement& x) const;

  // Drop the central coordinate: specialize Z -> 1 (GL2 only).
  HeckeElement specialize_center(const HeckeElement& f) const;

  int max_spread(const HeckeElement& f) const;

private:
  struct LabelCache {
    const CosetDecomposition* D = nullptr;
    std::vector<Cyclo8> weight;       // value multiplier of each right coset
    std::vector<MetaElement> beta;    // meta_inv of the lifted coset reps
    std::vector<Mat2> beta_gl2;       // plain inverses, GL2 flavor
    long rep_vmin = 0;
  };
  const LabelCache& label_cache(const CosetLabel& L) const;
  Cyclo8 eval_at_point(const HeckeElement& f, const MetaElement& x,
                       const Mat2* gl2x) const;

  Algebra alg_;
  GenuineCharacter chi_;
  int window_;
  std::shared_ptr<CosetTables> tables_;
  mutable std::map<CosetLabel, LabelCache> cache_;
  mutable std::mutex mu_;
};

// --- s-expression relation interface -------------------------------------
//
// Expressions: atoms are integer literals, "sqrt2", "Z^k", or generator
// names; lists are (* e1 e2 ...), (+ e1 e2 ...), (- e1 e2), (= lhs rhs).
struct SExpr {
  std::string atom;
  std::vector<SExpr> list;
  bool is_atom() const { return list.empty() && !atom.empty(); }
};

SExpr sexpr_parse(const std::string& s);

using Substitution = std::map<std::string, HeckeElement>;

HeckeElement eval_expr(const HeckeAlgebra& alg, const SExpr& e,
                       const Substitution* subst = nullptr);
HeckeElement eval_expr(const HeckeAlgebra& alg, const std::string& expr,
                       const Substitution* subst = nullptr);

struct RelationResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Checks an expression of the form (= lhs rhs) by exact convolution.
// mod_center folds the central coordinate before comparing (GL2 only).
RelationResult verify_relation(const HeckeAlgebra& alg, const std::string& name,
                               const std::string& expr,
                               const Substitution* subst = nullptr,
                               bool mod_center = false);

struct RelationCheck {
  std::string name;
  std::string expr;
};

// The full named relation suite of the algebra: index relations for
// |m|,|n| <= 3, the quadratic/braid/cubic identities, and the defining
// relations of the presentation.
std::vector<RelationCheck> relation_suite(Algebra alg);

// Commutator-based support/vanishing probe at one double coset: samples
// elements of K cap rep K rep^{-1} and evaluates chi on the metaplectic
// commutator [k^{-1}, rep^{-1}].  A value != 1 certifies that the algebra
// vanishes on the double coset.
struct CommutatorProbe {
  CosetLabel label;
  bool vanishing_certified = false;
  long samples_tested = 0;
  MetaElement witness_commutator;  // valid when vanishing_certified
  Cyclo8 witness_value;
};

CommutatorProbe commutator_support_test(const HeckeAlgebra& alg, const CosetLabel& L,
                                        long samples, std::uint64_t seed);

// Generator-by-generator relation transport between the level-8 metaplectic
// presentations and the level-4 presentation with Z specialized to 1.
struct IsoCheckItem {
  std::string name;
  bool ok = false;
};

struct IsoReport {
  bool ok = true;
  std::vector<IsoCheckItem> items;
};

IsoReport shimura_isomorphism_check(int iota_sign = +1,
                                    int window = HeckeAlgebra::default_window());

}  // namespace hecke8
