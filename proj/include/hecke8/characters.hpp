#pragma once

#include "hecke8/cyclo8.hpp"
#include "hecke8/metaplectic.hpp"

namespace hecke8 {

// Congruence subgroup membership, all tests exact.
bool in_SL2_Z2(const Mat2& g);
bool in_K0_8(const Mat2& g);   // SL_2(Z_2), c = 0 mod 8
bool in_K1_8(const Mat2& g);   // K_0(8) with a = 1 mod 8
bool in_K0_4_gl2(const Mat2& g);  // GL_2(Z_2), unit determinant, c = 0 mod 4

// g = x(s) h(u) y(t) for g in K_0(8); delta is the sign making
// (x(s),1)(h(u),1)(y(t),1)(I,delta) = (g,+1) under the cover group law.
struct TriangularDecomposition {
  Dyadic s, u, t;
  int delta = +1;
};

// s = b/d, u = 1/d, t = c/d; delta recomputed through sigma_2, never assumed.
// Throws std::domain_error when d is not a 2-adic unit.
TriangularDecomposition triangular_decompose(const Mat2& g);

enum class CharVariant { Chi1, Chi2 };

// Genuine character of the inverse image of K_0(8), parametrized by
// iota = value at (-I,1), a primitive fourth root of unity.  Values on
// (h(u),1):
//   chi1: 1 on u = 1,5 (8);  iota on u = 3,7 (8)
//   chi2: 1 on u = 1;  iota on u = 7;  -1 on u = 5;  -iota on u = 3 (8)
// General elements are evaluated through the triangular decomposition:
// chi(A,eps) = chi(h(u),1) * chi(I, eps*delta), with chi(I,-1) = -1.
class GenuineCharacter {
public:
  GenuineCharacter(CharVariant variant, int iota_sign = +1);

  // Central parameter matching the classical weight k + 1/2 normalization
  // iota = -i^{2k+1}: +i for odd k, -i for even k.
  static int iota_sign_for_weight(int k) { return k % 2 != 0 ? +1 : -1; }

  CharVariant variant() const { return variant_; }
  const Cyclo8& iota() const { return iota_; }
  // The torus-normalizer extension value gamma(w(1),1) = (1 + iota)/sqrt(2),
  // an eighth root of unity.
  const Cyclo8& zeta() const { return zeta_; }

  Cyclo8 value_h(int residue8) const;  // table value on (h(u),1)
  Cyclo8 eval(const MetaElement& x) const;       // pre: in_K0_8(x.g)
  Cyclo8 eval_conj(const MetaElement& x) const;  // complex conjugate of eval

private:
  CharVariant variant_;
  Cyclo8 iota_;
  Cyclo8 zeta_;
};

}  // namespace hecke8
