#include "hecke8/characters.hpp"

namespace hecke8 {

bool in_SL2_Z2(const Mat2& g) {
  return g.a.in_Z2() && g.b.in_Z2() && g.c.in_Z2() && g.d.in_Z2() &&
         g.det() == Dyadic(1);
}

bool in_K0_8(const Mat2& g) {
  return in_SL2_Z2(g) && g.c.congruent_mod2(Dyadic(0), 3);
}

bool in_K1_8(const Mat2& g) {
  return in_K0_8(g) && g.a.congruent_mod2(Dyadic(1), 3);
}

bool in_K0_4_gl2(const Mat2& g) {
  if (!(g.a.in_Z2() && g.b.in_Z2() && g.c.in_Z2() && g.d.in_Z2())) return false;
  Dyadic dt = g.det();
  return !dt.is_zero() && dt.is_unit2() && g.c.congruent_mod2(Dyadic(0), 2);
}

TriangularDecomposition triangular_decompose(const Mat2& g) {
  if (g.d.is_zero() || !g.d.is_unit2())
    throw std::domain_error("triangular_decompose: lower-right entry is not a unit");
  TriangularDecomposition td;
  td.s = g.b / g.d;
  td.u = g.d.inv();
  td.t = g.c / g.d;
  MetaElement prod = meta_mul(meta_mul(lift(mat_x(td.s)), lift(mat_h(td.u))),
                              lift(mat_y(td.t)));
  if (prod.g != g)
    throw std::logic_error("triangular_decompose: multiply-back mismatch");
  td.delta = prod.eps;  // (x,1)(h,1)(y,1)(I,delta) = (g,+1)
  return td;
}

GenuineCharacter::GenuineCharacter(CharVariant variant, int iota_sign)
    : variant_(variant), iota_(Cyclo8::i4(iota_sign)) {
  zeta_ = (Cyclo8(1) + iota_) * Cyclo8::sqrt2().inv();
}

Cyclo8 GenuineCharacter::value_h(int residue8) const {
  switch (residue8 & 7) {
    case 1: return Cyclo8(1);
    case 5: return variant_ == CharVariant::Chi1 ? Cyclo8(1) : Cyclo8(-1);
    case 7: return iota_;
    case 3: return variant_ == CharVariant::Chi1 ? iota_ : -iota_;
    default: throw std::domain_error("GenuineCharacter::value_h: even residue");
  }
}

Cyclo8 GenuineCharacter::eval(const MetaElement& x) const {
  if (!in_K0_8(x.g))
    throw std::domain_error("GenuineCharacter::eval: matrix not in K_0(8)");
  TriangularDecomposition td = triangular_decompose(x.g);
  int u8 = static_cast<int>(td.u.unit_residue(3));
  Cyclo8 v = value_h(u8);
  if (x.eps * td.delta < 0) v = -v;  // chi(I,-1) = iota^2 = -1
  return v;
}

Cyclo8 GenuineCharacter::eval_conj(const MetaElement& x) const {
  return eval(x).conj();
}

}  // namespace hecke8
