#include "hecke8/metaplectic.hpp"

#include <algorithm>
#include <limits>

namespace hecke8 {

Mat2 Mat2::inverse() const {
  Dyadic dt = det();
  if (dt.is_zero()) throw std::domain_error("Mat2: inverse of singular matrix");
  Dyadic di = dt.inv();
  return Mat2{d * di, -b * di, -c * di, a * di};
}

std::string Mat2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2 mat_identity() { return Mat2{1, 0, 0, 1}; }

Mat2 mat_x(const Dyadic& s) { return Mat2{1, s, 0, 1}; }

Mat2 mat_y(const Dyadic& s) { return Mat2{1, 0, s, 1}; }

Mat2 mat_h(const Dyadic& t) {
  if (t.is_zero()) throw std::domain_error("mat_h: zero parameter");
  return Mat2{t, 0, 0, t.inv()};
}

Mat2 mat_w(const Dyadic& t) {
  if (t.is_zero()) throw std::domain_error("mat_w: zero parameter");
  return Mat2{0, t, -t.inv(), 0};
}

Mat2 mat_d(const Dyadic& t) {
  if (t.is_zero()) throw std::domain_error("mat_d: zero parameter");
  return Mat2{t, 0, 0, 1};
}

Mat2 mat_w_gl2(const Dyadic& t) {
  if (t.is_zero()) throw std::domain_error("mat_w_gl2: zero parameter");
  return Mat2{0, -1, t, 0};
}

Mat2 mat_z(const Dyadic& t) {
  if (t.is_zero()) throw std::domain_error("mat_z: zero parameter");
  return Mat2{t, 0, 0, t};
}

long v_min(const Mat2& g) {
  long m = std::numeric_limits<long>::max();
  for (const Dyadic* e : {&g.a, &g.b, &g.c, &g.d}) {
    auto v = e->val2();
    if (v) m = std::min(m, *v);
  }
  if (m == std::numeric_limits<long>::max())
    throw std::domain_error("v_min: zero matrix");
  return m;
}

long v_det(const Mat2& g) {
  auto v = g.det().val2();
  if (!v) throw std::domain_error("v_det: singular matrix");
  return *v;
}

Dyadic tau(const Mat2& g) { return g.c.is_zero() ? g.d : g.c; }

int s2(const Mat2& g) {
  if (g.c.is_zero() || g.d.is_zero()) return +1;
  if (*g.c.val2() % 2 == 0) return +1;
  return hilbert2(g.c, g.d);
}

int sigma2(const Mat2& g, const Mat2& h) {
  Mat2 gh = g * h;
  Dyadic t = tau(gh);
  int sign = hilbert2(t * tau(g), t * tau(h));
  return sign * s2(g) * s2(h) * s2(gh);
}

std::string MetaElement::str() const {
  return "(" + g.str() + (eps > 0 ? ",+1)" : ",-1)");
}

MetaElement meta_identity() { return MetaElement{mat_identity(), +1}; }

MetaElement meta_mul(const MetaElement& x, const MetaElement& y) {
  return MetaElement{x.g * y.g, x.eps * y.eps * sigma2(x.g, y.g)};
}

MetaElement meta_inv(const MetaElement& x) {
  Mat2 gi = Mat2{x.g.d, -x.g.b, -x.g.c, x.g.a};  // adjugate; det = 1 on the cover
  return MetaElement{gi, x.eps * sigma2(x.g, gi)};
}

}  // namespace hecke8
