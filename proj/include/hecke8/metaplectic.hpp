#pragma once

#include <string>

#include "hecke8/dyadic.hpp"

namespace hecke8 {

// 2x2 matrix over Q with exact dyadically-normalized entries.  Used both for
// SL_2(Q_2) (determinant 1, the metaplectic side) and GL_2(Q_2) (nonzero
// determinant, the level-4 side); operations that require determinant 1 check
// it.
struct Mat2 {
  Dyadic a, b, c, d;

  Dyadic det() const { return a * d - b * c; }
  bool is_sl2() const { return det() == Dyadic(1); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  Mat2 inverse() const;  // throws std::domain_error if singular
  std::string str() const;
};

Mat2 mat_identity();
Mat2 mat_x(const Dyadic& s);  // [[1,s],[0,1]]
Mat2 mat_y(const Dyadic& s);  // [[1,0],[s,1]]
Mat2 mat_h(const Dyadic& t);  // [[t,0],[0,1/t]], t != 0
Mat2 mat_w(const Dyadic& t);  // [[0,t],[-1/t,0]], t != 0
Mat2 mat_d(const Dyadic& t);  // [[t,0],[0,1]], t != 0   (GL_2)
Mat2 mat_w_gl2(const Dyadic& t);  // [[0,-1],[t,0]], t != 0   (GL_2)
Mat2 mat_z(const Dyadic& t);  // [[t,0],[0,t]], t != 0   (GL_2 center)

// Minimum 2-adic valuation over the entries; constant on K-double cosets.
long v_min(const Mat2& g);
// Valuation of the determinant.
long v_det(const Mat2& g);

// tau(g) = c if c != 0 else d; the anti-diagonal marker of the cocycle.
Dyadic tau(const Mat2& g);
// s_2(g) = <c,d> when cd != 0 and ord_2(c) is odd, else 1.
int s2(const Mat2& g);
// Kubota-Gelbart 2-cocycle
// sigma_2(g,h) = <tau(gh)tau(g), tau(gh)tau(h)> s_2(g) s_2(h) s_2(gh).
int sigma2(const Mat2& g, const Mat2& h);

// Element (g, eps) of the double cover of SL_2(Q_2), with group law
// (g,e1)(h,e2) = (gh, e1*e2*sigma_2(g,h)).
struct MetaElement {
  Mat2 g;
  int eps = +1;

  friend bool operator==(const MetaElement& x, const MetaElement& y) {
    return x.eps == y.eps && x.g == y.g;
  }
  friend bool operator!=(const MetaElement& x, const MetaElement& y) { return !(x == y); }
  std::string str() const;
};

inline MetaElement lift(const Mat2& g) { return MetaElement{g, +1}; }
MetaElement meta_identity();
MetaElement meta_mul(const MetaElement& x, const MetaElement& y);
MetaElement meta_inv(const MetaElement& x);

}  // namespace hecke8
