#pragma once

#include <array>
#include <complex>
#include <string>

#include "hecke8/dyadic.hpp"

namespace hecke8 {

// Element of Q(zeta_8) on the power basis {1, z, z^2, z^3}, z = zeta_8,
// with exact rational coefficients.  Reduction rule: z^4 = -1.  This field
// carries i = z^2 and sqrt(2) = z - z^3, which is all the scalars the Hecke
// algebras need.
class Cyclo8 {
public:
  Cyclo8() = default;
  Cyclo8(long long n) { c_[0] = Dyadic(n); }
  Cyclo8(const Dyadic& r) { c_[0] = r; }
  Cyclo8(Dyadic c0, Dyadic c1, Dyadic c2, Dyadic c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo8 zeta8() { return Cyclo8(0, 1, 0, 0); }
  static Cyclo8 sqrt2() { return Cyclo8(0, 1, 0, -1); }  // z - z^3
  static Cyclo8 i4(int sign);                            // +-z^2, a primitive 4th root

  const Dyadic& coeff(int i) const { return c_[i]; }
  bool is_zero() const;
  bool is_rational() const;
  Dyadic rational_part() const { return c_[0]; }

  Cyclo8 operator-() const;
  friend Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b);
  friend Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b);
  friend Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b);
  Cyclo8& operator+=(const Cyclo8& b) { return *this = *this + b; }
  Cyclo8& operator-=(const Cyclo8& b) { return *this = *this - b; }
  Cyclo8& operator*=(const Cyclo8& b) { return *this = *this * b; }

  friend bool operator==(const Cyclo8& a, const Cyclo8& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclo8& a, const Cyclo8& b) { return !(a == b); }
  friend bool operator<(const Cyclo8& a, const Cyclo8& b);  // lexicographic, for maps

  // Galois action z -> z^k for odd k; k = 7 is complex conjugation.
  Cyclo8 galois(int k) const;
  Cyclo8 conj() const { return galois(7); }
  // Field inverse via the product of Galois conjugates.  Throws on zero.
  Cyclo8 inv() const;

  std::complex<double> approx() const;  // evaluate at z = e^{i pi/4}
  std::string str() const;

private:
  std::array<Dyadic, 4> c_{};
};

inline Cyclo8 operator*(const Dyadic& s, const Cyclo8& x) { return Cyclo8(s) * x; }

}  // namespace hecke8
