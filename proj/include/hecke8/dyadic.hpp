#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace hecke8 {

using Int = boost::multiprecision::cpp_int;

// Exact rational in the 2-adically normalized form
//
//     value = (num/den) * 2^exp
//
// with num odd (or zero), den odd positive, gcd(|num|, den) = 1.  The form is
// unique, so equality is field-wise comparison and val2 is just `exp`.
// Elements of Z[1/2] are exactly those with den == 1; 2-adic integers are
// those with exp >= 0.
class Dyadic {
public:
  Dyadic() : num_(0), den_(1), exp_(0) {}
  Dyadic(long long n) { set_fraction(Int(n), 1); }
  Dyadic(const Int& n) { set_fraction(n, 1); }

  static Dyadic from_fraction(const Int& p, const Int& q);
  static Dyadic two_pow(long e);

  bool is_zero() const { return num_ == 0; }
  // 2-adic valuation; empty optional is the +infinity marker for zero.
  std::optional<long> val2() const;
  // Membership in Z_2 (odd denominators are 2-adic units).
  bool in_Z2() const { return num_ == 0 || exp_ >= 0; }
  bool is_unit2() const { return num_ != 0 && exp_ == 0; }
  // Plain integer (member of Z).
  bool is_integer() const { return num_ == 0 || (den_ == 1 && exp_ >= 0); }
  Int as_integer() const;

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  long exp() const { return exp_; }

  Dyadic operator-() const;
  Dyadic inv() const;  // throws std::domain_error on zero

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator/(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
  Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
  Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.den_ == b.den_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  // Value order, for deterministic containers and reports.
  friend bool operator<(const Dyadic& a, const Dyadic& b);

  // a == b in Z_2 modulo 2^n, i.e. val2(a - b) >= n.
  bool congruent_mod2(const Dyadic& b, long n) const;

  // Residue of a 2-adic unit modulo 2^prec, normalized into [1, 2^prec).
  // Precondition: is_unit2().
  Int unit_residue(unsigned prec) const;
  // Residue mod 2^prec of the odd part num/den (the value with 2^exp
  // stripped).  Precondition: nonzero.
  Int odd_part_residue(unsigned prec) const;
  // Residue of a 2-adic integer modulo 2^prec, in [0, 2^prec).
  Int residue_mod2(unsigned prec) const;

  double approx() const;
  std::string str() const;
  static Dyadic parse(const std::string& s);  // inverse of str(), plus "p/q" forms

private:
  void set_fraction(Int p, Int q);
  Int num_;   // odd or zero
  Int den_;   // odd, positive
  long exp_;
};

// Residues of a 2-adic unit that drive the quadratic symbols:
// eps(u) = (u-1)/2 mod 2, omega(u) = (u^2-1)/8 mod 2.
int unit_eps(const Int& residue8);
int unit_omega(const Int& residue8);

// 2-adic Hilbert symbol (a,b)_2 in {+1,-1} by the closed form
// (a,b) = (-1)^{eps(u)eps(v) + alpha*omega(v) + beta*omega(u)}
// for a = 2^alpha u, b = 2^beta v.  Throws std::domain_error on zero input.
int hilbert2(const Dyadic& a, const Dyadic& b);

// Kronecker symbol (2/m) for odd m: +1 iff m = +-1 mod 8.
int kronecker2(const Int& m);

// Modular inverse of odd x modulo 2^prec.
Int inv_mod_pow2(const Int& x, unsigned prec);

// Odd residue class modulo 2^precision, default window mod 64.  The character
// tables only read the class mod 8; the wider window is margin for derived
// computations.
struct UnitClass {
  static constexpr unsigned precision = 6;
  Int residue;  // odd, in [1, 2^precision)

  static UnitClass of(const Dyadic& u);
  int mod8() const { return static_cast<int>(residue & 7); }
  friend bool operator==(const UnitClass& a, const UnitClass& b) {
    return a.residue == b.residue;
  }
};

}  // namespace hecke8
