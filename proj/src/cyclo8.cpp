#include "hecke8/cyclo8.hpp"

#include <cmath>

namespace hecke8 {

Cyclo8 Cyclo8::i4(int sign) {
  Cyclo8 r(0, 0, 1, 0);
  return sign >= 0 ? r : -r;
}

bool Cyclo8::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Cyclo8::is_rational() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Cyclo8 Cyclo8::operator-() const {
  return Cyclo8(-c_[0], -c_[1], -c_[2], -c_[3]);
}

Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b) {
  return Cyclo8(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
                a.c_[3] + b.c_[3]);
}

Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b) { return a + (-b); }

Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b) {
  std::array<Dyadic, 4> r{};
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[j].is_zero()) continue;
      Dyadic t = a.c_[i] * b.c_[j];
      int k = i + j;
      if (k >= 4) {
        k -= 4;
        t = -t;  // z^4 = -1
      }
      r[k] += t;
    }
  }
  return Cyclo8(r[0], r[1], r[2], r[3]);
}

bool operator<(const Cyclo8& a, const Cyclo8& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

Cyclo8 Cyclo8::galois(int k) const {
  switch (((k % 8) + 8) % 8) {
    case 1: return *this;
    case 3: return Cyclo8(c_[0], c_[3], -c_[2], c_[1]);   // z -> z^3
    case 5: return Cyclo8(c_[0], -c_[1], c_[2], -c_[3]);  // z -> z^5 = -z
    case 7: return Cyclo8(c_[0], -c_[3], -c_[2], -c_[1]); // z -> z^7 = conj
    default: throw std::domain_error("Cyclo8::galois: k must be odd");
  }
}

Cyclo8 Cyclo8::inv() const {
  if (is_zero()) throw std::domain_error("Cyclo8: inverse of zero");
  Cyclo8 cof = galois(3) * galois(5) * galois(7);
  Cyclo8 norm = *this * cof;
  if (!norm.is_rational() || norm.c_[0].is_zero())
    throw std::logic_error("Cyclo8::inv: norm is not a nonzero rational");
  return norm.c_[0].inv() * cof;
}

std::complex<double> Cyclo8::approx() const {
  const std::complex<double> z = std::polar(1.0, M_PI / 4.0);
  std::complex<double> acc = 0.0, pw = 1.0;
  for (int i = 0; i < 4; ++i) {
    acc += c_[i].approx() * pw;
    pw *= z;
  }
  return acc;
}

std::string Cyclo8::str() const {
  static const char* basis[4] = {"", "z8", "z8^2", "z8^3"};
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    std::string term = c_[i].str();
    if (i > 0) {
      if (term == "1") term = basis[i];
      else if (term == "-1") term = std::string("-") + basis[i];
      else term += std::string("*") + basis[i];
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace hecke8
