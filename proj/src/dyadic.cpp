#include "hecke8/dyadic.hpp"

#include <boost/multiprecision/detail/default_ops.hpp>
#include <cmath>
#include <cstdlib>

namespace hecke8 {

namespace {

long strip_twos(Int& x) {
  if (x == 0) return 0;
  unsigned long v = boost::multiprecision::lsb(boost::multiprecision::abs(x));
  x >>= v;
  return static_cast<long>(v);
}

}  // namespace

void Dyadic::set_fraction(Int p, Int q) {
  if (q == 0) throw std::domain_error("Dyadic: zero denominator");
  if (p == 0) {
    num_ = 0;
    den_ = 1;
    exp_ = 0;
    return;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long e = strip_twos(p) - strip_twos(q);
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
  num_ = p / g;
  den_ = q / g;
  exp_ = e;
}

Dyadic Dyadic::from_fraction(const Int& p, const Int& q) {
  Dyadic d;
  d.set_fraction(p, q);
  return d;
}

Dyadic Dyadic::two_pow(long e) {
  Dyadic d;
  d.num_ = 1;
  d.den_ = 1;
  d.exp_ = e;
  return d;
}

std::optional<long> Dyadic::val2() const {
  if (num_ == 0) return std::nullopt;
  return exp_;
}

Int Dyadic::as_integer() const {
  if (!is_integer()) throw std::domain_error("Dyadic: not an integer: " + str());
  return num_ << exp_;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic Dyadic::inv() const {
  if (num_ == 0) throw std::domain_error("Dyadic: inverse of zero");
  Dyadic r;
  r.num_ = num_ > 0 ? Int(den_) : Int(-den_);
  r.den_ = boost::multiprecision::abs(num_);
  r.exp_ = -exp_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  long e = std::min(a.exp_, b.exp_);
  Int p = (a.num_ * b.den_ << static_cast<unsigned long>(a.exp_ - e)) +
          (b.num_ * a.den_ << static_cast<unsigned long>(b.exp_ - e));
  Dyadic r;
  r.set_fraction(p, a.den_ * b.den_);
  r.exp_ += e;
  if (r.num_ == 0) r.exp_ = 0;
  return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.num_ == 0 || b.num_ == 0) return Dyadic();
  Dyadic r;
  r.set_fraction(a.num_ * b.num_, a.den_ * b.den_);
  r.exp_ += a.exp_ + b.exp_;
  return r;
}

Dyadic operator/(const Dyadic& a, const Dyadic& b) { return a * b.inv(); }

bool operator<(const Dyadic& a, const Dyadic& b) {
  Dyadic d = a - b;
  return d.num_ < 0;
}

bool Dyadic::congruent_mod2(const Dyadic& b, long n) const {
  Dyadic d = *this - b;
  auto v = d.val2();
  return !v.has_value() || *v >= n;
}

Int inv_mod_pow2(const Int& x, unsigned prec) {
  if ((x & 1) == 0) throw std::domain_error("inv_mod_pow2: even argument");
  Int mod = Int(1) << prec;
  Int mask = mod - 1;
  Int inv = 1;
  // Newton iteration doubles the number of correct bits each round.
  for (unsigned bits = 1; bits < prec; bits *= 2) {
    inv = (inv * (2 - ((x * inv) & mask))) & mask;
  }
  return inv & mask;
}

Int Dyadic::unit_residue(unsigned prec) const {
  if (!is_unit2()) throw std::domain_error("unit_residue: not a 2-adic unit: " + str());
  return odd_part_residue(prec);
}

Int Dyadic::odd_part_residue(unsigned prec) const {
  if (num_ == 0) throw std::domain_error("odd_part_residue: zero value");
  Int mod = Int(1) << prec;
  Int r = (num_ % mod) * inv_mod_pow2(den_, prec) % mod;
  if (r < 0) r += mod;
  return r;
}

Int Dyadic::residue_mod2(unsigned prec) const {
  if (!in_Z2()) throw std::domain_error("residue_mod2: not a 2-adic integer: " + str());
  if (num_ == 0 || exp_ >= static_cast<long>(prec)) return 0;
  Int mod = Int(1) << prec;
  Int r = ((num_ << exp_) % mod) * inv_mod_pow2(den_, prec) % mod;
  if (r < 0) r += mod;
  return r;
}

double Dyadic::approx() const {
  if (num_ == 0) return 0.0;
  double v = num_.convert_to<double>() / den_.convert_to<double>();
  return v * std::ldexp(1.0, static_cast<int>(exp_));
}

std::string Dyadic::str() const {
  if (num_ == 0) return "0";
  if (den_ == 1 && exp_ >= 0 && exp_ <= 16) return Int(num_ << exp_).str();
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  if (exp_ != 0) s += "*2^" + std::to_string(exp_);
  return s;
}

Dyadic Dyadic::parse(const std::string& s) {
  if (s.empty()) throw std::domain_error("Dyadic::parse: empty string");
  std::string body = s;
  long e = 0;
  auto star = body.find("*2^");
  if (star != std::string::npos) {
    e = std::strtol(body.c_str() + star + 3, nullptr, 10);
    body = body.substr(0, star);
  } else if (body.rfind("2^", 0) == 0 || body.rfind("-2^", 0) == 0) {
    bool neg = body[0] == '-';
    e = std::strtol(body.c_str() + (neg ? 3 : 2), nullptr, 10);
    body = neg ? "-1" : "1";
  }
  Int p, q = 1;
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    p = Int(body.substr(0, slash));
    q = Int(body.substr(slash + 1));
  } else {
    p = Int(body);
  }
  Dyadic d = from_fraction(p, q);
  d.exp_ += e;
  if (d.num_ == 0) d.exp_ = 0;
  return d;
}

int unit_eps(const Int& residue8) {
  Int r = residue8 & 3;
  return r == 3 ? 1 : 0;
}

int unit_omega(const Int& residue8) {
  Int r = residue8 & 7;
  return (r == 3 || r == 5) ? 1 : 0;
}

int hilbert2(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert2: zero argument");
  long alpha = *a.val2();
  long beta = *b.val2();
  Int u = a.odd_part_residue(3);
  Int v = b.odd_part_residue(3);
  long e = static_cast<long>(unit_eps(u)) * unit_eps(v) + alpha * unit_omega(v) +
           beta * unit_omega(u);
  return (e % 2 == 0) ? +1 : -1;
}

int kronecker2(const Int& m) {
  if ((m & 1) == 0) throw std::domain_error("kronecker2: even argument");
  Int r = m % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? +1 : -1;
}

UnitClass UnitClass::of(const Dyadic& u) {
  return UnitClass{u.unit_residue(precision)};
}

}  // namespace hecke8
