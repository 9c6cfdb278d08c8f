#include "hecke8/qexp.hpp"

#include <algorithm>
#include <map>

namespace hecke8 {

QExpansion QExpansion::zero(int k, long level, long N) {
  QExpansion f;
  f.k = k;
  f.level = level;
  f.N = N;
  f.a.assign(static_cast<std::size_t>(N) + 1, Dyadic(0));
  return f;
}

const Dyadic& QExpansion::coeff(long n) const {
  if (n < 1 || n > N) throw std::out_of_range("QExpansion: index outside truncation");
  return a[static_cast<std::size_t>(n)];
}

void QExpansion::set(long n, const Dyadic& v) {
  if (n < 1 || n > N) throw std::out_of_range("QExpansion: index outside truncation");
  a[static_cast<std::size_t>(n)] = v;
}

bool QExpansion::is_zero() const {
  for (long n = 1; n <= N; ++n)
    if (!coeff(n).is_zero()) return false;
  return true;
}

std::string QExpansion::str(long max_terms) const {
  std::string s;
  long shown = 0;
  for (long n = 1; n <= N && shown < max_terms; ++n) {
    if (coeff(n).is_zero()) continue;
    std::string c = coeff(n).str();
    if (!s.empty() && c[0] != '-') s += "+";
    if (c == "1") c.clear();
    else if (c == "-1") c = "-";
    s += c + "q^" + std::to_string(n);
    ++shown;
  }
  if (s.empty()) s = "0";
  return s + " + O(q^" + std::to_string(N + 1) + ")";
}

int sign_class(int k, long n) {
  long v = (k % 2 == 0) ? n : -n;
  return static_cast<int>(((v % 4) + 4) % 4);
}

QExpansion qadd(const QExpansion& f, const QExpansion& g) {
  QExpansion r = QExpansion::zero(f.k, f.level, std::min(f.N, g.N));
  for (long n = 1; n <= r.N; ++n) r.set(n, f.coeff(n) + g.coeff(n));
  return r;
}

QExpansion qsub(const QExpansion& f, const QExpansion& g) {
  return qadd(f, qscale(Dyadic(-1), g));
}

QExpansion qscale(const Dyadic& c, const QExpansion& f) {
  QExpansion r = f;
  for (long n = 1; n <= r.N; ++n) r.set(n, c * f.coeff(n));
  return r;
}

bool qequal(const QExpansion& f, const QExpansion& g) {
  long N = std::min(f.N, g.N);
  for (long n = 1; n <= N; ++n)
    if (f.coeff(n) != g.coeff(n)) return false;
  return true;
}

QExpansion u4(const QExpansion& f) {
  QExpansion r = QExpansion::zero(f.k, f.level, f.N / 4);
  for (long n = 1; n <= r.N; ++n) r.set(n, f.coeff(4 * n));
  return r;
}

bool plus_member(const QExpansion& f) {
  for (long n = 1; n <= f.N; ++n) {
    int c = sign_class(f.k, n);
    if ((c == 2 || c == 3) && !f.coeff(n).is_zero()) return false;
  }
  return true;
}

bool minus_member(const QExpansion& f) {
  for (long n = 1; n <= f.N; ++n) {
    int c = sign_class(f.k, n);
    if ((c == 0 || c == 1) && !f.coeff(n).is_zero()) return false;
  }
  return true;
}

QExpansion project_plus(const QExpansion& f) {
  QExpansion r = f;
  for (long n = 1; n <= f.N; ++n) {
    int c = sign_class(f.k, n);
    if (c == 2 || c == 3) r.set(n, Dyadic(0));
  }
  return r;
}

QExpansion project_complement(const QExpansion& f) {
  return qsub(f, project_plus(f));
}

ScaledQExpansion p8_coeff(const QExpansion& f) {
  ScaledQExpansion r;
  Cyclo8 kappa(Dyadic(kronecker2(Int(2 * f.k + 1))));
  r.scalar = Cyclo8::sqrt2() * kappa;
  r.series = qsub(project_plus(f), project_complement(f));
  return r;
}

int legendre(const Int& a, long p) {
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  // Euler's criterion.
  Int acc = 1, base = r;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == 1 ? +1 : -1;
}

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Int int_pow(long b, long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

QExpansion t_p2(const QExpansion& f, long p) {
  if (!is_odd_prime(p)) throw std::domain_error("t_p2: p must be an odd prime");
  const long p2 = p * p;
  QExpansion r = QExpansion::zero(f.k, f.level, f.N / p2);
  Dyadic pk1(int_pow(p, f.k - 1));
  Dyadic p2k1(int_pow(p, 2 * f.k - 1));
  for (long n = 1; n <= r.N; ++n) {
    Int twisted = (f.k % 2 == 0) ? Int(n) : Int(-n);
    Dyadic b = f.coeff(p2 * n) + Dyadic(legendre(twisted, p)) * pk1 * f.coeff(n);
    if (n % p2 == 0) b += p2k1 * f.coeff(n / p2);
    r.set(n, b);
  }
  return r;
}

namespace {

struct FixtureSpec {
  long N;
  std::vector<std::pair<long, long>> terms;
};

const std::map<std::string, FixtureSpec>& fixture_table() {
  static const std::map<std::string, FixtureSpec> table = {
      {"f1", {49, {{1, 1}, {5, 1}, {6, -2}, {9, -1}, {17, -1}, {25, 2}, {30, 2},
                   {42, 2}, {45, -3}}}},
      {"f2", {39, {{4, 1}, {11, -2}, {16, -2}, {19, 2}, {20, 1}, {24, -2},
                   {28, 3}, {35, 2}, {36, -1}}}},
      {"f3", {49, {{7, 1}, {11, -1}, {16, -2}, {19, 1}, {28, 2}, {35, 1},
                   {39, -2}, {43, -1}, {44, 2}, {47, -1}}}},
      {"g1", {49, {{1, 1}, {5, -2}, {6, 1}, {9, 2}, {17, -1}, {25, -1},
                   {26, -3}, {30, -4}, {38, 3}, {42, 5}}}},
      {"g2", {49, {{4, 1}, {7, 1}, {16, -1}, {20, -2}, {23, -3}, {24, 1},
                   {28, -1}, {36, 2}, {39, 1}, {47, 2}}}},
      {"h1", {29, {{2, 1}, {10, 2}, {13, -3}, {14, -1}, {18, -2}, {21, -1},
                   {22, 2}, {29, 1}}}},
      {"h2", {49, {{3, 1}, {8, -1}, {12, 1}, {19, -1}, {27, -1}, {32, -1},
                   {40, -2}, {48, 1}}}},
      {"k1", {49, {{2, 1}, {10, -1}, {14, -1}, {18, 1}, {21, 2}, {22, -1},
                   {29, -2}, {33, -2}, {34, -1}, {37, 2}, {38, 1}, {41, -2}}}},
  };
  return table;
}

}  // namespace

QExpansion load_fixture(const std::string& name) {
  auto it = fixture_table().find(name);
  if (it == fixture_table().end())
    throw std::out_of_range("load_fixture: unknown form '" + name + "'");
  QExpansion f = QExpansion::zero(1, 152, it->second.N);
  for (auto [n, c] : it->second.terms) f.set(n, Dyadic(c));
  return f;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"f1", "f2", "f3", "g1",
                                                 "g2", "h1", "h2", "k1"};
  return names;
}

const std::vector<std::vector<std::string>>& fixture_blocks() {
  static const std::vector<std::vector<std::string>> blocks = {
      {"f1", "f2", "f3"}, {"g1", "g2"}, {"h1", "h2"}, {"k1"}};
  return blocks;
}

EigenReport eigen_proportionality(const QExpansion& f, long p,
                                  std::optional<Dyadic> lambda) {
  EigenReport R;
  QExpansion Tf = t_p2(f, p);
  R.checked = Tf.N;
  if (!lambda) {
    for (long n = 1; n <= Tf.N; ++n) {
      if (!f.coeff(n).is_zero()) {
        lambda = Tf.coeff(n) / f.coeff(n);
        R.derived = true;
        break;
      }
    }
  } else {
    R.derived = true;
  }
  if (!lambda) {
    // No usable index: consistent iff the image also vanishes there.
    R.consistent = true;
    for (long n = 1; n <= Tf.N; ++n)
      if (!Tf.coeff(n).is_zero()) {
        R.consistent = false;
        R.detail = "image nonzero at q^" + std::to_string(n) +
                   " while no eigenvalue is derivable";
      }
    return R;
  }
  R.lambda = *lambda;
  R.consistent = true;
  for (long n = 1; n <= Tf.N; ++n) {
    if (Tf.coeff(n) != *lambda * f.coeff(n)) {
      R.consistent = false;
      R.detail = "mismatch at q^" + std::to_string(n);
      break;
    }
  }
  return R;
}

}  // namespace hecke8
