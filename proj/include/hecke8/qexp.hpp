#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke8/cyclo8.hpp"

namespace hecke8 {

// Truncated q-expansion of a cusp form of weight k + 1/2: exact coefficients
// a_1..a_N, a_0 = 0.  Operations track the truncation order pessimistically;
// comparisons only ever run over provably valid ranges.
struct QExpansion {
  int k = 1;
  long level = 1;
  long N = 0;
  std::vector<Dyadic> a;  // size N+1, index 0 unused

  static QExpansion zero(int k, long level, long N);
  const Dyadic& coeff(long n) const;  // 1 <= n <= N
  void set(long n, const Dyadic& v);
  bool is_zero() const;
  std::string str(long max_terms = 12) const;
};

// Congruence class of n used by the plus/minus conditions: residue of
// (-1)^k n mod 4.
int sign_class(int k, long n);

QExpansion qadd(const QExpansion& f, const QExpansion& g);
QExpansion qsub(const QExpansion& f, const QExpansion& g);
QExpansion qscale(const Dyadic& c, const QExpansion& f);
// Equality on the common valid range.
bool qequal(const QExpansion& f, const QExpansion& g);

// b_n = a_{4n}; output order floor(N/4).
QExpansion u4(const QExpansion& f);

// Plus space condition: a_n = 0 whenever (-1)^k n = 2,3 mod 4.
bool plus_member(const QExpansion& f);
// Complementary condition: a_n = 0 whenever (-1)^k n = 0,1 mod 4.
bool minus_member(const QExpansion& f);

// Keep a_n with (-1)^k n = 0,1 mod 4, zero out the rest.
QExpansion project_plus(const QExpansion& f);
QExpansion project_complement(const QExpansion& f);

// sqrt(2) (2/2k+1) (sum^{(1)} - sum^{(2)}): the coefficient-level projector
// combination, with the exact scalar carried separately.
struct ScaledQExpansion {
  Cyclo8 scalar;
  QExpansion series;
};
ScaledQExpansion p8_coeff(const QExpansion& f);

// Legendre symbol (a/p) for odd prime p.
int legendre(const Int& a, long p);

// Hecke operator T_{p^2} at coefficient level, trivial character:
// b_n = a_{p^2 n} + ((-1)^k n / p) p^{k-1} a_n + p^{2k-1} a_{n/p^2}.
// Output order floor(N/p^2).  Throws for p even or composite.
QExpansion t_p2(const QExpansion& f, long p);

// The eight worked-example expansions at weight 3/2, level 152.
QExpansion load_fixture(const std::string& name);
const std::vector<std::string>& fixture_names();
// Partition into blocks of forms sharing all T_{p^2} eigenvalues.
const std::vector<std::vector<std::string>>& fixture_blocks();

// Run-time eigenvalue oracle: the proportionality constant is derived from
// the first index where f has a nonzero coefficient, never hard-coded.
struct EigenReport {
  bool consistent = false;   // b_n = lambda a_n over the checked range
  bool derived = false;      // false when every valid index has a_n = 0
  Dyadic lambda;
  long checked = 0;          // number of indices compared
  std::string detail;
};
EigenReport eigen_proportionality(const QExpansion& f, long p,
                                  std::optional<Dyadic> lambda = std::nullopt);

}  // namespace hecke8
