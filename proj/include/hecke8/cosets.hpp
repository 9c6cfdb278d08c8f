#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hecke8/characters.hpp"
#include "hecke8/metaplectic.hpp"

namespace hecke8 {

enum class Flavor { SL2Tilde, GL2 };

// Symbolic double-coset labels.
//
// SL2Tilde flavor (K_0(8) \ SL_2(Q_2) / K_0(8)):
//   H(n)      h(2^n)                n in Z
//   W(n)      w(2^-n)               n in Z
//   Y4        y(4)
//   HY4(n)    h(2^n) y(4)           n >= 1
//   Y4H(n)    y(4) h(2^-n)          n >= 1
//   WY4(n)    w(2^-n) y(4)          n >= 2
//   Y4W(n)    y(4) w(2^-n)          n >= 2
//   Y4WY4(n)  y(4) w(2^-n) y(4)     n >= 2
//   Y2        y(2)
//   HY2(n)    h(2^n) y(2)           n >= 1
//   Y2H(n)    y(2) h(2^-n)          n >= 1
//   WY2(n)    w(2^-n) y(2)          n >= 1
//   Y2W(n)    y(2) w(2^-n)          n >= 1
//   Y2WY2(n)  y(2) w(2^-n) y(2)     n >= 1
//   Y2WY4(n)  y(2) w(2^-n) y(4)     n >= 2   (no decomposition table)
//   Y4WY2(n)  y(4) w(2^-n) y(2)     n >= 2   (no decomposition table)
//   Y2WY6     y(2) w(2^-1) y(6)              (no decomposition table)
//
// GL2 flavor (K_0(4) \ GL_2(Q_2) / K_0(4)), z = central 2-power z(2^z):
//   GD(n)     d(2^n)                n in Z
//   GW(n)     w(2^n) = [[0,-1],[2^n,0]]   n in Z
//   GDY2(n)   d(2^n) y(2)           n >= 0
//   GY2D(n)   y(2) d(2^-n)          n >= 1
//   GY2W(n)   y(2) w(2^n)           n >= 2
//   GWY2(n)   w(2^n) y(2)           n >= 2
//   GY2WY2(n) y(2) w(2^n) y(2)      n >= 2
enum class Shape {
  H, W, Y4, HY4, Y4H, WY4, Y4W, Y4WY4,
  Y2, HY2, Y2H, WY2, Y2W, Y2WY2, Y2WY4, Y4WY2, Y2WY6,
  GD, GW, GDY2, GY2D, GY2W, GWY2, GY2WY2
};

struct CosetLabel {
  Shape shape = Shape::H;
  int n = 0;
  int z = 0;  // central power, GL2 flavor only

  friend bool operator==(const CosetLabel& a, const CosetLabel& b) {
    return a.shape == b.shape && a.n == b.n && a.z == b.z;
  }
  friend bool operator<(const CosetLabel& a, const CosetLabel& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    if (a.n != b.n) return a.n < b.n;
    return a.z < b.z;
  }
};

Flavor label_flavor(Shape s);
bool label_valid(const CosetLabel& L);
Mat2 label_rep(const CosetLabel& L);
// Cartan width |n| of the label: -v_min of the representative (SL2Tilde) or
// the elementary-divisor spread (GL2).  Bounds support growth of products.
int label_spread(const CosetLabel& L);
long label_vdet(const CosetLabel& L);  // 0 for SL2Tilde; n + 2z for GL2
bool label_has_table(const CosetLabel& L);
std::string label_str(const CosetLabel& L);
CosetLabel label_parse(const std::string& s, Flavor flavor);

// One single coset K * g inside a double coset K rep K, with a membership
// witness g = kappa * rep * k, kappa and k in K.  For the metaplectic flavor
// eta is the sign with (kappa,1)(rep,1)(k,1) = (g, eta).
struct SingleCoset {
  Mat2 g;
  Mat2 g_inv;
  Mat2 tail;  // rep^{-1} g
  Mat2 k, kappa;
  int eta = +1;
  bool witnessed = false;
};

struct CosetDecomposition {
  CosetLabel label;
  Mat2 rep;
  std::vector<SingleCoset> right_cosets;  // K rep K = disjoint union of K * g_i
  std::vector<Mat2> left_cosets;          //                             g'_j * K
};

// K-membership for the label's flavor.
bool in_K(const Mat2& g, Flavor flavor);

// Exact coset equality g K = h K; GL2 flavor works modulo the center.
bool same_right_coset(const Mat2& g, const Mat2& h, Flavor flavor);
// Exact coset equality K g = K h; GL2 flavor modulo the center.
bool same_coset_left_quot(const Mat2& g, const Mat2& h, Flavor flavor);

// Bounded search for k in K with A k B^{-1} in K (GL2: modulo the center),
// which certifies K A K = K B K.  Families searched: k = tail itself when
// integral, x(b), y(8b), h(u), x(b)h(u), x(b)h(u)y(8t) with b, t running over
// residues mod 2^mu and u over odd |u| <= 63.  Absence of a witness within
// the bounds is NOT a refutation.
std::optional<Mat2> witness_membership(const Mat2& A, const Mat2& B, Flavor flavor,
                                       int mu = 11);

enum class CheckStatus { Certified, Inconclusive, Failed };

struct DecompositionReport {
  CosetLabel label;
  CheckStatus status = CheckStatus::Inconclusive;
  std::size_t count = 0;
  std::size_t expected_count = 0;
  bool right_distinct = false;
  bool left_distinct = false;
  std::size_t witnessed = 0;  // right cosets with membership witness
  std::string detail;
};

class CosetTables {
public:
  // Builds (and caches) the single-coset decomposition of a tabled double
  // coset, witnesses included for SL2Tilde labels.  Throws std::out_of_range
  // for labels without a table.
  const CosetDecomposition& get(const CosetLabel& L);

  DecompositionReport verify(const CosetLabel& L);

  // Unique tabled label whose double coset contains g, scanning labels with
  // matching invariants; |n| up to `window`.  Falls back to a witness search
  // against the untabled SL2Tilde shapes.  Throws std::out_of_range when the
  // element's invariants exceed the window, std::runtime_error when no label
  // matches conclusively.
  CosetLabel classify(const Mat2& g, Flavor flavor, int window);

  // All labels of the given flavor with spread <= max_spread (and, for GL2,
  // prescribed determinant valuation), restricted to `supported` shapes.
  std::vector<CosetLabel> labels_with_spread(Flavor flavor, int max_spread,
                                             const std::vector<Shape>& shapes,
                                             std::optional<long> vdet = std::nullopt);

  static long count_formula(const CosetLabel& L);

private:
  CosetDecomposition build(const CosetLabel& L);
  std::map<CosetLabel, CosetDecomposition> cache_;
  std::mutex mu_;
};

}  // namespace hecke8
