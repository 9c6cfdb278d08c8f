#include "hecke8/cosets.hpp"

#include <algorithm>
#include <cstdlib>

namespace hecke8 {

namespace {

Dyadic pw2(long e) { return Dyadic::two_pow(e); }

struct ShapeInfo {
  const char* name;
  Flavor flavor;
  int min_n;       // INT_MIN-like sentinel for "any n"
  bool fixed_n;    // Y4, Y2, Y2WY6
  bool tabled;
};

constexpr int ANY_N = -1000000;

const ShapeInfo& shape_info(Shape s) {
  static const std::map<Shape, ShapeInfo> info = {
      {Shape::H, {"H", Flavor::SL2Tilde, ANY_N, false, true}},
      {Shape::W, {"W", Flavor::SL2Tilde, ANY_N, false, true}},
      {Shape::Y4, {"Y4", Flavor::SL2Tilde, 0, true, true}},
      {Shape::HY4, {"HY4", Flavor::SL2Tilde, 1, false, true}},
      {Shape::Y4H, {"Y4H", Flavor::SL2Tilde, 1, false, true}},
      {Shape::WY4, {"WY4", Flavor::SL2Tilde, 2, false, true}},
      {Shape::Y4W, {"Y4W", Flavor::SL2Tilde, 2, false, true}},
      {Shape::Y4WY4, {"Y4WY4", Flavor::SL2Tilde, 2, false, true}},
      {Shape::Y2, {"Y2", Flavor::SL2Tilde, 0, true, true}},
      {Shape::HY2, {"HY2", Flavor::SL2Tilde, 1, false, true}},
      {Shape::Y2H, {"Y2H", Flavor::SL2Tilde, 1, false, true}},
      {Shape::WY2, {"WY2", Flavor::SL2Tilde, 1, false, true}},
      {Shape::Y2W, {"Y2W", Flavor::SL2Tilde, 1, false, true}},
      {Shape::Y2WY2, {"Y2WY2", Flavor::SL2Tilde, 1, false, true}},
      {Shape::Y2WY4, {"Y2WY4", Flavor::SL2Tilde, 2, false, false}},
      {Shape::Y4WY2, {"Y4WY2", Flavor::SL2Tilde, 2, false, false}},
      {Shape::Y2WY6, {"Y2WY6", Flavor::SL2Tilde, 1, true, false}},
      {Shape::GD, {"D", Flavor::GL2, ANY_N, false, true}},
      {Shape::GW, {"W", Flavor::GL2, ANY_N, false, true}},
      {Shape::GDY2, {"DY2", Flavor::GL2, 0, false, true}},
      {Shape::GY2D, {"Y2D", Flavor::GL2, 1, false, true}},
      {Shape::GY2W, {"Y2W", Flavor::GL2, 2, false, true}},
      {Shape::GWY2, {"WY2", Flavor::GL2, 2, false, true}},
      {Shape::GY2WY2, {"Y2WY2", Flavor::GL2, 2, false, true}},
  };
  return info.at(s);
}

}  // namespace

Flavor label_flavor(Shape s) { return shape_info(s).flavor; }

bool label_valid(const CosetLabel& L) {
  const ShapeInfo& si = shape_info(L.shape);
  if (si.flavor == Flavor::SL2Tilde && L.z != 0) return false;
  if (si.fixed_n) return L.n == (L.shape == Shape::Y2WY6 ? 1 : 0) || L.n == si.min_n;
  if (si.min_n != ANY_N && L.n < si.min_n) return false;
  return true;
}

Mat2 label_rep(const CosetLabel& L) {
  if (!label_valid(L)) throw std::domain_error("label_rep: invalid label " + label_str(L));
  const long n = L.n;
  Mat2 core;
  switch (L.shape) {
    case Shape::H: core = mat_h(pw2(n)); break;
    case Shape::W: core = mat_w(pw2(-n)); break;
    case Shape::Y4: core = mat_y(4); break;
    case Shape::HY4: core = mat_h(pw2(n)) * mat_y(4); break;
    case Shape::Y4H: core = mat_y(4) * mat_h(pw2(-n)); break;
    case Shape::WY4: core = mat_w(pw2(-n)) * mat_y(4); break;
    case Shape::Y4W: core = mat_y(4) * mat_w(pw2(-n)); break;
    case Shape::Y4WY4: core = mat_y(4) * mat_w(pw2(-n)) * mat_y(4); break;
    case Shape::Y2: core = mat_y(2); break;
    case Shape::HY2: core = mat_h(pw2(n)) * mat_y(2); break;
    case Shape::Y2H: core = mat_y(2) * mat_h(pw2(-n)); break;
    case Shape::WY2: core = mat_w(pw2(-n)) * mat_y(2); break;
    case Shape::Y2W: core = mat_y(2) * mat_w(pw2(-n)); break;
    case Shape::Y2WY2: core = mat_y(2) * mat_w(pw2(-n)) * mat_y(2); break;
    case Shape::Y2WY4: core = mat_y(2) * mat_w(pw2(-n)) * mat_y(4); break;
    case Shape::Y4WY2: core = mat_y(4) * mat_w(pw2(-n)) * mat_y(2); break;
    case Shape::Y2WY6: core = mat_y(2) * mat_w(pw2(-1)) * mat_y(6); break;
    case Shape::GD: core = mat_d(pw2(n)); break;
    case Shape::GW: core = mat_w_gl2(pw2(n)); break;
    case Shape::GDY2: core = mat_d(pw2(n)) * mat_y(2); break;
    case Shape::GY2D: core = mat_y(2) * mat_d(pw2(-n)); break;
    case Shape::GY2W: core = mat_y(2) * mat_w_gl2(pw2(n)); break;
    case Shape::GWY2: core = mat_w_gl2(pw2(n)) * mat_y(2); break;
    case Shape::GY2WY2: core = mat_y(2) * mat_w_gl2(pw2(n)) * mat_y(2); break;
  }
  if (L.z != 0) core = mat_z(pw2(L.z)) * core;
  return core;
}

int label_spread(const CosetLabel& L) { return std::abs(L.n); }

namespace {

// Determinant valuation of the core representative (z factor excluded).
long core_vdet(Shape s, int n) {
  if (label_flavor(s) != Flavor::GL2) return 0;
  return s == Shape::GY2D ? -static_cast<long>(n) : n;
}

}  // namespace

long label_vdet(const CosetLabel& L) {
  if (label_flavor(L.shape) != Flavor::GL2) return 0;
  return core_vdet(L.shape, L.n) + 2L * L.z;
}

bool label_has_table(const CosetLabel& L) { return shape_info(L.shape).tabled; }

std::string label_str(const CosetLabel& L) {
  const ShapeInfo& si = shape_info(L.shape);
  std::string core;
  if ((L.shape == Shape::H || L.shape == Shape::GD) && L.n == 0) {
    core = "1";
  } else if (si.fixed_n) {
    core = si.name;
  } else {
    core = std::string(si.name) + "(" + std::to_string(L.n) + ")";
  }
  if (L.z == 0) return core;
  std::string zs = L.z == 1 ? "Z" : "Z^" + std::to_string(L.z);
  return core == "1" ? zs : zs + "*" + core;
}

CosetLabel label_parse(const std::string& s, Flavor flavor) {
  std::string body = s;
  int zpow = 0;
  if (body.rfind("Z", 0) == 0) {
    if (flavor != Flavor::GL2) throw std::domain_error("label_parse: Z power needs GL2");
    std::size_t star = body.find('*');
    std::size_t stop = star == std::string::npos ? body.size() : star;
    zpow = (body.size() > 1 && body[1] == '^')
               ? std::atoi(body.substr(2, stop - 2).c_str())
               : 1;
    body = star == std::string::npos ? "1" : body.substr(star + 1);
  }
  int n = 0;
  std::string name = body;
  auto paren = body.find('(');
  if (paren != std::string::npos) {
    name = body.substr(0, paren);
    n = std::atoi(body.substr(paren + 1, body.size() - paren - 2).c_str());
  }
  if (name == "1") name = flavor == Flavor::GL2 ? "D" : "H";
  static const std::vector<Shape> all = {
      Shape::H, Shape::W, Shape::Y4, Shape::HY4, Shape::Y4H, Shape::WY4,
      Shape::Y4W, Shape::Y4WY4, Shape::Y2, Shape::HY2, Shape::Y2H, Shape::WY2,
      Shape::Y2W, Shape::Y2WY2, Shape::Y2WY4, Shape::Y4WY2, Shape::Y2WY6,
      Shape::GD, Shape::GW, Shape::GDY2, Shape::GY2D, Shape::GY2W, Shape::GWY2,
      Shape::GY2WY2};
  for (Shape sh : all) {
    const ShapeInfo& si = shape_info(sh);
    if (si.flavor != flavor || name != si.name) continue;
    CosetLabel L{sh, sh == Shape::Y2WY6 ? 1 : n, zpow};
    if (!label_valid(L)) throw std::domain_error("label_parse: invalid label " + s);
    return L;
  }
  throw std::domain_error("label_parse: unknown label " + s);
}

bool in_K(const Mat2& g, Flavor flavor) {
  return flavor == Flavor::SL2Tilde ? in_K0_8(g) : in_K0_4_gl2(g);
}

namespace {

// Membership after cancelling the center: g in z(2^m) K_0(4) for the unique
// viable m.
bool in_K_mod_center(const Mat2& g, Flavor flavor) {
  if (flavor == Flavor::SL2Tilde) return in_K0_8(g);
  Dyadic dt = g.det();
  if (dt.is_zero()) return false;
  long vd = *dt.val2();
  if (vd % 2 != 0) return false;
  if (vd == 0) return in_K0_4_gl2(g);
  return in_K0_4_gl2(mat_z(pw2(-vd / 2)) * g);
}

}  // namespace

bool same_right_coset(const Mat2& g, const Mat2& h, Flavor flavor) {
  return in_K_mod_center(g.inverse() * h, flavor);
}

bool same_coset_left_quot(const Mat2& g, const Mat2& h, Flavor flavor) {
  return in_K_mod_center(g * h.inverse(), flavor);
}

std::optional<Mat2> witness_membership(const Mat2& A, const Mat2& B, Flavor flavor,
                                       int mu) {
  Mat2 Binv = B.inverse();
  auto good = [&](const Mat2& k) { return in_K_mod_center(A * k * Binv, flavor); };

  // k = A^{-1} B when that already lies in K (tails that are themselves in K).
  Mat2 t = A.inverse() * B;
  if (in_K(t, flavor) && good(t)) return t;
  // k = x(b); the product is affine in b, scan residues mod 2^mu.
  {
    Mat2 M0 = A * Binv;
    Mat2 M1 = Mat2{Dyadic(0), A.a, Dyadic(0), A.c} * Binv;
    Mat2 M = M0;
    for (long b = 0; b < (1L << mu); ++b) {
      if (in_K_mod_center(M, flavor)) return mat_x(Dyadic(b));
      M.a += M1.a; M.b += M1.b; M.c += M1.c; M.d += M1.d;
    }
  }
  // k = y(8b) (y(4b) at level 4).
  {
    long step = flavor == Flavor::SL2Tilde ? 8 : 4;
    Mat2 M0 = A * Binv;
    Mat2 M1s = Mat2{A.b, Dyadic(0), A.d, Dyadic(0)} * Binv;
    Mat2 M1 = Mat2{Dyadic(step) * M1s.a, Dyadic(step) * M1s.b,
                   Dyadic(step) * M1s.c, Dyadic(step) * M1s.d};
    Mat2 M = M0;
    long tmax = (1L << std::max(0, mu - 3));
    for (long b = 0; b < tmax; ++b) {
      if (in_K_mod_center(M, flavor)) return mat_y(Dyadic(step * b));
      M.a += M1.a; M.b += M1.b; M.c += M1.c; M.d += M1.d;
    }
  }
  // k = x(b) h(u).
  for (long uu = 1; uu <= 63; uu += 2) {
    for (long su : {+1, -1}) {
      Dyadic u(su * uu);
      Mat2 hu = mat_h(u);
      Mat2 M0 = A * hu * Binv;
      Mat2 M1 = Mat2{Dyadic(0), A.a, Dyadic(0), A.c} * hu * Binv;
      Mat2 M = M0;
      for (long b = 0; b < (1L << std::min(mu, 8)); ++b) {
        if (in_K_mod_center(M, flavor)) return mat_x(Dyadic(b)) * hu;
        M.a += M1.a; M.b += M1.b; M.c += M1.c; M.d += M1.d;
      }
    }
  }
  // Last resort: k = x(b) h(u) y(8t) over a coarse grid.
  long step = flavor == Flavor::SL2Tilde ? 8 : 4;
  for (long uu = 1; uu <= 15; uu += 2) {
    for (long su : {+1, -1}) {
      Mat2 hu = mat_h(Dyadic(su * uu));
      for (long tt = 0; tt < 32; ++tt) {
        Mat2 right = hu * mat_y(Dyadic(step * tt)) * Binv;
        Mat2 M0 = A * right;
        Mat2 M1 = Mat2{Dyadic(0), A.a, Dyadic(0), A.c} * right;
        Mat2 M = M0;
        for (long b = 0; b < 128; ++b) {
          if (in_K_mod_center(M, flavor))
            return mat_x(Dyadic(b)) * hu * mat_y(Dyadic(step * tt));
          M.a += M1.a; M.b += M1.b; M.c += M1.c; M.d += M1.d;
        }
      }
    }
  }
  return std::nullopt;
}

long CosetTables::count_formula(const CosetLabel& L) {
  const long n = L.n;
  switch (L.shape) {
    case Shape::H: return 1L << (2 * std::abs(n));
    case Shape::W:
      if (n >= 2) return 1L << (2 * n - 3);
      if (n == 1) return 2;
      return 1L << (2 * (-n) + 3);
    case Shape::Y4: return 1;
    case Shape::HY4:
    case Shape::Y4H: return 1L << (2 * n);
    case Shape::WY4:
    case Shape::Y4W:
    case Shape::Y4WY4: return 1L << (2 * n - 3);
    case Shape::Y2: return 2;
    case Shape::HY2:
    case Shape::Y2H: return 1L << (2 * n + 1);
    case Shape::WY2:
    case Shape::Y2W: return n == 1 ? 2 : 1L << (2 * n - 2);
    case Shape::Y2WY2: return n == 1 ? 1 : 2L << (2 * n - 2);
    case Shape::GD: return 1L << std::abs(n);
    case Shape::GW: return n >= 2 ? 1L << (n - 2) : 1L << (2 - n);
    case Shape::GDY2:
    case Shape::GY2D: return 1L << n;
    case Shape::GY2W:
    case Shape::GWY2:
    case Shape::GY2WY2: return 1L << (n - 2);
    default: throw std::out_of_range("count_formula: no table for " + label_str(L));
  }
}

CosetDecomposition CosetTables::build(const CosetLabel& L) {
  if (!label_has_table(L))
    throw std::out_of_range("decomposition_table: no table for " + label_str(L));
  CosetDecomposition D;
  D.label = L;
  D.rep = label_rep(L);
  const long n = L.n;
  Flavor flavor = label_flavor(L.shape);

  std::vector<Mat2> right_tails;
  std::vector<Mat2> left_heads;
  auto xs = [](long s) { return mat_x(Dyadic(s)); };
  auto ys = [](long s) { return mat_y(Dyadic(s)); };
  auto fill = [](long cnt, auto f) {
    std::vector<Mat2> v;
    v.reserve(cnt);
    for (long s = 0; s < cnt; ++s) v.push_back(f(s));
    return v;
  };

  switch (L.shape) {
    case Shape::H:
      if (n >= 0) {
        right_tails = fill(1L << (2 * n), [&](long s) { return ys(8 * s); });
        left_heads = fill(1L << (2 * n), [&](long s) { return xs(s); });
      } else {
        right_tails = fill(1L << (-2 * n), [&](long s) { return xs(s); });
        left_heads = fill(1L << (-2 * n), [&](long s) { return ys(8 * s); });
      }
      break;
    case Shape::W:
      if (n >= 2) {
        right_tails = fill(1L << (2 * n - 3), [&](long s) { return ys(8 * s); });
        left_heads = right_tails;
      } else if (n == 1) {
        right_tails = fill(2, [&](long s) { return xs(s); });
        left_heads = right_tails;
      } else {
        right_tails = fill(1L << (-2 * n + 3), [&](long s) { return xs(s); });
        left_heads = right_tails;
      }
      break;
    case Shape::Y4:
      right_tails = {mat_identity()};
      left_heads = right_tails;
      break;
    case Shape::HY4:
      right_tails = fill(1L << (2 * n), [&](long s) { return ys(8 * s); });
      left_heads = fill(1L << (2 * n), [&](long s) { return xs(s); });
      break;
    case Shape::Y4H:
      right_tails = fill(1L << (2 * n), [&](long s) { return xs(s); });
      left_heads = fill(1L << (2 * n), [&](long s) { return ys(8 * s); });
      break;
    case Shape::WY4:
    case Shape::Y4W:
    case Shape::Y4WY4:
      right_tails = fill(1L << (2 * n - 3), [&](long s) { return ys(8 * s); });
      left_heads = right_tails;
      break;
    case Shape::Y2:
      right_tails = fill(2, [&](long s) { return xs(s); });
      left_heads = right_tails;
      break;
    case Shape::HY2: {
      long cnt = 1L << (2 * n);
      for (long s = 0; s < cnt; ++s) right_tails.push_back(ys(4 * s));
      for (long s = 0; s < cnt; ++s)
        right_tails.push_back(mat_y(Dyadic(4 * s) + pw2(2 * n + 2)));
      left_heads = fill(2 * cnt, [&](long s) { return xs(s); });
      break;
    }
    case Shape::Y2H: {
      long cnt = 1L << (2 * n);
      right_tails = fill(2 * cnt, [&](long s) { return xs(s); });
      for (long s = 0; s < cnt; ++s) left_heads.push_back(ys(4 * s));
      for (long s = 0; s < cnt; ++s)
        left_heads.push_back(mat_y(Dyadic(4 * s) + pw2(2 * n + 2)));
      break;
    }
    case Shape::WY2:
      if (n == 1) {
        right_tails = fill(2, [&](long s) { return xs(s); });
        left_heads = right_tails;
      } else {
        right_tails = fill(1L << (2 * n - 2), [&](long s) { return ys(4 * s); });
        left_heads = fill(1L << (2 * n - 2), [&](long s) { return ys(8 * s); });
      }
      break;
    case Shape::Y2W:
      if (n == 1) {
        right_tails = fill(2, [&](long s) { return xs(s); });
        left_heads = right_tails;
      } else {
        right_tails = fill(1L << (2 * n - 2), [&](long s) { return ys(8 * s); });
        left_heads = fill(1L << (2 * n - 2), [&](long s) { return ys(4 * s); });
      }
      break;
    case Shape::Y2WY2:
      if (n == 1) {
        right_tails = {mat_identity()};
        left_heads = right_tails;
      } else {
        long cnt = 1L << (2 * n - 2);
        Mat2 conj_r = D.rep.inverse() * mat_y(4) * D.rep;   // second right family
        Mat2 conj_l = D.rep * mat_y(4) * D.rep.inverse();   // second left family
        for (long s = 0; s < cnt; ++s) right_tails.push_back(ys(4 * s));
        for (long s = 0; s < cnt; ++s) right_tails.push_back(conj_r * ys(4 * s));
        for (long s = 0; s < cnt; ++s) left_heads.push_back(ys(4 * s));
        for (long s = 0; s < cnt; ++s) left_heads.push_back(ys(4 * s) * conj_l);
      }
      break;
    case Shape::GD:
      if (n >= 0) {
        right_tails = fill(1L << n, [&](long s) { return ys(4 * s); });
        left_heads = fill(1L << n, [&](long s) { return xs(s); });
      } else {
        right_tails = fill(1L << (-n), [&](long s) { return xs(s); });
        left_heads = fill(1L << (-n), [&](long s) { return ys(4 * s); });
      }
      break;
    case Shape::GW:
      if (n >= 2) {
        right_tails = fill(1L << (n - 2), [&](long s) { return ys(4 * s); });
        left_heads = right_tails;
      } else {
        right_tails = fill(1L << (2 - n), [&](long s) { return xs(s); });
        left_heads = right_tails;
      }
      break;
    case Shape::GDY2:
      right_tails = fill(1L << n, [&](long s) { return ys(4 * s); });
      left_heads = fill(1L << n, [&](long s) { return xs(s); });
      break;
    case Shape::GY2D:
      right_tails = fill(1L << n, [&](long s) { return xs(s); });
      left_heads = fill(1L << n, [&](long s) { return ys(4 * s); });
      break;
    case Shape::GY2W:
    case Shape::GWY2:
    case Shape::GY2WY2:
      right_tails = fill(1L << (n - 2), [&](long s) { return ys(4 * s); });
      left_heads = right_tails;
      break;
    default:
      throw std::out_of_range("decomposition_table: no table for " + label_str(L));
  }

  D.right_cosets.reserve(right_tails.size());
  for (const Mat2& tail : right_tails) {
    SingleCoset sc;
    sc.tail = tail;
    sc.g = D.rep * tail;
    sc.g_inv = sc.g.inverse();
    if (in_K(tail, flavor)) {
      sc.k = tail;
      sc.kappa = mat_identity();
      sc.witnessed = true;
    } else {
      int mu = static_cast<int>(std::clamp(2 * std::abs(n) + 3, 3L, 15L));
      auto k = witness_membership(D.rep, sc.g, flavor, mu);
      if (k) {
        // rep * k * g^{-1} lies in K, so g = kappa * rep * k with
        // kappa = (rep k g^{-1})^{-1}.
        sc.k = *k;
        sc.kappa = (D.rep * sc.k * sc.g_inv).inverse();
        sc.witnessed = true;
      }
    }
    if (sc.witnessed && flavor == Flavor::SL2Tilde) {
      sc.eta = meta_mul(meta_mul(lift(sc.kappa), lift(D.rep)), lift(sc.k)).eps;
    }
    D.right_cosets.push_back(std::move(sc));
  }
  D.left_cosets.reserve(left_heads.size());
  for (const Mat2& head : left_heads) D.left_cosets.push_back(head * D.rep);
  return D;
}

const CosetDecomposition& CosetTables::get(const CosetLabel& L) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(L);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(L, build(L)).first->second;
}

DecompositionReport CosetTables::verify(const CosetLabel& L) {
  DecompositionReport R;
  R.label = L;
  R.expected_count = static_cast<std::size_t>(count_formula(L));
  const CosetDecomposition& D = get(L);
  Flavor flavor = label_flavor(L.shape);
  R.count = D.right_cosets.size();

  R.right_distinct = true;
  for (std::size_t i = 0; i < D.right_cosets.size() && R.right_distinct; ++i)
    for (std::size_t j = i + 1; j < D.right_cosets.size(); ++j)
      if (in_K_mod_center(D.right_cosets[i].g * D.right_cosets[j].g_inv, flavor)) {
        R.right_distinct = false;
        R.detail = "right cosets " + std::to_string(i) + "," + std::to_string(j) +
                   " coincide";
        break;
      }
  R.left_distinct = true;
  for (std::size_t i = 0; i < D.left_cosets.size() && R.left_distinct; ++i)
    for (std::size_t j = i + 1; j < D.left_cosets.size(); ++j)
      if (in_K_mod_center(D.left_cosets[i].inverse() * D.left_cosets[j], flavor)) {
        R.left_distinct = false;
        R.detail = "left cosets " + std::to_string(i) + "," + std::to_string(j) +
                   " coincide";
        break;
      }

  for (const SingleCoset& sc : D.right_cosets)
    if (sc.witnessed) ++R.witnessed;
  bool left_witnessed = true;
  for (const Mat2& g : D.left_cosets) {
    int mu = static_cast<int>(std::clamp(2L * std::abs(L.n) + 3, 3L, 15L));
    if (!witness_membership(D.rep, g, flavor, mu)) {
      left_witnessed = false;
      break;
    }
  }

  bool counts_ok = R.count == R.expected_count &&
                   D.left_cosets.size() == R.expected_count;
  if (!R.right_distinct || !R.left_distinct || !counts_ok) {
    R.status = CheckStatus::Failed;
    if (!counts_ok) R.detail = "coset count mismatch";
  } else if (R.witnessed == R.count && left_witnessed) {
    R.status = CheckStatus::Certified;
  } else {
    R.status = CheckStatus::Inconclusive;
    R.detail = "membership witness not found within search bounds";
  }
  return R;
}

std::vector<CosetLabel> CosetTables::labels_with_spread(
    Flavor flavor, int max_spread, const std::vector<Shape>& shapes,
    std::optional<long> vdet) {
  std::vector<CosetLabel> out;
  for (Shape sh : shapes) {
    const ShapeInfo& si = shape_info(sh);
    if (si.flavor != flavor) continue;
    std::vector<int> ns;
    if (si.fixed_n) {
      ns.push_back(sh == Shape::Y2WY6 ? 1 : 0);
    } else if (si.min_n == ANY_N) {
      for (int n = -max_spread; n <= max_spread; ++n) ns.push_back(n);
    } else {
      for (int n = si.min_n; n <= max_spread; ++n) ns.push_back(n);
    }
    for (int n : ns) {
      if (std::abs(n) > max_spread) continue;
      if (flavor == Flavor::GL2) {
        if (!vdet) throw std::domain_error("labels_with_spread: GL2 needs vdet");
        long cv = core_vdet(sh, n);
        if ((*vdet - cv) % 2 != 0) continue;
        out.push_back(CosetLabel{sh, n, static_cast<int>((*vdet - cv) / 2)});
      } else {
        out.push_back(CosetLabel{sh, n, 0});
      }
    }
  }
  return out;
}

CosetLabel CosetTables::classify(const Mat2& g, Flavor flavor, int window) {
  std::vector<CosetLabel> candidates;
  if (flavor == Flavor::SL2Tilde) {
    if (!g.is_sl2()) throw std::domain_error("classify: determinant is not 1");
    int m = static_cast<int>(-v_min(g));
    if (m > window)
      throw std::out_of_range("classify: element outside window |n| <= " +
                              std::to_string(window));
    if (m == 0) {
      for (Shape sh : {Shape::H, Shape::W, Shape::Y4, Shape::Y2})
        candidates.push_back(CosetLabel{sh, 0, 0});
    } else {
      candidates.push_back(CosetLabel{Shape::H, m, 0});
      candidates.push_back(CosetLabel{Shape::H, -m, 0});
      candidates.push_back(CosetLabel{Shape::W, m, 0});
      candidates.push_back(CosetLabel{Shape::W, -m, 0});
      for (Shape sh : {Shape::HY4, Shape::Y4H, Shape::HY2, Shape::Y2H, Shape::WY2,
                       Shape::Y2W, Shape::Y2WY2, Shape::WY4, Shape::Y4W,
                       Shape::Y4WY4, Shape::Y2WY4, Shape::Y4WY2, Shape::Y2WY6}) {
        CosetLabel L{sh, m, 0};
        if (sh == Shape::Y2WY6 && m != 1) continue;
        if (label_valid(L)) candidates.push_back(L);
      }
    }
  } else {
    long vd = v_det(g);
    int spread = static_cast<int>(vd - 2 * v_min(g));
    if (spread > window)
      throw std::out_of_range("classify: element outside window |n| <= " +
                              std::to_string(window));
    auto push = [&](Shape sh, int n) {
      long cv = core_vdet(sh, n);
      if ((vd - cv) % 2 != 0) return;
      CosetLabel L{sh, n, static_cast<int>((vd - cv) / 2)};
      if (label_valid(L)) candidates.push_back(L);
    };
    push(Shape::GD, spread);
    if (spread > 0) push(Shape::GD, -spread);
    push(Shape::GW, spread);
    if (spread > 0) push(Shape::GW, -spread);
    push(Shape::GDY2, spread);
    push(Shape::GY2D, spread);
    push(Shape::GY2W, spread);
    push(Shape::GWY2, spread);
    push(Shape::GY2WY2, spread);
  }

  for (const CosetLabel& L : candidates) {
    if (!label_has_table(L)) continue;
    const CosetDecomposition& D = get(L);
    for (const SingleCoset& sc : D.right_cosets)
      if (in_K_mod_center(g * sc.g_inv, flavor)) return L;
  }
  // Untabled shapes: certify membership through a witness instead.
  for (const CosetLabel& L : candidates) {
    if (label_has_table(L)) continue;
    if (witness_membership(label_rep(L), g, flavor)) return L;
  }
  throw std::runtime_error("classify: no label matched (inconclusive)");
}

}  // namespace hecke8
