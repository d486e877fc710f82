#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "liealg.hpp"
#include "tensor.hpp"

namespace liegeom {

enum class Family { SU3, U2, SO3, T2, U1_I, U1_Y, DIAG_GLP };

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::SU3, Family::U2, Family::SO3, Family::T2, Family::U1_I, Family::U1_Y, Family::DIAG_GLP};

/// One occurrence of a parameter in the dual metric, 0-based, with sign.
struct PatternEntry {
  int i, j;
  double sign;
};

struct FamilyInfo {
  const char* name;
  std::vector<std::string> params;
  // pattern[k] lists where params[k] appears in h_inv (upper triangle)
  std::vector<std::vector<PatternEntry>> pattern;
  int k_dim;  // dimension of the declared right isometry group
};

namespace detail {

inline std::vector<PatternEntry> diag(std::initializer_list<int> ones_based) {
  std::vector<PatternEntry> r;
  for (int i : ones_based) r.push_back({i - 1, i - 1, 1.0});
  return r;
}

inline FamilyInfo make_info(Family f) {
  using V = std::vector<PatternEntry>;
  switch (f) {
    case Family::SU3:
      return {"SU3", {"alpha"}, {diag({1, 2, 3, 4, 5, 6, 7, 8})}, 8};
    case Family::U2:
      return {"U2", {"alpha", "beta", "gamma"},
              {diag({1, 2, 3}), diag({4, 5, 6, 7}), diag({8})}, 4};
    case Family::SO3:
      return {"SO3", {"alpha", "beta"}, {diag({1, 3, 4, 6, 8}), diag({2, 5, 7})}, 3};
    case Family::T2:
      return {"T2",
              {"alpha", "beta", "gamma", "delta", "epsilon", "zeta"},
              {diag({1, 2}), diag({3}), diag({4, 5}), diag({6, 7}), diag({8}), V{{2, 7, 1.0}}},
              2};
    case Family::U1_I:
      return {"U1_I",
              {"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"},
              {diag({1, 2}), diag({3}), diag({4, 5}), diag({6, 7}), diag({8}), V{{2, 7, 1.0}},
               V{{3, 6, 1.0}, {4, 5, 1.0}}, V{{3, 5, 1.0}, {4, 6, -1.0}}},
              1};
    case Family::U1_Y:
      return {"U1_Y",
              {"k11", "k12", "k13", "k22", "k23", "k33", "epsilon1", "epsilon2", "epsilon3",
               "epsilon8", "alpha", "beta", "gamma", "delta"},
              {diag({1}), V{{0, 1, 1.0}}, V{{0, 2, 1.0}}, diag({2}), V{{1, 2, 1.0}}, diag({3}),
               V{{0, 7, 1.0}}, V{{1, 7, 1.0}}, V{{2, 7, 1.0}}, diag({8}), diag({4, 5}),
               diag({6, 7}), V{{3, 5, 1.0}, {4, 6, 1.0}}, V{{3, 6, 1.0}, {4, 5, -1.0}}},
              1};
    case Family::DIAG_GLP:
      return {"DIAG_GLP",
              {"alpha", "beta", "gamma"},
              {diag({1, 4, 6}), diag({2, 5, 7}), diag({3, 8})},
              0};
  }
  throw Error(ErrorCode::BAD_INPUT, "unknown family");
}

}  // namespace detail

inline const FamilyInfo& family_info(Family f) {
  static const std::array<FamilyInfo, 7> table = [] {
    std::array<FamilyInfo, 7> t;
    for (std::size_t i = 0; i < kAllFamilies.size(); ++i) t[i] = detail::make_info(kAllFamilies[i]);
    return t;
  }();
  return table[static_cast<std::size_t>(f)];
}

inline const char* to_string(Family f) { return family_info(f).name; }

inline Family parse_family(const std::string& s) {
  for (Family f : kAllFamilies)
    if (s == family_info(f).name) return f;
  throw Error(ErrorCode::BAD_INPUT, "unknown family '" + s + "'");
}

inline int param_index(Family f, const std::string& name) {
  const auto& p = family_info(f).params;
  auto it = std::find(p.begin(), p.end(), name);
  if (it == p.end())
    throw Error(ErrorCode::BAD_INPUT, "family " + std::string(to_string(f)) + " has no parameter '" + name + "'");
  return static_cast<int>(it - p.begin());
}

/// A left-invariant metric given by its dual matrix h^{ab} in the X basis.
class InvariantMetric {
 public:
  static InvariantMetric from_dual(const Mat8& h_inv) {
    InvariantMetric m;
    m.h_inv_ = 0.5 * (h_inv + h_inv.transpose());
    m.finish();
    return m;
  }

  const Mat8& h_inv() const { return h_inv_; }
  const Mat8& h() const { return h_; }
  std::optional<Family> family() const { return family_; }
  const std::vector<double>& params() const { return params_; }

 private:
  friend InvariantMetric build_metric(Family, const std::vector<double>&);

  void finish() {
    double det = h_inv_.determinant();
    if (!(std::abs(det) > 1e-12)) throw Error(ErrorCode::DEGENERATE, "|det h_inv| <= 1e-12");
    h_ = h_inv_.inverse();
    h_ = 0.5 * (h_ + h_.transpose());
  }

  Mat8 h_inv_ = Mat8::Identity();
  Mat8 h_ = Mat8::Identity();
  std::optional<Family> family_;
  std::vector<double> params_;
};

inline Mat8 family_dual(Family f, const std::vector<double>& params) {
  const FamilyInfo& info = family_info(f);
  if (params.size() != info.params.size())
    throw Error(ErrorCode::BAD_ARITY, std::string(info.name) + " takes " + std::to_string(info.params.size()) +
                                          " parameters, got " + std::to_string(params.size()));
  Mat8 h = Mat8::Zero();
  for (std::size_t k = 0; k < params.size(); ++k)
    for (const PatternEntry& e : info.pattern[k]) {
      h(e.i, e.j) = e.sign * params[k];
      h(e.j, e.i) = e.sign * params[k];
    }
  return h;
}

inline InvariantMetric build_metric(Family f, const std::vector<double>& params) {
  InvariantMetric m;
  m.h_inv_ = family_dual(f, params);
  m.finish();
  m.family_ = f;
  m.params_ = params;
  return m;
}

/// Reads the family parameters back off a patterned matrix (first occurrence).
inline std::vector<double> family_params_of(Family f, const Mat8& h_inv) {
  const FamilyInfo& info = family_info(f);
  std::vector<double> p(info.params.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const PatternEntry& e = info.pattern[k].front();
    p[k] = e.sign * h_inv(e.i, e.j);
  }
  return p;
}

/// Deviation of h_inv from the family pattern (entries off-pattern or unequal).
inline double family_pattern_defect(Family f, const Mat8& h_inv) {
  return (h_inv - family_dual(f, family_params_of(f, h_inv))).cwiseAbs().maxCoeff();
}

// ---- isometries -----------------------------------------------------------

/// Lie-derivative of h_inv along u, as the matrix [h_inv, sum u_a 2f_a].
inline Mat8 lie_derivative(const Mat8& h_inv, const Vec8& u) {
  Mat8 g = adjoint_of(u);
  return h_inv * g - g * h_inv;
}

inline double lie_derivative_residual(const Mat8& h_inv, const Vec8& u) {
  return lie_derivative(h_inv, u).norm();
}

struct Stabilizer {
  int dimension = 0;
  std::vector<Vec8> basis;  // orthonormal in R^8
};

/// Null space of u -> L_u h_inv; singular values below tol * max|h_inv| count as zero.
inline Stabilizer stabilizer(const Mat8& h_inv, double tol = 1e-8) {
  Eigen::Matrix<double, N * N, N> M;
  for (int a = 0; a < N; ++a) {
    Vec8 u = Vec8::Zero();
    u(a) = 1.0;
    Mat8 L = lie_derivative(h_inv, u);
    M.col(a) = Eigen::Map<const Eigen::Matrix<double, N * N, 1>>(L.data());
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, N * N, N>> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Stabilizer st;
  const double scale = h_inv.cwiseAbs().maxCoeff();
  for (int k = 0; k < N; ++k) {
    if (s(k) <= tol * scale) {
      st.basis.push_back(svd.matrixV().col(k));
    }
  }
  st.dimension = static_cast<int>(st.basis.size());
  return st;
}

/// Distance of v from span(basis); basis assumed orthonormal.
inline double distance_to_span(const std::vector<Vec8>& basis, const Vec8& v) {
  Vec8 r = v;
  for (const Vec8& b : basis) r -= b.dot(v) * b;
  return r.norm();
}

inline bool finite_isometry_check(const Mat8& h_inv, const Mat8& r) {
  if ((r.transpose() * r - Mat8::Identity()).cwiseAbs().maxCoeff() > 1e-8)
    throw Error(ErrorCode::BAD_INPUT, "r is not orthogonal");
  return (r.transpose() * h_inv * r - h_inv).norm() < 1e-8;
}

/// r^T h_inv r with r = exp(t f_a).
inline Mat8 ad_rotate(const Mat8& h_inv, int a, double t) {
  Mat8 r = (t * su3().ad.f[a]).exp();
  Mat8 out = r.transpose() * h_inv * r;
  return 0.5 * (out + out.transpose());
}

/// Rotation angle about f_8 that removes theta from a U1_I member.
inline double u1i_theta_angle(double eta, double theta) {
  return std::atan2(theta, eta) / std::sqrt(3.0);
}

/// Ad-normalised U1_I parameters: theta -> 0, eta -> sqrt(eta^2+theta^2).
inline std::vector<double> normalize_u1i(const std::vector<double>& p) {
  if (p.size() != 8) throw Error(ErrorCode::BAD_ARITY, "U1_I takes 8 parameters");
  Mat8 rotated = ad_rotate(family_dual(Family::U1_I, p), 7, u1i_theta_angle(p[6], p[7]));
  return family_params_of(Family::U1_I, rotated);
}

/// U1_Y normalisation: conjugate by exp(u) with u in span(f1,f2,f3) so the
/// k-block becomes diagonal. Returns the 14 parameters of the rotated member.
inline std::vector<double> normalize_u1y(const std::vector<double>& p) {
  Mat8 h = family_dual(Family::U1_Y, p);
  Eigen::Matrix3d k = h.topLeftCorner<3, 3>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k);
  Eigen::Matrix3d q = es.eigenvectors();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  // Ad(SU(2)) acts on (X1,X2,X3) as SO(3); find u with exp(sum u_a 2f_a)|_{3x3} = q
  Eigen::Matrix3d logq = q.log();
  Vec8 u = Vec8::Zero();
  // (2f_a)_{bc} = 2 eps_abc on the su(2) block
  u(0) = logq(1, 2) / 2.0;
  u(1) = logq(2, 0) / 2.0;
  u(2) = logq(0, 1) / 2.0;
  Mat8 r = group_element(u, 1.0);
  Mat8 out = r.transpose() * h * r;
  out = 0.5 * (out + out.transpose());
  return family_params_of(Family::U1_Y, out);
}

// ---- signature ------------------------------------------------------------

struct Signature {
  int p = 0, q = 0;
  std::vector<double> eigenvalues;  // eigenvalues of h, descending
};

inline Signature signature(const Mat8& h_inv) {
  Eigen::SelfAdjointEigenSolver<Mat8> es(h_inv);
  Signature s;
  for (int i = 0; i < N; ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev) < 1e-10 || !std::isfinite(ev)) throw Error(ErrorCode::DEGENERATE, "zero eigenvalue");
    s.eigenvalues.push_back(1.0 / ev);
    (ev > 0 ? s.p : s.q)++;
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

// ---- 1 + 8 + 27 -----------------------------------------------------------

struct DecompositionTriple {
  Mat8 part1, part8, part27;
  std::optional<double> A, B, C;
};

inline Mat8 m8_matrix() { return (Vec8() << 1, 1, 1, -0.5, -0.5, -0.5, -0.5, -1).finished().asDiagonal(); }

inline DecompositionTriple project_1_8_27(const Mat8& h_inv, std::optional<Family> family = std::nullopt) {
  DecompositionTriple t;
  t.part1 = h_inv.trace() / 8.0 * Mat8::Identity();
  t.part8 = Mat8::Zero();
  for (int a = 0; a < N; ++a) {
    Mat8 da = su3().d.matrix(a);
    t.part8 += 0.6 * (h_inv * da).trace() * da;
  }
  t.part27 = h_inv - t.part1 - t.part8;
  if (family == Family::U2 || family == Family::SO3 || family == Family::SU3) {
    t.A = t.part1(0, 0);
    t.B = t.part8(0, 0);  // m8_{11} = 1
    if (family == Family::U2) {
      t.C = t.part27(0, 0);  // m27 = diag(1,1,1,-3,-3,-3,-3,9)
    } else if (family == Family::SO3) {
      t.C = t.part27(0, 0);  // m27 = diag(1,-5/3,1,1,-5/3,1,-5/3,1)
    } else {
      t.C = 0.0;
    }
  }
  return t;
}

}  // namespace liegeom
