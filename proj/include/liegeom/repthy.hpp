#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "liealg.hpp"

namespace liegeom {

// ---- exact rationals ----------------------------------------------------------

struct Rational {
  long long num = 0, den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
};

// ---- highest weights ------------------------------------------------------------

struct HighestWeight {
  int o1 = 0, o2 = 0;

  int dim() const { return (o1 + 1) * (o2 + 1) * (o1 + o2 + 2) / 2; }
  friend bool operator<(const HighestWeight& a, const HighestWeight& b) {
    return std::pair(a.o1, a.o2) < std::pair(b.o1, b.o2);
  }
};

inline void check_weight(const HighestWeight& w) {
  if (w.o1 < 0 || w.o2 < 0) throw Error(ErrorCode::BAD_INPUT, "Dynkin components must be nonnegative");
}

enum class CasimirNorm { RENORMALIZED, KILLING };

/// 2/3 (o1^2 + o1 o2 + o2^2) + 2 (o1 + o2), or that divided by 6.
inline Rational casimir2(const HighestWeight& w, CasimirNorm n = CasimirNorm::KILLING) {
  check_weight(w);
  long long a = w.o1, b = w.o2;
  long long num = 2 * (a * a + a * b + b * b) + 6 * (a + b);
  return n == CasimirNorm::RENORMALIZED ? Rational(num, 3) : Rational(num, 18);
}

inline Rational casimir3(const HighestWeight& w) {
  check_weight(w);
  long long a = w.o1, b = w.o2;
  return Rational((a - b) * (3 + 2 * a + b) * (3 + a + 2 * b), 27);
}

inline Rational dynkin_index(const HighestWeight& w) {
  Rational c = casimir2(w, CasimirNorm::RENORMALIZED);
  return Rational(c.num * w.dim(), c.den * 16);
}

// ---- weights ------------------------------------------------------------------------

struct Weight {
  int w1 = 0, w2 = 0;  // fundamental-weight coordinates
  int multiplicity = 1;
};

using WeightSystem = std::vector<Weight>;

namespace detail {
// 3 x (lambda, mu) for weights in Dynkin coordinates
inline long long ip3(int a1, int a2, int b1, int b2) {
  return 2LL * a1 * b1 + 1LL * a1 * b2 + 1LL * a2 * b1 + 2LL * a2 * b2;
}
}  // namespace detail

/// Freudenthal recursion over mu = w - n1 alpha1 - n2 alpha2.
inline WeightSystem weight_system(const HighestWeight& w) {
  check_weight(w);
  const int depth = w.o1 + w.o2;
  const int roots[3][2] = {{2, -1}, {-1, 2}, {1, 1}};
  std::map<std::pair<int, int>, long long> mult;  // keyed by (n1, n2)
  auto at = [&](int n1, int n2) -> long long {
    auto it = mult.find({n1, n2});
    return it == mult.end() ? 0 : it->second;
  };
  const int L1 = w.o1 + 1, L2 = w.o2 + 1;  // Lambda + rho
  const long long top = detail::ip3(L1, L2, L1, L2);
  WeightSystem out;
  for (int level = 0; level <= 2 * depth; ++level)
    for (int n1 = std::max(0, level - depth); n1 <= std::min(level, depth); ++n1) {
      int n2 = level - n1;
      int m1 = w.o1 - 2 * n1 + n2, m2 = w.o2 + n1 - 2 * n2;
      long long m;
      if (level == 0) {
        m = 1;
      } else {
        long long den = top - detail::ip3(m1 + 1, m2 + 1, m1 + 1, m2 + 1);
        if (den <= 0) continue;
        long long num = 0;
        // positive root k alpha in (n1, n2) steps: alpha1 = (1,0), alpha2 = (0,1), alpha1+alpha2 = (1,1)
        const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
        for (int r = 0; r < 3; ++r)
          for (int k = 1;; ++k) {
            int q1 = n1 - k * steps[r][0], q2 = n2 - k * steps[r][1];
            if (q1 < 0 || q2 < 0) break;
            long long mq = at(q1, q2);
            if (mq == 0) continue;
            int p1 = m1 + k * roots[r][0], p2 = m2 + k * roots[r][1];
            num += mq * detail::ip3(p1, p2, roots[r][0], roots[r][1]);
          }
        num *= 2;
        m = num / den;
      }
      if (m > 0) {
        mult[{n1, n2}] = m;
        out.push_back({m1, m2, static_cast<int>(m)});
      }
    }
  return out;
}

// ---- branching to U(2) -------------------------------------------------------------

struct U2Irrep {
  int twoI = 0;
  int threeY = 0;
  int multiplicity = 1;

  std::string label() const { return "[" + std::to_string(twoI + 1) + "]" + std::to_string(threeY); }
  friend bool operator==(const U2Irrep& a, const U2Irrep& b) {
    return a.twoI == b.twoI && a.threeY == b.threeY && a.multiplicity == b.multiplicity;
  }
};

inline std::vector<U2Irrep> branch_to_u2(const HighestWeight& w) {
  // (2 I_3, 3Y) = (w1, w1 + 2 w2)
  std::map<int, std::map<int, int>> ladders;  // 3Y -> 2I_3 -> count
  for (const Weight& x : weight_system(w)) ladders[x.w1 + 2 * x.w2][x.w1] += x.multiplicity;
  std::vector<U2Irrep> out;
  for (auto& [y, ladder] : ladders) {
    int top = ladder.rbegin()->first;
    for (int t = top; t >= 0; t -= 2) {
      int here = ladder.count(t) ? ladder[t] : 0;
      int above = ladder.count(t + 2) ? ladder[t + 2] : 0;
      if (here > above) out.push_back({t, y, here - above});
    }
  }
  std::sort(out.begin(), out.end(), [](const U2Irrep& a, const U2Irrep& b) {
    return a.twoI != b.twoI ? a.twoI > b.twoI : a.threeY > b.threeY;
  });
  return out;
}

// ---- Laplacian on U(2)-invariant metrics ---------------------------------------------

struct SpectrumEntry {
  U2Irrep u2;
  double eigenvalue = 0;
  long long multiplicity = 0;
};

inline double laplacian_eigenvalue(const HighestWeight& w, const U2Irrep& u, double alpha, double beta, double gamma) {
  double I = u.twoI / 2.0, Y = u.threeY / 3.0;
  return beta * casimir2(w).value() + (alpha - beta) * I * (I + 1) / 3.0 + (gamma - beta) * Y * Y / 4.0;
}

inline std::vector<SpectrumEntry> laplacian_spectrum_u2(const HighestWeight& w, double alpha, double beta,
                                                        double gamma) {
  std::vector<SpectrumEntry> out;
  for (const U2Irrep& u : branch_to_u2(w))
    out.push_back({u, laplacian_eigenvalue(w, u, alpha, beta, gamma),
                   static_cast<long long>(w.dim()) * (u.twoI + 1) * u.multiplicity});
  return out;
}

// ---- modified cubic Casimir ------------------------------------------------------------

struct CubicParams {
  double A = 1, B = 1, C = 1, U = 1, V = 1;
};

inline double cubic_modified_eigenvalue(const HighestWeight& w, const U2Irrep& u, const CubicParams& p) {
  bool found = false;
  for (const U2Irrep& t : branch_to_u2(w))
    if (t.twoI == u.twoI && t.threeY == u.threeY) found = true;
  if (!found) throw Error(ErrorCode::NOT_IN_BRANCHING, u.label() + " does not occur in the restriction");
  double I = u.twoI / 2.0, Y = u.threeY / 3.0;
  double uB = 1.5 * (p.U - p.B);
  double uAB = 0.5 * (2 * p.A + p.B - 3 * p.U);
  double uBC = (3 * p.B - 2 * p.C - p.U) / 8.0;
  double uV = 0.5 * (p.U - p.V);
  return p.U * casimir3(w).value() + (uB * casimir2(w).value() + uAB * I * (I + 1) + uBC * Y * Y) * Y + uV * Y;
}

// ---- explicit representation matrices ----------------------------------------------------

/// Hermitian L_a with [L_a, L_b] = 2i f_abc L_c (L_a = lambda_a in the defining rep).
struct RepMatrices {
  HighestWeight weight;
  std::array<MatXc, N> L;
  int dim() const { return static_cast<int>(L[0].rows()); }
};

inline RepMatrices defining_rep() {
  RepMatrices r{{1, 0}, {}};
  for (int a = 0; a < N; ++a) r.L[a] = su3().basis.lambda[a];
  return r;
}

inline RepMatrices adjoint_rep() {
  RepMatrices r{{1, 1}, {}};
  const std::complex<double> I(0.0, 1.0);
  for (int a = 0; a < N; ++a) r.L[a] = (-2.0 * I) * su3().ad.f[a].cast<std::complex<double>>();
  return r;
}

namespace detail {

/// Generators on Sym^n of a 3-dim rep with generators g[a], orthonormal monomial basis.
inline std::array<MatXc, N> symmetric_power(const std::array<MatXc, N>& g, int n) {
  std::vector<std::array<int, 3>> mono;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b) mono.push_back({a, b, n - a - b});
  std::map<std::array<int, 3>, int> index;
  for (std::size_t k = 0; k < mono.size(); ++k) index[mono[k]] = static_cast<int>(k);
  auto lognorm = [](const std::array<int, 3>& m) {
    return 0.5 * (std::lgamma(m[0] + 1.0) + std::lgamma(m[1] + 1.0) + std::lgamma(m[2] + 1.0));
  };
  int d = static_cast<int>(mono.size());
  std::array<MatXc, N> out;
  for (int a = 0; a < N; ++a) {
    MatXc M = MatXc::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      const auto& m = mono[static_cast<std::size_t>(k)];
      for (int i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        for (int j = 0; j < 3; ++j) {
          std::complex<double> gji = g[a](j, i);
          if (gji == 0.0) continue;
          auto t = m;
          --t[i];
          ++t[j];
          // e^m / sqrt(m!) basis: coefficient n_i * sqrt(t!) / sqrt(m!) ... times 1/sqrt(t!) * sqrt(m!) rescaling
          double scale = std::exp(lognorm(m) - lognorm(t));
          M(index[t], k) += static_cast<double>(m[i]) * gji / scale;
        }
      }
    }
    out[a] = M;
  }
  return out;
}

inline MatXc kron(const MatXc& A, const MatXc& B) {
  MatXc K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

inline MatXc casimir_matrix(const std::array<MatXc, N>& L) {
  MatXc c = MatXc::Zero(L[0].rows(), L[0].cols());
  for (const auto& l : L) c += l * l;
  return c / 12.0;
}

inline RepMatrices construct_irrep(const HighestWeight& w) {
  std::array<MatXc, N> fund, conj;
  for (int a = 0; a < N; ++a) {
    fund[a] = su3().basis.lambda[a];
    conj[a] = -su3().basis.lambda[a].conjugate();
  }
  std::array<MatXc, N> s1 = symmetric_power(fund, w.o1), s2 = symmetric_power(conj, w.o2);
  std::array<MatXc, N> T;
  MatXc I1 = MatXc::Identity(s1[0].rows(), s1[0].rows()), I2 = MatXc::Identity(s2[0].rows(), s2[0].rows());
  for (int a = 0; a < N; ++a) T[a] = kron(s1[a], I2) + kron(I1, s2[a]);
  // Sym^o1 V (x) Sym^o2 Vbar = sum_k (o1-k, o2-k); project on k = 0
  MatXc cas = casimir_matrix(T);
  const double target = casimir2(w).value();
  MatXc P = MatXc::Identity(cas.rows(), cas.cols());
  for (int k = 1; k <= std::min(w.o1, w.o2); ++k) {
    double other = casimir2({w.o1 - k, w.o2 - k}).value();
    P = P * (cas - other * MatXc::Identity(cas.rows(), cas.cols())) / (target - other);
  }
  P = 0.5 * (P + P.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<MatXc> es(P);
  const int d = w.dim();
  MatXc Q = es.eigenvectors().rightCols(d);  // eigenvalue 1 block
  RepMatrices r{w, {}};
  for (int a = 0; a < N; ++a) {
    MatXc m = Q.adjoint() * T[a] * Q;
    r.L[a] = 0.5 * (m + m.adjoint().eval());
  }
  return r;
}

}  // namespace detail

inline constexpr int kDefaultDimLimit = 64;

/// Memoised irreps built from symmetric powers of the defining rep and its conjugate.
inline std::shared_ptr<const RepMatrices> irrep_matrices(const HighestWeight& w, int dim_limit = kDefaultDimLimit) {
  check_weight(w);
  if (w.dim() > dim_limit)
    throw Error(ErrorCode::DIM_LIMIT, "dim " + std::to_string(w.dim()) + " exceeds limit " + std::to_string(dim_limit));
  static std::shared_mutex mu;
  static std::map<HighestWeight, std::shared_ptr<const RepMatrices>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const RepMatrices>(detail::construct_irrep(w));
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(w, std::move(built));
  return it->second;
}

// ---- operators ------------------------------------------------------------------------------

enum class RepKind { DEFINING, ADJOINT, CONSTRUCTED };

struct RepSpec {
  RepKind kind = RepKind::DEFINING;
  HighestWeight weight{1, 0};  // used by CONSTRUCTED
};

struct LaplaceU2 {
  double alpha = 1, beta = 1, gamma = 1;
};
struct CubicCasimirOp {};
struct CubicModifiedOp {
  CubicParams p;
};
using OperatorKind = std::variant<LaplaceU2, CubicCasimirOp, CubicModifiedOp>;

inline RepMatrices rep_matrices(const RepSpec& r) {
  switch (r.kind) {
    case RepKind::DEFINING: return defining_rep();
    case RepKind::ADJOINT: return adjoint_rep();
    case RepKind::CONSTRUCTED: return *irrep_matrices(r.weight);
  }
  throw Error(ErrorCode::REP_UNAVAILABLE, "unknown representation");
}

inline HighestWeight rep_weight(const RepSpec& r) {
  switch (r.kind) {
    case RepKind::DEFINING: return {1, 0};
    case RepKind::ADJOINT: return {1, 1};
    case RepKind::CONSTRUCTED: return r.weight;
  }
  return r.weight;
}

/// -Delta = 1/12 (alpha sum L1..3^2 + beta sum L4..7^2 + gamma L8^2)
inline MatXc laplace_u2_matrix(const RepMatrices& R, double alpha, double beta, double gamma) {
  int d = R.dim();
  MatXc m = MatXc::Zero(d, d);
  for (int a = 0; a < 3; ++a) m += alpha * R.L[a] * R.L[a];
  for (int a = 3; a < 7; ++a) m += beta * R.L[a] * R.L[a];
  m += gamma * R.L[7] * R.L[7];
  return m / 12.0;
}

inline MatXc cubic_casimir_matrix(const RepMatrices& R) {
  const auto& L = R.L;
  const double s3 = std::sqrt(3.0);
  MatXc L8 = L[7];
  MatXc su2 = L[0] * L[0] + L[1] * L[1] + L[2] * L[2];
  MatXc coset = L[3] * L[3] + L[4] * L[4] + L[5] * L[5] + L[6] * L[6];
  MatXc m = su2 * L8 / (4 * s3) - coset * L8 / (8 * s3);
  m += L[2] * (L[3] * L[3] + L[4] * L[4] - L[5] * L[5] - L[6] * L[6]) / 8.0;
  m += (L[0] * L[3] * L[5] + L[0] * L[4] * L[6] - L[1] * L[3] * L[6] + L[1] * L[4] * L[5]) / 4.0;
  m += -L8 * L8 * L8 / (12 * s3) + L[2] / 2.0 - L8 / (2 * s3);
  return m;
}

inline MatXc cubic_modified_matrix(const RepMatrices& R, const CubicParams& p) {
  const auto& L = R.L;
  const double s3 = std::sqrt(3.0);
  const MatXc& L8 = L[7];
  MatXc m = 6 * s3 * p.A * (L[0] * L[0] * L8 + L[1] * L[1] * L8 + L[2] * L[2] * L8);
  m -= 3 * s3 * p.B * (L[3] * L[3] * L8 + L[4] * L[4] * L8 + L[5] * L[5] * L8 + L[6] * L[6] * L8);
  m -= 2 * s3 * p.C * L8 * L8 * L8;
  m += 9 * p.U *
       (2.0 * L[0] * L[3] * L[5] + 2.0 * L[0] * L[4] * L[6] - 2.0 * L[1] * L[3] * L[6] + 2.0 * L[1] * L[4] * L[5] +
        L[2] * L[3] * L[3] + L[2] * L[4] * L[4] - L[2] * L[5] * L[5] - L[2] * L[6] * L[6] + 4.0 * L[2]);
  m -= 12 * s3 * p.V * L8;
  return m / 72.0;
}

inline MatXc operator_in_rep(const RepSpec& rep, const OperatorKind& op) {
  RepMatrices R = rep_matrices(rep);
  if (auto* l = std::get_if<LaplaceU2>(&op)) return laplace_u2_matrix(R, l->alpha, l->beta, l->gamma);
  if (std::holds_alternative<CubicCasimirOp>(op)) return cubic_casimir_matrix(R);
  return cubic_modified_matrix(R, std::get<CubicModifiedOp>(op).p);
}

/// Eigenvalues of `op` on each branching term, read off the joint (I, Y) eigenspaces.
struct BlockSpectrum {
  U2Irrep u2;
  std::vector<double> eigenvalues;  // (2I+1) * multiplicity values
};

inline std::vector<BlockSpectrum> operator_spectrum_by_branch(const RepSpec& rep, const MatXc& op) {
  RepMatrices R = rep_matrices(rep);
  HighestWeight w = rep_weight(rep);
  int d = R.dim();
  // isospin Casimir I(I+1) = sum L1..3^2 / 4, hypercharge Y = L8 / sqrt(3)
  MatXc iso = (R.L[0] * R.L[0] + R.L[1] * R.L[1] + R.L[2] * R.L[2]) / 4.0;
  MatXc hyp = R.L[7] / std::sqrt(3.0);
  // a generic combination separates all (I, Y) pairs
  MatXc label = iso + 0.7316 * hyp;
  label = 0.5 * (label + label.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<MatXc> es(label);
  std::vector<BlockSpectrum> out;
  for (const U2Irrep& u : branch_to_u2(w)) {
    double I = u.twoI / 2.0, Y = u.threeY / 3.0;
    double target = I * (I + 1) + 0.7316 * Y;
    std::vector<int> cols;
    for (int k = 0; k < d; ++k)
      if (std::abs(es.eigenvalues()(k) - target) < 1e-6) cols.push_back(k);
    MatXc Q(d, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) Q.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(cols[j]);
    MatXc block = Q.adjoint() * op * Q;
    Eigen::ComplexEigenSolver<MatXc> bs(block);
    BlockSpectrum b{u, {}};
    for (Eigen::Index k = 0; k < bs.eigenvalues().size(); ++k) b.eigenvalues.push_back(bs.eigenvalues()(k).real());
    std::sort(b.eigenvalues.begin(), b.eigenvalues.end());
    out.push_back(std::move(b));
  }
  return out;
}

/// Tabulated (2,1) eigenvalues as originally listed, kept for the discrepancy report.
struct ListedComparison {
  U2Irrep u2;
  double listed = 0, formula = 0;
};

inline std::vector<ListedComparison> listed_21_comparison(double alpha, double beta, double gamma) {
  const double a = alpha, b = beta, g = gamma;
  struct Row {
    int twoI, threeY;
    double v;
  };
  const Row rows[] = {
      {3, 1, 5 * a / 12 + 10 * b + g / 4},     {2, 4, 2.0 / 3.0 * (a + 16 * b - g)},
      {2, -2, 2 * a / 3 + 9 * b + g},          {1, 1, (-a + 376 * b + 9 * g) / 36},
      {1, -5, (3 * a + 50 * b + 75 * g) / 12}, {0, -2, 29 * b / 3 + g},
  };
  std::vector<ListedComparison> out;
  for (const Row& r : rows) {
    U2Irrep u{r.twoI, r.threeY, 1};
    out.push_back({u, r.v, laplacian_eigenvalue({2, 1}, u, a, b, g)});
  }
  return out;
}

// ---- mesons -------------------------------------------------------------------------------

struct MesonInput {
  double m_pi = 0, m_K = 0, m_eta = 0;
};

struct GmoFit {
  double mu2_alpha = 0, mu2_beta = 0, mu2_gamma = 0;  // MeV^2
  double ratio_alpha() const { return mu2_alpha / mu2_beta; }
  double ratio_gamma() const { return mu2_gamma / mu2_beta; }
};

/// Forward map (mu2 alpha, beta, gamma) -> (m_pi^2, m_K^2, m_eta^2).
inline Eigen::Matrix3d gmo_matrix() {
  Eigen::Matrix3d M;
  M << 2.0 / 3, 1.0 / 3, 0, 0.25, 0.5, 0.25, 0, 1, 0;
  return M;
}

inline GmoFit gmo_fit(const MesonInput& m) {
  if (!(m.m_pi > 0 && m.m_K > 0 && m.m_eta > 0)) throw Error(ErrorCode::BAD_INPUT, "masses must be positive");
  Eigen::Matrix3d M = gmo_matrix();
  Eigen::FullPivLU<Eigen::Matrix3d> lu(M);
  if (lu.rank() < 3) throw Error(ErrorCode::SINGULAR_FIT, "mass system is singular");
  Eigen::Vector3d rhs(m.m_pi * m.m_pi, m.m_K * m.m_K, m.m_eta * m.m_eta);
  Eigen::Vector3d x = lu.solve(rhs);
  return {x(0), x(1), x(2)};
}

struct GmoPrediction {
  double m_eta = 0;
  double mu2_alpha = 0, mu2_beta = 0, mu2_gamma = 0;  // with the 27-part removed
  double kaon_check = 0;  // |(alpha + 5 beta)/6 - m_K^2|
};

inline GmoPrediction gmo_predict(double m_pi, double m_K) {
  double s = (4 * m_K * m_K - m_pi * m_pi) / 3.0;
  if (!(s > 0)) throw Error(ErrorCode::NEGATIVE_SQUARE, "4 m_K^2 - m_pi^2 must be positive");
  GmoPrediction p;
  p.mu2_beta = s;
  p.mu2_alpha = (3 * m_pi * m_pi - s) / 2.0;
  p.mu2_gamma = (4 * p.mu2_beta - p.mu2_alpha) / 3.0;
  p.m_eta = std::sqrt(s);
  double kaon = (p.mu2_alpha + 2 * p.mu2_beta + p.mu2_gamma) / 4.0;
  p.kaon_check = std::abs(kaon - (p.mu2_alpha + 5 * p.mu2_beta) / 6.0) + std::abs(kaon - m_K * m_K);
  return p;
}

}  // namespace liegeom
