#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "liealg.hpp"
#include "metric.hpp"
#include "tensor.hpp"

namespace liegeom {

/// Structure symbols with indices moved by one fixed metric.
///   x(a,b,c)  = x_ab^c       xl(a,b,c) = x_abc = x_ab^d h_dc
///   xu(a,b,c) = x^a_bc       xuu(a,b,c) = x^{ab}_c
struct MetricSymbols {
  Mat8 h, h_inv;
  Tensor3 xl, xu, xuu;

  explicit MetricSymbols(const InvariantMetric& g) : h(g.h()), h_inv(g.h_inv()) {
    const Tensor3& x = su3().x.x;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
          double s = 0;
          for (int d = 0; d < N; ++d) s += x(a, b, d) * h(d, c);
          xl(a, b, c) = s;
        }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
          double s = 0;
          for (int e = 0; e < N; ++e) s += h_inv(a, e) * xl(e, b, c);
          xu(a, b, c) = s;
        }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
          double s = 0;
          for (int e = 0; e < N; ++e) s += h_inv(b, e) * xu(a, e, c);
          xuu(a, b, c) = s;
        }
  }

  /// x^m_n^n, zero for unimodular algebras.
  Vec8 trace_vector() const {
    Vec8 t = Vec8::Zero();
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n)
        for (int k = 0; k < N; ++k) t(m) += xu(m, n, k) * h_inv(k, n);
    return t;
  }
};

// ---- connection -----------------------------------------------------------

/// Levi-Civita connection, G(a,b,c) = Gamma^c_ab with nabla_{e_a} e_b = Gamma^c_ab e_c.
inline Tensor3 connection(const InvariantMetric& g) {
  MetricSymbols s(g);
  Tensor3 low, up;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) low(a, b, c) = 0.5 * (s.xl(a, b, c) - s.xl(b, c, a) + s.xl(c, a, b));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        double t = 0;
        for (int d = 0; d < N; ++d) t += low(a, b, d) * s.h_inv(d, c);
        up(a, b, c) = t;
      }
  return up;
}

/// nabla_{e_a} e_b as a component vector.
inline Vec8 covariant_derivative(const Tensor3& gamma, int a, int b) {
  Vec8 v;
  for (int c = 0; c < N; ++c) v(c) = gamma(a, b, c);
  return v;
}

/// R_abcd = h(R(e_c,e_d) e_b, e_a) from the connection, R(u,v) = [nabla_u, nabla_v] - nabla_[u,v].
inline Tensor4 riemann_from_connection(const InvariantMetric& g) {
  const Tensor3& x = su3().x.x;
  Tensor3 G = connection(g);
  const Mat8& h = g.h();
  Tensor4 up;  // R^n_bcd stored at (n,b,c,d)
  for (int b = 0; b < N; ++b)
    for (int c = 0; c < N; ++c)
      for (int d = 0; d < N; ++d)
        for (int n = 0; n < N; ++n) {
          double s = 0;
          for (int m = 0; m < N; ++m)
            s += G(d, b, m) * G(c, m, n) - G(c, b, m) * G(d, m, n) - x(c, d, m) * G(m, b, n);
          up(n, b, c, d) = s;
        }
  Tensor4 R;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          double s = 0;
          for (int n = 0; n < N; ++n) s += h(a, n) * up(n, b, c, d);
          R(a, b, c, d) = s;
        }
  return R;
}

// ---- Riemann (closed structure-constant expression) -----------------------

/// The quartic structure-constant expression for the Riemann tensor. It is
/// evaluated with its last index pair exchanged, which is the orientation in
/// which rho_bd = R^a_bad and chi(X_a,X_b) = R_abab / (...) are positive for
/// the Killing metric.
inline Tensor4 riemann(const InvariantMetric& g) {
  const Tensor3& x = su3().x.x;
  MetricSymbols s(g);
  const Tensor3& xl = s.xl;
  Tensor3 S, L;  // S(m,a,c) = x^m_ac + x^m_ca, L(m,b,d) = x_mbd + x_mdb
  for (int m = 0; m < N; ++m)
    for (int a = 0; a < N; ++a)
      for (int c = 0; c < N; ++c) {
        S(m, a, c) = s.xu(m, a, c) + s.xu(m, c, a);
        L(m, a, c) = xl(m, a, c) + xl(m, c, a);
      }
  Tensor4 R;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          double t = 0;
          for (int m = 0; m < N; ++m) {
            t += xl(a, c, m) * x(b, d, m) + 2.0 * xl(a, b, m) * x(c, d, m) - xl(b, c, m) * x(a, d, m) -
                 x(a, b, m) * xl(m, c, d) + x(a, b, m) * xl(m, d, c) - x(c, d, m) * xl(m, a, b) +
                 x(c, d, m) * xl(m, b, a) + S(m, a, c) * L(m, b, d) - S(m, b, c) * L(m, a, d);
          }
          R(a, b, d, c) = 0.25 * t;
        }
  return R;
}

/// rho_bd = R^a_bad
inline Mat8 ricci_from_riemann(const Tensor4& R, const Mat8& h_inv) {
  Mat8 rho = Mat8::Zero();
  for (int b = 0; b < N; ++b)
    for (int d = 0; d < N; ++d) {
      double s = 0;
      for (int a = 0; a < N; ++a)
        for (int e = 0; e < N; ++e) s += h_inv(a, e) * R(e, b, a, d);
      rho(b, d) = s;
    }
  return rho;
}

// ---- Ricci and scalar, directly from structure constants ------------------

inline Mat8 ricci(const MetricSymbols& s) {
  const Tensor3& x = su3().x.x;
  Vec8 tr = s.trace_vector();
  Mat8 rho;
  for (int b = 0; b < N; ++b)
    for (int d = b; d < N; ++d) {
      double t1 = 0, t2 = 0, t3 = 0, t4 = 0;
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          t1 += x(m, b, n) * x(n, d, m);
          t2 += s.xu(m, b, n) * x(m, d, n);
          t3 += s.xl(m, n, b) * s.xuu(m, n, d);
        }
      for (int m = 0; m < N; ++m) t4 += (s.xl(m, b, d) + s.xl(m, d, b)) * tr(m);
      rho(b, d) = rho(d, b) = -0.5 * t1 - 0.5 * t2 + 0.25 * t3 - 0.5 * t4;
    }
  return rho;
}

inline Mat8 ricci(const InvariantMetric& g) { return ricci(MetricSymbols(g)); }

inline double scalar_curvature(const MetricSymbols& s) {
  const Tensor3& x = su3().x.x;
  double t1 = 0, t2 = 0;
  for (int m = 0; m < N; ++m)
    for (int k = 0; k < N; ++k)
      for (int n = 0; n < N; ++n) {
        t1 += s.xuu(m, k, n) * x(m, k, n);
        double xmkn = 0;  // x_m^{kn}
        for (int j = 0; j < N; ++j) xmkn += x(m, j, n) * s.h_inv(j, k);
        t2 += xmkn * x(n, k, m);
      }
  Vec8 tr = s.trace_vector();
  double t3 = 0;
  for (int m = 0; m < N; ++m) {
    double low = 0;  // x_mk^k
    for (int k = 0; k < N; ++k) low += x(m, k, k);
    t3 += low * tr(m);
  }
  return -0.25 * t1 - 0.5 * t2 - t3;
}

inline double scalar_curvature(const InvariantMetric& g) { return scalar_curvature(MetricSymbols(g)); }

/// Size of the unimodular trace terms dropped in the literature formulas.
inline double unimodular_defect(const InvariantMetric& g) {
  return MetricSymbols(g).trace_vector().cwiseAbs().maxCoeff();
}

struct CurvatureBundle {
  Tensor4 riemann;
  Mat8 ricci;
  double scalar = 0;
  Mat8 einstein;
};

inline CurvatureBundle curvature(const InvariantMetric& g) {
  CurvatureBundle c;
  c.riemann = riemann(g);
  MetricSymbols s(g);
  c.ricci = ricci(s);
  c.scalar = scalar_curvature(s);
  c.einstein = c.ricci - 0.5 * c.scalar * g.h();
  return c;
}

struct RiemannDefects {
  double antisym_first = 0, antisym_last = 0, pair_swap = 0, bianchi = 0;
  double max() const { return std::max({antisym_first, antisym_last, pair_swap, bianchi}); }
};

inline RiemannDefects riemann_symmetry_defects(const Tensor4& R) {
  RiemannDefects d;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int e = 0; e < N; ++e) {
          double r = R(a, b, c, e);
          d.antisym_first = std::max(d.antisym_first, std::abs(r + R(b, a, c, e)));
          d.antisym_last = std::max(d.antisym_last, std::abs(r + R(a, b, e, c)));
          d.pair_swap = std::max(d.pair_swap, std::abs(r - R(c, e, a, b)));
          d.bianchi = std::max(d.bianchi, std::abs(r + R(a, c, e, b) + R(a, e, b, c)));
        }
  return d;
}

// ---- sectional curvature ----------------------------------------------------

struct SectionalTable {
  // value[a][b] for a < b; nullopt when the plane is degenerate
  std::array<std::array<std::optional<double>, N>, N> value{};

  std::optional<double> operator()(int a, int b) const { return a < b ? value[a][b] : value[b][a]; }
};

inline SectionalTable sectional_table(const InvariantMetric& g, const Tensor4& R) {
  const Mat8& h = g.h();
  SectionalTable t;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      double den = h(a, a) * h(b, b) - h(a, b) * h(a, b);
      if (std::abs(den) > 1e-12) t.value[a][b] = R(a, b, a, b) / den;
    }
  return t;
}

inline SectionalTable sectional_table(const InvariantMetric& g) { return sectional_table(g, riemann(g)); }

// ---- principal Ricci curvatures --------------------------------------------

struct PrincipalCurvatures {
  std::vector<double> values;  // real parts, ascending
  double max_imag = 0;
};

inline PrincipalCurvatures ricci_principal(const InvariantMetric& g, const Mat8& rho) {
  Eigen::EigenSolver<Mat8> es(g.h_inv() * rho, false);
  PrincipalCurvatures p;
  for (int i = 0; i < N; ++i) {
    p.values.push_back(es.eigenvalues()(i).real());
    p.max_imag = std::max(p.max_imag, std::abs(es.eigenvalues()(i).imag()));
  }
  std::sort(p.values.begin(), p.values.end());
  return p;
}

inline PrincipalCurvatures ricci_principal(const InvariantMetric& g) { return ricci_principal(g, ricci(g)); }

// ---- Ricci decomposition ------------------------------------------------------

/// (A o B)_abcd = A_ac B_bd + A_bd B_ac - A_ad B_bc - A_bc B_ad
inline Tensor4 kulkarni_nomizu(const Mat8& A, const Mat8& B) {
  Tensor4 T;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          T(a, b, c, d) = A(a, c) * B(b, d) + A(b, d) * B(a, c) - A(a, d) * B(b, c) - A(b, c) * B(a, d);
  return T;
}

/// Signed square norm T_abcd T^abcd, indices raised with h_inv.
inline double square_norm(const Tensor4& T, const Mat8& h_inv) {
  Tensor4 cur = T, next;
  for (int slot = 0; slot < 4; ++slot) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) {
            int idx[4] = {a, b, c, d};
            double s = 0;
            for (int e = 0; e < N; ++e) {
              int j[4] = {a, b, c, d};
              j[slot] = e;
              s += h_inv(idx[slot], e) * cur(j[0], j[1], j[2], j[3]);
            }
            next(a, b, c, d) = s;
          }
    cur = next;
  }
  double n = 0;
  for (std::size_t i = 0; i < T.v.size(); ++i) n += T.v[i] * cur.v[i];
  return n;
}

struct RicciDecomposition {
  Tensor4 weyl, traceless_part, scalar_part;
  double norm_R = 0, norm_weyl = 0, norm_traceless = 0, norm_scalar = 0;
};

inline RicciDecomposition ricci_decomposition(const InvariantMetric& g, const CurvatureBundle& cb) {
  constexpr double d = N;
  const Mat8& h = g.h();
  RicciDecomposition r;
  r.traceless_part = kulkarni_nomizu(cb.ricci - cb.scalar / d * h, h);
  r.traceless_part *= 1.0 / (d - 2.0);
  r.scalar_part = kulkarni_nomizu(h, h);
  r.scalar_part *= cb.scalar / (2.0 * d * (d - 1.0));
  r.weyl = cb.riemann - r.traceless_part;
  r.weyl = r.weyl - r.scalar_part;
  r.norm_R = square_norm(cb.riemann, g.h_inv());
  r.norm_weyl = square_norm(r.weyl, g.h_inv());
  r.norm_traceless = square_norm(r.traceless_part, g.h_inv());
  r.norm_scalar = square_norm(r.scalar_part, g.h_inv());
  return r;
}

inline RicciDecomposition ricci_decomposition(const InvariantMetric& g) {
  return ricci_decomposition(g, curvature(g));
}

/// Constant shift of the conformal Laplacian, -(d-2)/(4(d-1)) tau.
inline double yamabe_shift(double tau) { return -(6.0 / 28.0) * tau; }
inline double yamabe_shift(const InvariantMetric& g) { return yamabe_shift(scalar_curvature(g)); }

}  // namespace liegeom
