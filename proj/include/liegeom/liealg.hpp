#pragma once

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "tensor.hpp"

namespace liegeom {

/// Gell-Mann matrices lambda_1..lambda_8 (stored 0-based).
struct GellMannBasis {
  std::array<Mat3c, N> lambda;
};

enum class Frame { LAMBDA_F, X_BASIS };

/// Structure constants x[a][b][c] with [e_a, e_b] = x_ab^c e_c.
struct StructureTensor {
  Tensor3 x;
  Frame frame = Frame::LAMBDA_F;

  double operator()(int a, int b, int c) const { return x(a, b, c); }
};

/// Totally symmetric d_abc = 1/4 Tr(lambda_a {lambda_b, lambda_c}).
struct DTensor {
  Tensor3 d;

  double operator()(int a, int b, int c) const { return d(a, b, c); }
  Mat8 matrix(int a) const {
    Mat8 m;
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) m(b, c) = d(a, b, c);
    return m;
  }
};

/// f[a] with (f[a])_bc = f_ab^c; the adjoint image of i L_a is 2 f[a].
struct AdjointGenerators {
  std::array<Mat8, N> f;
};

inline Mat3c unit_E(int i, int j) {
  Mat3c m = Mat3c::Zero();
  m(i - 1, j - 1) = 1.0;
  return m;
}

inline GellMannBasis build_gellmann() {
  const std::complex<double> I(0.0, 1.0);
  auto E = unit_E;
  GellMannBasis g;
  g.lambda[0] = E(1, 2) + E(2, 1);
  g.lambda[1] = I * (E(2, 1) - E(1, 2));
  g.lambda[2] = E(1, 1) - E(2, 2);
  g.lambda[3] = E(1, 3) + E(3, 1);
  g.lambda[4] = I * (E(3, 1) - E(1, 3));
  g.lambda[5] = E(2, 3) + E(3, 2);
  g.lambda[6] = I * (E(3, 2) - E(2, 3));
  g.lambda[7] = (E(1, 1) + E(2, 2) - 2.0 * E(3, 3)) / std::sqrt(3.0);
  return g;
}

// 4 i f_abc = Tr([lambda_a, lambda_b] lambda_c)
inline StructureTensor structure_constants(const GellMannBasis& g) {
  StructureTensor f;
  f.frame = Frame::LAMBDA_F;
  const std::complex<double> four_i(0.0, 4.0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      Mat3c comm = g.lambda[a] * g.lambda[b] - g.lambda[b] * g.lambda[a];
      for (int c = 0; c < N; ++c) {
        double v = ((comm * g.lambda[c]).trace() / four_i).real();
        f.x(a, b, c) = std::abs(v) < 1e-15 ? 0.0 : v;
      }
    }
  return f;
}

inline StructureTensor x_basis_constants(const StructureTensor& f) {
  StructureTensor x;
  x.frame = Frame::X_BASIS;
  const double s = -1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < f.x.v.size(); ++i) x.x.v[i] = s * f.x.v[i];
  return x;
}

inline DTensor d_symbols(const GellMannBasis& g) {
  DTensor d;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        Mat3c anti = g.lambda[b] * g.lambda[c] + g.lambda[c] * g.lambda[b];
        double v = 0.25 * (g.lambda[a] * anti).trace().real();
        d.d(a, b, c) = std::abs(v) < 1e-15 ? 0.0 : v;
      }
  return d;
}

inline AdjointGenerators adjoint_generators(const StructureTensor& f) {
  AdjointGenerators ad;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) ad.f[a](b, c) = f(a, b, c);
  return ad;
}

/// Killing inner product k_ab = -sum x_am^n x_bn^m.
inline Mat8 killing_matrix(const StructureTensor& x) {
  Mat8 k = Mat8::Zero();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      double s = 0;
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) s += x(a, m, n) * x(b, n, m);
      k(a, b) = -s;
    }
  return k;
}

inline double jacobi_residual(const StructureTensor& x) {
  double worst = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          double s = 0;
          for (int m = 0; m < N; ++m)
            s += x(a, b, m) * x(m, c, d) + x(b, c, m) * x(m, a, d) + x(c, a, m) * x(m, b, d);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

/// Everything derived from the Gell-Mann basis, built once.
struct Su3 {
  GellMannBasis basis;
  StructureTensor f;
  StructureTensor x;
  DTensor d;
  AdjointGenerators ad;
};

inline const Su3& su3() {
  static const Su3 s = [] {
    Su3 r;
    r.basis = build_gellmann();
    r.f = structure_constants(r.basis);
    r.x = x_basis_constants(r.f);
    r.d = d_symbols(r.basis);
    r.ad = adjoint_generators(r.f);
    return r;
  }();
  return s;
}

/// sum_a u_a (2 f[a])
inline Mat8 adjoint_of(const Vec8& u) {
  Mat8 m = Mat8::Zero();
  for (int a = 0; a < N; ++a) m += 2.0 * u(a) * su3().ad.f[a];
  return m;
}

/// exp(t * sum_a u_a 2f[a]) -- Pade scaling-and-squaring from Eigen.
inline Mat8 group_element(const Vec8& u, double t) {
  Mat8 g = t * adjoint_of(u);
  return g.exp();
}

inline Mat8 group_element(int a, double t) {
  Vec8 u = Vec8::Zero();
  u(a) = 1.0;
  return group_element(u, t);
}

}  // namespace liegeom
