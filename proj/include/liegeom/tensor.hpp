#pragma once

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace liegeom {

constexpr int N = 8;

using Mat8 = Eigen::Matrix<double, N, N>;
using Vec8 = Eigen::Matrix<double, N, 1>;
using Mat3c = Eigen::Matrix3cd;
using MatXc = Eigen::MatrixXcd;

/// Dense rank-3 array over the 8-dimensional algebra, row-major (a,b,c).
struct Tensor3 {
  std::array<double, N * N * N> v{};

  double& operator()(int a, int b, int c) { return v[(a * N + b) * N + c]; }
  double operator()(int a, int b, int c) const { return v[(a * N + b) * N + c]; }

  double max_abs() const {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
};

/// Dense rank-4 array, row-major (a,b,c,d).
struct Tensor4 {
  std::array<double, N * N * N * N> v{};

  double& operator()(int a, int b, int c, int d) { return v[((a * N + b) * N + c) * N + d]; }
  double operator()(int a, int b, int c, int d) const { return v[((a * N + b) * N + c) * N + d]; }

  Tensor4& operator+=(const Tensor4& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Tensor4& operator*=(double s) {
    for (double& x : v) x *= s;
    return *this;
  }
  friend Tensor4 operator-(const Tensor4& a, const Tensor4& b) {
    Tensor4 r;
    for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
  }
  double max_abs() const {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
};

}  // namespace liegeom
