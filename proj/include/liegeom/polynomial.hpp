#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "error.hpp"

namespace liegeom {

// ---- exact integer coefficients --------------------------------------------

using int128 = __int128;

inline int128 parse_int128(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw Error(ErrorCode::BAD_INPUT, "empty integer '" + s + "'");
  int128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::BAD_INPUT, "bad integer '" + s + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

/// Unevaluated sum hi + lo.
struct DoubleDouble {
  double hi = 0, lo = 0;
};

inline DoubleDouble split_int128(int128 v) {
  double hi = static_cast<double>(v);
  int128 rest = v - static_cast<int128>(hi);
  return {hi, static_cast<double>(rest)};
}

// ---- error-free transformations -------------------------------------------

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double z = s - a;
  e = (a - (s - z)) + (b - z);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

/// Polynomial with integer coefficients, highest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<int128> c) : c_(std::move(c)) { trim(); }

  static IntPoly from_strings(const std::vector<std::string>& s) {
    std::vector<int128> c;
    for (const auto& t : s) c.push_back(parse_int128(t));
    return IntPoly(c);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<int128>& coeffs() const { return c_; }

  IntPoly derivative() const {
    std::vector<int128> d;
    int n = degree();
    for (int i = 0; i < n; ++i) d.push_back(c_[i] * (n - i));
    if (d.empty()) d.push_back(0);
    return IntPoly(d);
  }

  /// Compensated Horner with double-double coefficients; returns p(x) with
  /// an error close to what evaluation in twice the working precision gives.
  double eval(double x) const {
    double s = 0, c = 0;  // running value and its correction
    for (const int128& ci : c_) {
      DoubleDouble a = split_int128(ci);
      double p, pe, t, te;
      two_prod(s, x, p, pe);
      two_sum(p, a.hi, t, te);
      c = c * x + (pe + te + a.lo);
      s = t;
    }
    return s + c;
  }

  /// Plain double Horner, kept for comparison.
  double eval_naive(double x) const {
    double s = 0;
    for (const int128& ci : c_) s = s * x + static_cast<double>(ci);
    return s;
  }

 private:
  void trim() {
    std::size_t k = 0;
    while (k + 1 < c_.size() && c_[k] == 0) ++k;
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    if (c_.empty()) c_.push_back(0);
  }

  std::vector<int128> c_;
};

// ---- real polynomials -------------------------------------------------------

/// Roots of a real polynomial (highest degree first) from the companion matrix.
inline std::vector<std::complex<double>> poly_roots(std::vector<double> c) {
  while (c.size() > 1 && c.front() == 0.0) c.erase(c.begin());
  int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) M(0, j) = -c[j + 1] / c[0];
  for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<std::complex<double>> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
  return r;
}

inline double horner(const std::vector<double>& c, double x) {
  double s = 0;
  for (double ci : c) s = s * x + ci;
  return s;
}

/// Real roots, each polished by a few Newton steps, ascending.
inline std::vector<double> real_roots(const std::vector<double>& c, double imag_tol = 1e-7) {
  std::vector<double> d;
  int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i) d.push_back(c[i] * (n - i));
  std::vector<double> out;
  for (const auto& z : poly_roots(c)) {
    if (std::abs(z.imag()) > imag_tol * std::max(1.0, std::abs(z))) continue;
    double x = z.real();
    for (int it = 0; it < 4; ++it) {
      double dp = horner(d, x);
      if (dp == 0.0) break;
      x -= horner(c, x) / dp;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double smallest_real_root(const std::vector<double>& c) {
  auto r = real_roots(c);
  if (r.empty()) throw Error(ErrorCode::NO_CONVERGENCE, "polynomial has no real root");
  return r.front();
}

// ---- certification -----------------------------------------------------------

struct RootCertificate {
  double value = 0;         // candidate
  double residual = 0;      // p(value), compensated
  double refined = 0;       // after Newton
  double displacement = 0;  // |refined - value| / max(1,|value|)
  int iterations = 0;
  bool converged = false;
  bool pass = false;
};

/// Newton from `value` using compensated evaluation. Passes when the iteration
/// settles within `max_iter` steps at a point within `rel_tol` of `value`.
inline RootCertificate certify_root(const IntPoly& p, double value, int max_iter = 3, double rel_tol = 1e-8) {
  RootCertificate rc;
  rc.value = value;
  rc.residual = p.eval(value);
  IntPoly dp = p.derivative();
  double x = value;
  for (int it = 1; it <= max_iter; ++it) {
    double d = dp.eval(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    double step = p.eval(x) / d;
    x -= step;
    rc.iterations = it;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) {
      rc.converged = true;
      break;
    }
  }
  rc.refined = x;
  rc.displacement = std::abs(x - value) / std::max(1.0, std::abs(value));
  rc.pass = rc.converged && std::abs(x - value) <= rel_tol * std::max(std::abs(value), 1e-300);
  return rc;
}

struct RealRootCount {
  int companion = 0;       // real eigenvalues of the companion matrix
  int sign_changes = 0;    // sign changes on a grid over the Cauchy bound
  double cauchy_bound = 0;
};

inline RealRootCount count_real_roots(const IntPoly& p, int grid = 200000) {
  RealRootCount rc;
  std::vector<double> c;
  for (const auto& v : p.coeffs()) c.push_back(static_cast<double>(v));
  for (const auto& z : poly_roots(c))
    if (std::abs(z.imag()) <= 1e-7 * std::max(1.0, std::abs(z))) ++rc.companion;
  double lead = std::abs(c.front()), m = 0;
  for (std::size_t i = 1; i < c.size(); ++i) m = std::max(m, std::abs(c[i]) / lead);
  rc.cauchy_bound = 1.0 + m;
  // grid in asinh-scaled coordinates so small roots are resolved too
  double umax = std::asinh(rc.cauchy_bound);
  double prev = p.eval(-rc.cauchy_bound);
  for (int i = 1; i <= grid; ++i) {
    double u = -umax + 2.0 * umax * i / grid;
    double v = p.eval(std::sinh(u));
    if (v == 0.0) continue;
    if (prev != 0.0 && (v > 0) != (prev > 0)) ++rc.sign_changes;
    prev = v;
  }
  return rc;
}

}  // namespace liegeom
