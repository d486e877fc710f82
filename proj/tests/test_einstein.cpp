#include <gtest/gtest.h>

#include <cmath>

#include "liegeom/einstein.hpp"

using namespace liegeom;

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double param(const EinsteinSolution& s, const char* name) { return s.params[param_index(s.family, name)]; }

const SolveResult& u1i_slice() {
  static const SolveResult r = [] {
    SolveOptions o;
    o.starts = 400;
    o.constraints = {"gamma=delta"};
    return solve_family(Family::U1_I, o);
  }();
  return r;
}

const EinsteinSolution& lorentz() {
  for (const auto& s : u1i_slice().solutions)
    if (s.q == 1) return s;
  throw std::runtime_error("no Lorentzian class");
}

}  // namespace

TEST(Residual, VanishesOnKnownSolutions) {
  EXPECT_LT(max_abs(einstein_residual(Family::SU3, {1.0}, 0.25)), 1e-14);
  EXPECT_LT(max_abs(einstein_residual(Family::SO3, {1.0, 11.0}, 21.0 / 44)), 1e-14);
  EXPECT_LT(max_abs(einstein_residual(Family::SO3, {2.0, 22.0}, 21.0 / 22)), 1e-14);
  EXPECT_GT(max_abs(einstein_residual(Family::SO3, {1.0, 10.0}, 21.0 / 44)), 1e-3);
  EXPECT_GT(max_abs(einstein_residual(Family::SU3, {1.0}, 0.3)), 1e-3);
}

TEST(Constraints, Parsing) {
  SolveOptions o;
  o.constraints = {"gamma=delta", "zeta=0"};
  auto P = detail::make_parametrization(Family::U1_I, o);
  // alpha, theta fixed; delta tied; zeta fixed
  EXPECT_EQ(P.free.size(), 4u);
  EXPECT_EQ(P.tie[param_index(Family::U1_I, "delta")], param_index(Family::U1_I, "gamma"));
  EXPECT_EQ(P.fixed_value[param_index(Family::U1_I, "zeta")], 0.0);
  o.constraints = {"gamma"};
  EXPECT_THROW(detail::make_parametrization(Family::U1_I, o), Error);
  o.constraints = {"omega=1"};
  EXPECT_THROW(detail::make_parametrization(Family::U1_I, o), Error);
}

TEST(Solver, SmallFamiliesClassCounts) {
  SolveOptions o;
  o.starts = 200;
  EXPECT_EQ(solve_family(Family::SU3, o).solutions.size(), 1u);
  EXPECT_EQ(solve_family(Family::U2, o).solutions.size(), 1u);
  EXPECT_EQ(solve_family(Family::T2, o).solutions.size(), 1u);
  auto so3 = solve_family(Family::SO3, o);
  ASSERT_EQ(so3.solutions.size(), 2u);
  bool jensen = false;
  for (const auto& s : so3.solutions)
    if (std::abs(param(s, "beta") - 11.0) < 1e-9) {
      jensen = true;
      EXPECT_NEAR(s.kappa, 21.0 / 44, 1e-10);
      EXPECT_NEAR(s.tau, 42.0 / 11, 1e-9);
      EXPECT_EQ(s.stabilizer_dim, 3);
      EXPECT_EQ(s.p, 8);
    }
  EXPECT_TRUE(jensen);
}

TEST(Solver, KillingClassIsBiInvariant) {
  SolveOptions o;
  o.starts = 100;
  auto r = solve_family(Family::U2, o);
  ASSERT_EQ(r.solutions.size(), 1u);
  const auto& s = r.solutions.front();
  for (double v : s.params) EXPECT_NEAR(v, 1.0, 1e-7);
  EXPECT_NEAR(s.kappa, 0.25, 1e-7);
  EXPECT_EQ(s.stabilizer_dim, 8);
  EXPECT_NEAR(s.lambda_cc, 3 * s.kappa, 1e-15);
}

TEST(Solver, DeterministicAndThreadIndependent) {
  SolveOptions o;
  o.starts = 120;
  o.seed = 99;
  o.threads = 1;
  auto a = solve_family(Family::SO3, o);
  o.threads = 4;
  auto b = solve_family(Family::SO3, o);
  ASSERT_EQ(a.solutions.size(), b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) {
    EXPECT_EQ(a.solutions[i].params, b.solutions[i].params);
    EXPECT_EQ(a.solutions[i].kappa, b.solutions[i].kappa);
    EXPECT_EQ(a.solutions[i].hits, b.solutions[i].hits);
  }
  EXPECT_EQ(a.diagnostics.converged, b.diagnostics.converged);
  EXPECT_EQ(a.diagnostics.starts, 120);
}

TEST(Solver, DiagGlpThreeClasses) {
  SolveOptions o;
  o.starts = 200;
  auto r = solve_family(Family::DIAG_GLP, o);
  ASSERT_EQ(r.solutions.size(), 3u);
  int lorentz_like = 0;
  for (const auto& s : r.solutions)
    if (s.q == 2) {
      ++lorentz_like;
      EXPECT_EQ(s.stabilizer_dim, 0);
      EXPECT_NEAR(s.kappa, 0.196012971464, 1e-9);
    }
  EXPECT_EQ(lorentz_like, 1);
}

TEST(U1ISlice, ThreeClassesWithEtaNonNegative) {
  const auto& r = u1i_slice();
  ASSERT_EQ(r.solutions.size(), 3u);
  int riemannian = 0;
  for (const auto& s : r.solutions) {
    EXPECT_GE(param(s, "eta"), 0.0);
    EXPECT_NEAR(param(s, "zeta"), 0.0, 1e-9);
    EXPECT_EQ(param(s, "theta"), 0.0);
    EXPECT_LT(s.residual, 1e-9);
    if (s.q == 0) ++riemannian;
  }
  EXPECT_EQ(riemannian, 2);
}

TEST(U1ISlice, LorentzianClassValues) {
  const auto& s = lorentz();
  EXPECT_EQ(s.p, 7);
  EXPECT_NEAR(param(s, "epsilon"), -0.491148, 1e-5);
  EXPECT_NEAR(param(s, "gamma"), 0.233098, 1e-5);
  EXPECT_NEAR(param(s, "eta"), 0.110751, 1e-5);
  EXPECT_NEAR(param(s, "beta"), 1.41407, 1e-5);
  EXPECT_NEAR(s.kappa, 0.121788, 1e-5);
  EXPECT_NEAR(s.tau, 0.974303, 1e-5);
  EXPECT_EQ(s.stabilizer_dim, 1);
  const double ev[] = {8.17347, 8.17347, 2.90825, 2.90825, 1.0, 1.0, 0.707178, -2.03605};
  auto sig = signature(family_dual(Family::U1_I, s.params));
  for (int i = 0; i < N; ++i) EXPECT_NEAR(sig.eigenvalues[i], ev[i], 1e-4);
  auto cert = certify_lorentz(s);
  EXPECT_TRUE(cert.pass);
  EXPECT_EQ(cert.items.size(), 5u);
}

TEST(U1ISlice, GeodesicGenerators) {
  auto G = connection(build_metric(Family::U1_I, lorentz().params));
  EXPECT_LT(covariant_derivative(G, 7, 7).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT(covariant_derivative(G, 2, 2).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(U1ISlice, EtaSignFlipIsAlsoEinstein) {
  auto p = lorentz().params;
  p[param_index(Family::U1_I, "eta")] *= -1;
  EXPECT_LT(max_abs(einstein_residual(Family::U1_I, p, lorentz().kappa)), 1e-9);
}

TEST(U1ISlice, ScalingCovariance) {
  auto p = lorentz().params;
  for (double& v : p) v *= 2.5;
  EXPECT_LT(max_abs(einstein_residual(Family::U1_I, p, 2.5 * lorentz().kappa)), 1e-9);
  auto s = make_solution(Family::U1_I, p, 2.5 * lorentz().kappa);
  EXPECT_TRUE(same_key(s.key, lorentz().key));
}

TEST(U1ISlice, ThetaRotationStaysEinstein) {
  auto p = lorentz().params;
  Mat8 rot = ad_rotate(family_dual(Family::U1_I, p), 7, 0.3);
  auto q = family_params_of(Family::U1_I, rot);
  EXPECT_GT(std::abs(q[7]), 1e-3);
  EXPECT_LT(max_abs(einstein_residual(Family::U1_I, q, lorentz().kappa)), 1e-9);
  auto back = normalize_u1i(q);
  for (std::size_t k = 0; k < p.size(); ++k) EXPECT_NEAR(back[k], p[k], 1e-10);
}

TEST(U1ISlice, ScalarCurvatureClosedFormIsStationary) {
  for (const char* nm : {"beta", "gamma", "epsilon", "eta"}) {
    double u = param(lorentz(), nm);
    auto r = stationarity_scan(lorentz(), nm, u - 0.002, u + 0.002, 21);
    ASSERT_TRUE(r.zero_crossing.has_value()) << nm;
    EXPECT_NEAR(*r.zero_crossing, u, 1e-5) << nm;
    EXPECT_LT(std::abs(r.derivative_at_solution), 1e-6) << nm;
  }
}

TEST(Scan, WindowsAndErrors) {
  const auto& s = lorentz();
  auto b = stationarity_scan(s, "beta", 1.41, 1.42, 41);
  ASSERT_TRUE(b.zero_crossing);
  EXPECT_GT(*b.zero_crossing, 1.41);
  EXPECT_LT(*b.zero_crossing, 1.42);
  EXPECT_EQ(b.points.size(), 41u);
  try {
    stationarity_scan(s, "eta", 0.1, 0.3, 21);  // passes eta = gamma
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WINDOW_CROSSES_SINGULARITY);
  }
  EXPECT_THROW(stationarity_scan(s, "zeta", 0, 1, 10), Error);
  EXPECT_THROW(stationarity_scan(s, "beta", 1.42, 1.41, 10), Error);
}

TEST(Eta2Cubic, PositiveRootIsTheSolution) {
  const auto& s = lorentz();
  auto r = eta2_cubic(param(s, "gamma"), param(s, "epsilon"));
  ASSERT_TRUE(r.positive_root);
  EXPECT_NEAR(*r.positive_root, std::pow(param(s, "eta"), 2), 1e-9);
  auto c = eta2_cubic_coefficients(param(s, "gamma"), param(s, "epsilon"));
  double x = *r.positive_root;
  EXPECT_NEAR(((c[0] * x + c[1]) * x + c[2]) * x + c[3], 0.0, 1e-12);
}

TEST(Eta2Cubic, PatternFailureRaises) {
  // scan a grid for a (gamma, epsilon) whose cubic lacks the 2-negative/1-positive pattern
  bool found = false;
  for (double g = 0.1; g < 3 && !found; g += 0.1)
    for (double e = -3; e < 3 && !found; e += 0.1) {
      auto r = eta2_cubic_roots(g, e);
      if (r.n_real == 3 && r.n_positive == 1 && r.n_negative == 2) continue;
      found = true;
      try {
        eta2_cubic(g, e);
        ADD_FAILURE();
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::NO_POSITIVE_ROOT);
      }
    }
  EXPECT_TRUE(found);
}

TEST(Glp, CubicRootsGiveAnEinsteinMetric) {
  auto r = solve_glp();
  EXPECT_NEAR(r.x1, 0.121, 5e-4);
  EXPECT_NEAR(param(r.glp, "gamma"), -0.213, 5e-4);
  EXPECT_NEAR(r.glp.kappa, 0.196, 5e-4);
  EXPECT_NEAR(r.glp.tau, 1.568, 5e-4);
  EXPECT_LT(r.glp.residual, 1e-12);
  EXPECT_NEAR(r.glp.kappa, r.kappa_cubic, 1e-12);
  EXPECT_NEAR(r.glp.tau, r.tau_cubic, 1e-11);
  EXPECT_LT(r.x2_identity_error, 1e-12);
  EXPECT_NEAR(r.kappa_over_beta, r.kappa_over_beta_closed, 1e-10);
  EXPECT_EQ(r.glp.p, 6);
  EXPECT_EQ(r.glp.q, 2);
  EXPECT_EQ(r.glp.stabilizer_dim, 0);
  EXPECT_EQ(r.jensen.stabilizer_dim, 3);
  EXPECT_EQ(r.killing.stabilizer_dim, 8);
}

TEST(Fibered, MatchesSo3FamilyScalarCurvature) {
  for (double t : {0.3, 0.9, 1.7}) {
    double direct = scalar_curvature(build_metric(Family::SO3, {1.0, 1.0 / (t * t)}));
    EXPECT_NEAR(fibered_scalar_curvature(t, 8, 3, 5, 1.0 / 6), direct, 1e-12);
    EXPECT_NEAR(direct, -5 * t * t / 8 + 1 / (8 * t * t) + 2.5, 1e-12);
  }
  EXPECT_THROW(fibered_scalar_curvature(0.0, 8, 3, 5, 1.0 / 6), Error);
}

TEST(Fibered, StationaryPointsAreKillingAndJensen) {
  auto y = fibered_stationary_points(8, 3, 5, 1.0 / 6);
  ASSERT_EQ(y.size(), 2u);
  EXPECT_NEAR(y[0], 1.0 / 11, 1e-14);
  EXPECT_NEAR(y[1], 1.0, 1e-14);
  EXPECT_NEAR(symmetric_pair_stationary_point(3, 5), 1.0 / 11, 1e-15);
  // numerical derivative of the volume-normalised curvature vanishes there
  auto f = [](double t) { return std::pow(t * t, 3.0 / 8) * fibered_scalar_curvature(t, 8, 3, 5, 1.0 / 6); };
  for (double yy : y) {
    double t = std::sqrt(yy), h = 1e-6;
    EXPECT_NEAR((f(t + h) - f(t - h)) / (2 * h), 0.0, 1e-8);
  }
  // t^2 = 1/11 is the Jensen metric
  EXPECT_LT(max_abs(einstein_residual(Family::SO3, {1.0, 11.0}, 21.0 / 44)), 1e-14);
}

TEST(Fibered, GeneralSymmetricPair) {
  // any k, s with c = 1 - s/(2k): roots at 1 and (2k-s)/(2k+s)
  for (auto [k, s] : {std::pair{3, 5}, std::pair{4, 4}, std::pair{10, 6}}) {
    int n = k + s;
    double c = 1.0 - s / (2.0 * k);
    auto y = fibered_stationary_points(n, k, s, c);
    ASSERT_EQ(y.size(), 2u);
    EXPECT_NEAR(y[0], symmetric_pair_stationary_point(k, s), 1e-12);
    EXPECT_NEAR(y[1], 1.0, 1e-12);
  }
}

TEST(ModifiedJensen, CongruentToJensen) {
  const std::vector<double> mj = {1, 11, 6, 6, 1, 0, 5, 0};
  EXPECT_LT(max_abs(einstein_residual(Family::U1_I, mj, 21.0 / 44)), 1e-13);
  Eigen::SelfAdjointEigenSolver<Mat8> a(build_metric(Family::U1_I, mj).h_inv()), b(build_metric(Family::SO3, {1, 11}).h_inv());
  EXPECT_LT((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(scalar_curvature(build_metric(Family::U1_I, mj)), scalar_curvature(build_metric(Family::SO3, {1, 11})), 1e-12);
}
