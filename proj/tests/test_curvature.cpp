#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "liegeom/curvature.hpp"

using namespace liegeom;

namespace {

const double s3 = std::sqrt(3.0);

double uni(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double tensor_diff(const Tensor4& a, const Tensor4& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

InvariantMetric random_metric(std::mt19937_64& rng) {
  // generic symmetric, not necessarily definite
  Mat8 a;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = uni(rng, -0.3, 0.3);
  Mat8 h = Mat8::Identity() + 0.5 * (a + a.transpose());
  for (int i = 0; i < N; ++i) h(i, i) *= (i == 7 ? -1.0 : 1.0) * uni(rng, 0.5, 2.0);
  return InvariantMetric::from_dual(h);
}

}  // namespace

TEST(Riemann, PrintedFormulaMatchesKoszulConnection) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 4; ++rep) {
    auto g = random_metric(rng);
    Tensor4 a = riemann(g), b = riemann_from_connection(g);
    EXPECT_LT(tensor_diff(a, b), 1e-12 * std::max(1.0, a.max_abs()));
  }
}

TEST(Riemann, AlgebraicSymmetries) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 4; ++rep) {
    auto d = riemann_symmetry_defects(riemann(random_metric(rng)));
    EXPECT_LT(d.max(), 1e-12);
  }
}

TEST(Ricci, DirectFormulaEqualsContraction) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 4; ++rep) {
    auto g = random_metric(rng);
    Mat8 r1 = ricci(g), r2 = ricci_from_riemann(riemann(g), g.h_inv());
    EXPECT_LT((r1 - r2).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((r1 - r1.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(scalar_curvature(g), (g.h_inv() * r1).trace(), 1e-12);
    EXPECT_LT(unimodular_defect(g), 1e-13);
  }
}

TEST(Ricci, KillingMetric) {
  for (double al : {1.0, 2.5}) {
    auto g = build_metric(Family::SU3, {al});
    EXPECT_LT((ricci(g) - al / 4 * g.h()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(scalar_curvature(g), 2 * al, 1e-13);
  }
  EXPECT_NEAR(riemann(build_metric(Family::SU3, {1.0}))(0, 1, 0, 1), 1.0 / 12, 1e-15);
}

TEST(Ricci, ScaleInvariance) {
  std::mt19937_64 rng(24);
  auto g = random_metric(rng);
  auto g3 = InvariantMetric::from_dual(3.0 * g.h_inv());
  EXPECT_LT((ricci(g) - ricci(g3)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(scalar_curvature(g3), 3.0 * scalar_curvature(g), 1e-11);
}

TEST(Ricci, U2ClosedForm) {
  std::mt19937_64 rng(25);
  for (int rep = 0; rep < 10; ++rep) {
    double al = uni(rng, 0.3, 3), be = uni(rng, 0.3, 3) * (rep % 2 ? -1 : 1), ga = uni(rng, 0.3, 3);
    Mat8 r = ricci(build_metric(Family::U2, {al, be, ga}));
    Vec8 want;
    double r1 = (be * be / (al * al) + 2) / 12, r4 = (-be / al - be / ga + 4) / 8, r8 = be * be / (4 * ga * ga);
    want << r1, r1, r1, r4, r4, r4, r4, r8;
    EXPECT_LT((r - Mat8(want.asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Ricci, So3ClosedFormAndScalar) {
  std::mt19937_64 rng(26);
  for (int rep = 0; rep < 10; ++rep) {
    double al = uni(rng, 0.3, 3), be = uni(rng, 0.3, 3);
    auto g = build_metric(Family::SO3, {al, be});
    Mat8 r = ricci(g);
    double p = 0.5 - al / (4 * be), q = (5 * al * al / (be * be) + 1) / 24;
    Vec8 want;
    want << p, q, p, p, q, p, q, p;
    EXPECT_LT((r - Mat8(want.asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(scalar_curvature(g), (-5 * al * al + 20 * al * be + be * be) / (8 * be), 1e-12);
  }
}

TEST(Ricci, T2ClosedForm) {
  std::mt19937_64 rng(27);
  for (int rep = 0; rep < 10; ++rep) {
    double al = uni(rng, 0.5, 2), be = uni(rng, 0.5, 2), ga = uni(rng, 0.5, 2), de = uni(rng, 0.5, 2),
           ep = uni(rng, 0.5, 2), ze = uni(rng, -0.3, 0.3);
    Mat8 r = ricci(build_metric(Family::T2, {al, be, ga, de, ep, ze}));
    double D = ze * ze - be * ep, S = 4 * al * al + ga * ga + de * de, G = ga * ga + de * de;
    double r11 = (ga * de / (al * al) + 2 * al * ep / D - ga / de - de / ga + 6) / 12;
    double r33 = (ep * ep * S + 3 * ze * ze * G + 2 * s3 * ze * ep * (de * de - ga * ga)) / (24 * D * D);
    double r44 = (2 * al * de / (ga * ga) - 2 * al / de - 2 * de / al + ga * (3 * be - 2 * s3 * ze + ep) / D + 12) / 24;
    double r88 = (ze * ze * S + 3 * be * be * G + 2 * s3 * be * ze * (de * de - ga * ga)) / (24 * D * D);
    double r38 = (-ze * ep * S + be * ga * ga * (s3 * ep - 3 * ze) - be * de * de * (3 * ze + s3 * ep) +
                  s3 * ze * ze * (ga - de) * (ga + de)) /
                 (24 * D * D);
    EXPECT_NEAR(r(0, 0), r11, 1e-12);
    EXPECT_NEAR(r(1, 1), r11, 1e-12);
    EXPECT_NEAR(r(2, 2), r33, 1e-12);
    EXPECT_NEAR(r(7, 7), r88, 1e-12);
    EXPECT_NEAR(r(2, 7), r38, 1e-12);
    EXPECT_NEAR(r(3, 3), r44, 1e-12);
    EXPECT_NEAR(r(4, 4), r44, 1e-12);
  }
}

TEST(Ricci, U1ISubfamilyClosedForm) {
  std::mt19937_64 rng(28);
  for (int rep = 0; rep < 10; ++rep) {
    double al = uni(rng, 0.5, 2), be = uni(rng, 0.5, 2), ga = uni(rng, 0.5, 2), ep = uni(rng, -2, 2),
           et = uni(rng, -0.4, 0.4);
    if (std::abs(ep) < 0.2) ep = 0.7;
    auto g = build_metric(Family::U1_I, {al, be, ga, ga, ep, 0.0, et, 0.0});
    Mat8 r = ricci(g);
    double g2 = ga * ga, e2 = et * et, D2 = (g2 - e2) * (g2 - e2);
    double r11 = ((ga - et) * (ga + et) / (al * al) - 2 * al / be + 4 * g2 / (e2 - g2) + 8) / 12;
    double r33 = (2 * al * al + g2 + e2) / (12 * be * be);
    double r44 = (ga * (8 * al * e2 / D2 - 2 / al - 1 / be + 12 * e2 * ep / D2 - 3 / ep) + 12) / 24;
    double r47 = et * (-4 * g2 * (2 * al + 3 * ep) / D2 + 2 / al - 1 / be + 3 / ep) / 24;
    double r88 = (-2 * e2 * (g2 + 2 * ep * ep) + g2 * g2 + e2 * e2) / (4 * ep * ep * (ga - et) * (ga + et));
    EXPECT_NEAR(r(0, 0), r11, 1e-11);
    EXPECT_NEAR(r(1, 1), r11, 1e-11);
    EXPECT_NEAR(r(2, 2), r33, 1e-11);
    for (int i = 3; i < 7; ++i) EXPECT_NEAR(r(i, i), r44, 1e-11);
    EXPECT_NEAR(r(3, 6), r47, 1e-11);
    EXPECT_NEAR(r(4, 5), r47, 1e-11);
    EXPECT_NEAR(r(7, 7), r88, 1e-11);
    EXPECT_NEAR(r(2, 7), 0.0, 1e-12);

    double tau = (8 * al * al * be * ep * (g2 - 2 * e2) + 2 * al * al * al * ep * (e2 - g2) +
                  al * (6 * be * e2 * (g2 - 4 * ga * ep - 2 * ep * ep) - ga * ga * ga * (3 * be * (ga - 8 * ep) + ga * ep) +
                        e2 * e2 * (ep - 3 * be)) -
                  2 * be * ep * (g2 - e2) * (g2 - e2)) /
                 (12 * al * be * ep * (ga - et) * (ga + et));
    EXPECT_NEAR(scalar_curvature(g), tau, 1e-10);
    double det = al * al * be * ep * (-2 * g2 * e2 + g2 * g2 + e2 * e2);
    EXPECT_NEAR(g.h_inv().determinant(), det, 1e-12 * std::max(1.0, std::abs(det)));
  }
}

TEST(Ricci, DiagGlpClosedForm) {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 10; ++rep) {
    double al = uni(rng, 0.3, 3), be = uni(rng, 0.3, 3), ga = uni(rng, 0.3, 3) * (rep % 2 ? -1 : 1);
    Mat8 r = ricci(build_metric(Family::DIAG_GLP, {al, be, ga}));
    double r1 = (2 * be * ga / (al * al) - al / be - 2 * ga / be - 2 * be / ga + 6) / 12;
    double r2 = (al * al / (be * be) + 4 * al * ga / (be * be) - 4 * al / ga - 4 * ga / al + 9) / 24;
    double r3 = (al * be / (ga * ga) - al / be - be / al + 2) / 4;
    Vec8 want;
    want << r1, r2, r3, r1, r2, r1, r2, r3;
    EXPECT_LT((r - Mat8(want.asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Principal, U2AndSo3ClosedForms) {
  const double al = 1.3, be = 0.6, ga = 2.2;
  auto p = ricci_principal(build_metric(Family::U2, {al, be, ga}));
  std::vector<double> want = {be * be / (12 * al) + al / 6, be * be / (12 * al) + al / 6, be * be / (12 * al) + al / 6};
  for (int i = 0; i < 4; ++i) want.push_back(-be * be / (8 * al) - be * be / (8 * ga) + be / 2);
  want.push_back(be * be / (4 * ga));
  std::sort(want.begin(), want.end());
  EXPECT_LT(p.max_imag, 1e-12);
  for (int i = 0; i < N; ++i) EXPECT_NEAR(p.values[i], want[i], 1e-12);

  const double a = 1.0, b = 11.0;
  auto q = ricci_principal(build_metric(Family::SO3, {a, b}));
  for (double v : q.values) EXPECT_NEAR(v, 21.0 / 44, 1e-12);
  auto q2 = ricci_principal(build_metric(Family::SO3, {0.8, 1.7}));
  std::vector<double> w2(5, -0.8 * (0.8 - 2 * 1.7) / (4 * 1.7));
  for (int i = 0; i < 3; ++i) w2.push_back((5 * 0.64 + 1.7 * 1.7) / (24 * 1.7));
  std::sort(w2.begin(), w2.end());
  for (int i = 0; i < N; ++i) EXPECT_NEAR(q2.values[i], w2[i], 1e-12);
}

TEST(Principal, SumIsScalarCurvature) {
  std::mt19937_64 rng(30);
  auto g = random_metric(rng);
  auto p = ricci_principal(g);
  double s = 0;
  for (double v : p.values) s += v;
  if (p.max_imag < 1e-12) EXPECT_NEAR(s, scalar_curvature(g), 1e-11);
}

TEST(Sectional, KillingValuesAndSymmetry) {
  auto t = sectional_table(build_metric(Family::SU3, {1.0}));
  EXPECT_NEAR(*t(0, 1), 1.0 / 12, 1e-15);
  EXPECT_NEAR(*t(0, 3), 1.0 / 48, 1e-15);
  EXPECT_NEAR(*t(3, 7), 1.0 / 16, 1e-15);
  EXPECT_NEAR(*t(0, 7), 0.0, 1e-15);
  EXPECT_EQ(t(2, 5), t(5, 2));
  EXPECT_FALSE(t(3, 3).has_value());
}

TEST(Sectional, NullPlaneIsUndefined) {
  // h restricted to span(X4, X7) is degenerate while h itself is not
  Mat8 h = Mat8::Identity();
  h(3, 6) = h(6, 3) = 1.0;
  h(6, 4) = h(4, 6) = 1.0;
  h(4, 4) = 0.0;
  h = h.inverse().eval();
  auto t = sectional_table(InvariantMetric::from_dual(h));
  EXPECT_FALSE(t(3, 6).has_value());
  EXPECT_TRUE(t(0, 1).has_value());
}

TEST(Decomposition, KillingNorms) {
  for (double al : {1.0, 2.0}) {
    auto r = ricci_decomposition(build_metric(Family::SU3, {al}));
    EXPECT_NEAR(r.norm_R, al * al / 2, 1e-13);
    EXPECT_NEAR(r.norm_weyl, 5 * al * al / 14, 1e-13);
    EXPECT_NEAR(r.norm_traceless, 0.0, 1e-13);
    EXPECT_NEAR(r.norm_scalar, al * al / 7, 1e-13);
  }
}

TEST(Decomposition, U2NormsClosedForm) {
  const double a = 1.3, b = 0.6, c = 2.2;
  auto r = ricci_decomposition(build_metric(Family::U2, {a, b, c}));
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  double R = (8 * a2 * a2 * c2 + a2 * b2 * (51 * b2 - 144 * b * c + 176 * c2) + 6 * a * b2 * b * c * (5 * b - 16 * c) +
              23 * b2 * b2 * c2) /
             (96 * a2 * c2);
  double W = (80 * a2 * a2 * c2 - 24 * a2 * a * b * c * (b - 8 * c) + a2 * b2 * (909 * b2 - 2448 * b * c + 2600 * c2) +
              6 * a * b2 * b * c * (79 * b - 240 * c) + 377 * b2 * b2 * c2) /
             (2016 * a2 * c2);
  double T = (20 * a2 * a2 * c2 + 12 * a2 * a * b * c * (b - 8 * c) + a2 * b2 * (45 * b2 - 144 * b * c + 236 * c2) +
              6 * a * b2 * b * c * (7 * b - 24 * c) + 29 * b2 * b2 * c2) /
             (576 * a2 * c2);
  double tau4 = -b2 / a + 2 * a + b * (8 - b / c);
  double S = tau4 * tau4 / 448;
  EXPECT_NEAR(r.norm_R, R, 1e-12);
  EXPECT_NEAR(r.norm_weyl, W, 1e-12);
  EXPECT_NEAR(r.norm_traceless, T, 1e-12);
  EXPECT_NEAR(r.norm_scalar, S, 1e-12);
  EXPECT_NEAR(yamabe_shift(build_metric(Family::U2, {a, b, c})), -3.0 / 14 * tau4 / 4, 1e-13);
}

TEST(Decomposition, So3NormsClosedForm) {
  for (auto [a, b] : {std::pair{1.0, 11.0}, std::pair{0.7, 1.9}}) {
    auto r = ricci_decomposition(build_metric(Family::SO3, {a, b}));
    double a2 = a * a, b2 = b * b;
    EXPECT_NEAR(r.norm_R, (295 * a2 * a2 - 660 * a2 * a * b + 460 * a2 * b2 + b2 * b2) / (192 * b2), 1e-11);
    EXPECT_NEAR(r.norm_weyl,
                5 * (508 * a2 * a2 - 1110 * a2 * a * b + 733 * a2 * b2 + 12 * a * b2 * b + b2 * b2) / (2016 * b2), 1e-11);
    double t = 11 * a2 - 12 * a * b + b2, s = -5 * a2 + 20 * a * b + b2;
    EXPECT_NEAR(r.norm_traceless, 5 * t * t / (2304 * b2), 1e-11);
    EXPECT_NEAR(r.norm_scalar, s * s / (1792 * b2), 1e-11);
  }
}

TEST(Decomposition, PartsAreOrthogonalAndWeylIsTraceless) {
  std::mt19937_64 rng(31);
  auto g = random_metric(rng);
  auto r = ricci_decomposition(g);
  EXPECT_NEAR(r.norm_R, r.norm_weyl + r.norm_traceless + r.norm_scalar, 1e-10 * std::max(1.0, std::abs(r.norm_R)));
  EXPECT_LT(ricci_from_riemann(r.weyl, g.h_inv()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(riemann_symmetry_defects(r.weyl).max(), 1e-12);
}
