#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "curvature.hpp"
#include "error.hpp"
#include "metric.hpp"
#include "polynomial.hpp"

namespace liegeom {

// ---- residual ----------------------------------------------------------------

/// rho_ij - kappa h_ij at one pattern position per family parameter.
inline std::vector<double> einstein_residual(Family f, const std::vector<double>& params, double kappa) {
  InvariantMetric g = build_metric(f, params);
  Mat8 rho = ricci(g);
  const FamilyInfo& info = family_info(f);
  std::vector<double> r;
  for (const auto& occ : info.pattern) {
    const PatternEntry& e = occ.front();
    r.push_back(rho(e.i, e.j) - kappa * g.h()(e.i, e.j));
  }
  return r;
}

// ---- solutions -------------------------------------------------------------------

struct CertificateItem {
  std::string id;  // polynomial id: epsilon, gamma, beta, kappa, eta2
  RootCertificate root;
};

struct CertificateReport {
  std::vector<CertificateItem> items;
  double beta_closed_form_error = 0;
  double kappa_closed_form_error = 0;
  bool pass = false;
};

struct EinsteinSolution {
  Family family = Family::SU3;
  std::vector<double> params;
  double kappa = 0;
  double lambda_cc = 0;
  double tau = 0;
  int p = 0, q = 0;
  int stabilizer_dim = 0;
  double residual = 0;
  int hits = 0;  // starts that landed in this class
  std::vector<double> key;
  std::optional<CertificateReport> certificate;
};

struct SolveOptions {
  int starts = 200;
  std::uint64_t seed = 7;
  std::vector<std::string> constraints;  // "gamma=delta", "zeta=0"
  bool normalize = true;                 // theta=0 (U1_I), diagonal k-block (U1_Y)
  int threads = 0;                       // 0: LIEGEOM_THREADS or hardware
  int max_iter = 200;
};

struct SolveDiagnostics {
  int starts = 0;
  int converged = 0;
  int no_convergence = 0;
  int rejected = 0;  // converged but failed the full Einstein check
};

struct SolveResult {
  std::vector<EinsteinSolution> solutions;
  SolveDiagnostics diagnostics;
};

namespace detail {

/// How each family parameter is determined during a solve.
struct Parametrization {
  Family family;
  std::vector<int> free;              // indices of free params
  std::vector<double> fixed_value;    // NaN when not fixed
  std::vector<int> tie;               // -1 or index of the param it copies

  std::vector<double> expand(const double* z) const {
    std::size_t n = fixed_value.size();
    std::vector<double> p(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      if (!std::isnan(fixed_value[k])) p[k] = fixed_value[k];
    for (std::size_t j = 0; j < free.size(); ++j) p[free[j]] = z[j];
    for (std::size_t k = 0; k < n; ++k)
      if (tie[k] >= 0) p[k] = p[tie[k]];
    return p;
  }
};

inline bool is_number(const std::string& s) {
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return !s.empty() && end == s.c_str() + s.size();
}

inline Parametrization make_parametrization(Family f, const SolveOptions& opt) {
  const FamilyInfo& info = family_info(f);
  std::size_t n = info.params.size();
  Parametrization P{f, {}, std::vector<double>(n, std::nan("")), std::vector<int>(n, -1)};
  P.fixed_value[param_index(f, "alpha")] = 1.0;
  if (opt.normalize && f == Family::U1_I) P.fixed_value[param_index(f, "theta")] = 0.0;
  if (opt.normalize && f == Family::U1_Y)
    for (const char* k : {"k12", "k13", "k23"}) P.fixed_value[param_index(f, k)] = 0.0;
  for (const std::string& c : opt.constraints) {
    auto eq = c.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BAD_INPUT, "constraint '" + c + "' is not lhs=rhs");
    std::string lhs = c.substr(0, eq), rhs = c.substr(eq + 1);
    if (is_number(rhs)) {
      int k = param_index(f, lhs);
      P.fixed_value[k] = std::stod(rhs);
      P.tie[k] = -1;
    } else {
      int a = param_index(f, lhs), b = param_index(f, rhs);
      if (a == b) continue;
      // the later parameter copies the earlier one
      if (a > b) std::swap(a, b);
      P.tie[b] = a;
      P.fixed_value[b] = std::nan("");
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (std::isnan(P.fixed_value[k]) && P.tie[k] < 0) P.free.push_back(static_cast<int>(k));
  // resolve chains of ties
  for (std::size_t k = 0; k < n; ++k)
    while (P.tie[k] >= 0 && P.tie[P.tie[k]] >= 0) P.tie[k] = P.tie[P.tie[k]];
  return P;
}

struct ResidualEval {
  bool ok = false;
  Eigen::VectorXd r;
};

inline ResidualEval residual_at(const Parametrization& P, const Eigen::VectorXd& z) {
  ResidualEval out;
  int nf = static_cast<int>(P.free.size());
  std::vector<double> p = P.expand(z.data());
  double kappa = z(nf);
  Mat8 hinv = family_dual(P.family, p);
  if (!(std::abs(hinv.determinant()) > 1e-12) || !hinv.allFinite()) return out;
  InvariantMetric g = InvariantMetric::from_dual(hinv);
  if (!g.h().allFinite() || g.h().cwiseAbs().maxCoeff() > 1e12) return out;
  Mat8 rho = ricci(g);
  const FamilyInfo& info = family_info(P.family);
  out.r.resize(static_cast<Eigen::Index>(info.pattern.size()));
  for (std::size_t k = 0; k < info.pattern.size(); ++k) {
    const PatternEntry& e = info.pattern[k].front();
    out.r(static_cast<Eigen::Index>(k)) = rho(e.i, e.j) - kappa * g.h()(e.i, e.j);
  }
  out.ok = out.r.allFinite();
  return out;
}

/// Damped Gauss-Newton on the pattern residual. z = (free params, kappa).
/// Once ||r|| < 1e-12 the iteration continues while ||r|| still drops, which
/// matters at degenerate roots (bi-invariant points) where Newton is linear.
inline std::optional<Eigen::VectorXd> newton(const Parametrization& P, Eigen::VectorXd z, int max_iter) {
  int nf = static_cast<int>(P.free.size());
  ResidualEval cur = residual_at(P, z);
  if (!cur.ok) return std::nullopt;
  std::vector<double> history;
  int polish = 0;
  for (int it = 0; it < max_iter; ++it) {
    double rn = cur.r.lpNorm<Eigen::Infinity>();
    history.push_back(rn);
    if (rn < 1e-12 && ++polish > 40) return z;
    // stalled: no factor-2 progress over the last 25 iterations
    if (rn >= 1e-12 && history.size() > 25 && rn > 0.5 * history[history.size() - 26]) return std::nullopt;
    Eigen::MatrixXd J(cur.r.size(), nf + 1);
    for (int j = 0; j < nf; ++j) {
      double step = 1e-6 * std::max(1.0, std::abs(z(j)));
      Eigen::VectorXd zp = z, zm = z;
      zp(j) += step;
      zm(j) -= step;
      ResidualEval a = residual_at(P, zp), b = residual_at(P, zm);
      if (!a.ok || !b.ok) return rn < 1e-12 ? std::optional(z) : std::nullopt;
      J.col(j) = (a.r - b.r) / (2.0 * step);
    }
    {
      // kappa enters linearly: d r / d kappa = -h at the pattern positions
      Eigen::VectorXd zk = z;
      zk(nf) += 1.0;
      ResidualEval a = residual_at(P, zk);
      if (!a.ok) return std::nullopt;
      J.col(nf) = a.r - cur.r;
    }
    Eigen::VectorXd dz = J.completeOrthogonalDecomposition().solve(-cur.r);
    if (!dz.allFinite()) return rn < 1e-12 ? std::optional(z) : std::nullopt;
    double f0 = cur.r.squaredNorm();
    double lam = 1.0;
    bool accepted = false;
    while (lam > 1e-10) {
      Eigen::VectorXd zn = z + lam * dz;
      ResidualEval trial = residual_at(P, zn);
      if (trial.ok && trial.r.squaredNorm() < f0) {
        z = zn;
        cur = std::move(trial);
        accepted = true;
        break;
      }
      lam *= 0.5;
      if (rn < 1e-12 && lam < 1e-3) break;
    }
    if (!accepted) return rn < 1e-12 ? std::optional(z) : std::nullopt;
    if (z.cwiseAbs().maxCoeff() > 1e8) return std::nullopt;
  }
  if (cur.r.lpNorm<Eigen::Infinity>() < 1e-12) return z;
  return std::nullopt;
}

inline int thread_count(int requested, int work) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LIEGEOM_THREADS")) {
      int cap = std::atoi(env);
      if (cap > 0) n = std::min(n > 0 ? n : cap, cap);
    }
  }
  return std::max(1, std::min(n, work));
}

/// Runs body(i) for i in [0,count) on up to `threads` workers.
template <class F>
void parallel_for(int count, int threads, F&& body) {
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Isometry- and scale-invariant fingerprint: kappa times the sorted
/// eigenvalues of h (or the eigenvalues normalised by the largest when kappa ~ 0).
inline std::vector<double> solution_key(const Mat8& h_inv, double kappa) {
  Eigen::SelfAdjointEigenSolver<Mat8> es(h_inv);
  std::vector<double> k;
  for (int i = 0; i < N; ++i) k.push_back(1.0 / es.eigenvalues()(i));
  double scale = kappa;
  if (std::abs(kappa) < 1e-9) {
    scale = 0;
    for (double v : k) scale = std::max(scale, std::abs(v));
    scale = 1.0 / scale;
  }
  for (double& v : k) v *= scale;
  std::sort(k.begin(), k.end());
  return k;
}

inline bool same_key(const std::vector<double>& a, const std::vector<double>& b, double tol = 1e-6) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol * std::max(1.0, std::abs(a[i]))) return false;
  return true;
}

/// Classifies a parameter point that satisfies rho = kappa h.
inline EinsteinSolution make_solution(Family f, std::vector<double> params, double kappa) {
  InvariantMetric g = build_metric(f, params);
  EinsteinSolution s;
  s.family = f;
  MetricSymbols sym(g);
  Mat8 rho = ricci(sym);
  s.tau = scalar_curvature(sym);
  s.kappa = kappa;
  s.lambda_cc = 3.0 * kappa;
  s.residual = (rho - kappa * g.h()).cwiseAbs().maxCoeff();
  Signature sig = signature(g.h_inv());
  s.p = sig.p;
  s.q = sig.q;
  s.stabilizer_dim = stabilizer(g.h_inv(), 1e-6).dimension;  // solver accuracy near degenerate roots
  s.key = solution_key(g.h_inv(), kappa);
  s.params = std::move(params);
  return s;
}

/// Newton polish of a single parameter point (all family params, kappa guess).
inline std::optional<EinsteinSolution> refine_einstein(Family f, const std::vector<double>& params, double kappa_guess,
                                                       const SolveOptions& opt = {}) {
  detail::Parametrization P = detail::make_parametrization(f, opt);
  Eigen::VectorXd z(static_cast<Eigen::Index>(P.free.size() + 1));
  for (std::size_t j = 0; j < P.free.size(); ++j) z(static_cast<Eigen::Index>(j)) = params[P.free[j]];
  z(static_cast<Eigen::Index>(P.free.size())) = kappa_guess;
  auto r = detail::newton(P, z, opt.max_iter);
  if (!r) return std::nullopt;
  std::vector<double> p = P.expand(r->data());
  return make_solution(f, p, (*r)(static_cast<Eigen::Index>(P.free.size())));
}

namespace detail {

inline void canonicalize(EinsteinSolution& s) {
  if (s.family == Family::U1_I) {
    int e = param_index(Family::U1_I, "eta");
    if (s.params[e] < 0) s.params[e] = -s.params[e];  // eta -> -eta is again Einstein
  }
}

}  // namespace detail

inline SolveResult solve_family(Family f, const SolveOptions& opt = {}) {
  detail::Parametrization P = detail::make_parametrization(f, opt);
  const int nf = static_cast<int>(P.free.size());
  SolveResult out;
  out.diagnostics.starts = opt.starts;

  struct Outcome {
    int status = 0;  // 0 no convergence, 1 ok, 2 rejected
    EinsteinSolution sol;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(std::max(0, opt.starts)));

  detail::parallel_for(opt.starts, detail::thread_count(opt.threads, opt.starts), [&](int i) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed & 0xffffffffu), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> logmag(std::log(1e-2), std::log(1e2));
    std::bernoulli_distribution sign(0.5);
    Eigen::VectorXd z(nf + 1);
    for (int j = 0; j < nf; ++j) z(j) = (sign(rng) ? -1.0 : 1.0) * std::exp(logmag(rng));
    // kappa start: least squares fit of rho ~ kappa h at the pattern positions
    z(nf) = 0.0;
    detail::ResidualEval r0 = detail::residual_at(P, z);
    Outcome& o = outcomes[static_cast<std::size_t>(i)];
    if (!r0.ok) return;
    {
      Eigen::VectorXd zk = z;
      zk(nf) = 1.0;
      detail::ResidualEval r1 = detail::residual_at(P, zk);
      Eigen::VectorXd hcol = r0.r - r1.r;  // = h at pattern positions
      double hh = hcol.squaredNorm();
      z(nf) = hh > 0 ? hcol.dot(r0.r) / hh : 0.0;
    }
    auto sol = detail::newton(P, z, opt.max_iter);
    if (!sol) return;
    try {
      EinsteinSolution s = make_solution(f, P.expand(sol->data()), (*sol)(nf));
      bool good = s.residual < 1e-9 && std::abs(s.tau - 8.0 * s.kappa) < 1e-8 * std::max(1.0, std::abs(s.tau));
      o.status = good ? 1 : 2;
      if (good) {
        detail::canonicalize(s);
        o.sol = std::move(s);
      }
    } catch (const Error&) {
      o.status = 2;
    }
  });

  for (auto& o : outcomes) {
    if (o.status == 0) {
      ++out.diagnostics.no_convergence;
      continue;
    }
    if (o.status == 2) {
      ++out.diagnostics.rejected;
      continue;
    }
    ++out.diagnostics.converged;
    bool merged = false;
    for (auto& c : out.solutions)
      if (same_key(c.key, o.sol.key)) {
        ++c.hits;
        merged = true;
        break;
      }
    if (!merged) {
      o.sol.hits = 1;
      out.solutions.push_back(std::move(o.sol));
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
    if (a.q != b.q) return a.q < b.q;
    return std::lexicographical_compare(a.key.begin(), a.key.end(), b.key.begin(), b.key.end());
  });
  return out;
}

// ---- Lorentzian U1_I solution ------------------------------------------------------

/// Integer polynomials whose unique real roots are the Lorentz parameters
/// (alpha = 1), highest degree first.
struct LorentzPolynomials {
  IntPoly epsilon, gamma, beta, kappa, eta2;
};

inline LorentzPolynomials lorentz_polynomials() {
  LorentzPolynomials L;
  L.epsilon = IntPoly::from_strings(
      {"157464000", "403632720", "-612290016", "-1011752856", "2420977896", "-160395147", "8214701211", "22205850480",
       "25959494541", "13520748157", "6727192848", "3545761995", "-307092303", "775200861", "1476112248", "416419380"});
  L.gamma = IntPoly::from_strings({"1203125", "-5947500", "27668175", "-91826280", "247552546", "-578539560",
                                   "1139842990", "-1943457696", "2859080697", "-3567181452", "3705721907",
                                   "-3090965208", "1958091648", "-862410240", "238768128", "-26542080"});
  L.beta = IntPoly::from_strings({"420959000000", "-1864887536000", "3473091156700", "-3742325355930", "2779023618983",
                                  "-1598512715722", "738336195619", "-286057154856", "100590932418", "-32232937198",
                                  "8922748831", "-2060272970", "375594480", "-51335104", "4940624", "-297440"});
  L.kappa = IntPoly::from_strings(
      {"75874469299200000000", "-194337331275110400000", "301355277599416320000", "-332561544757530624000",
       "282171231781966252800", "-191136024361902738240", "105464748331948650048", "-47804548501070787024",
       "17858543123347792128", "-5477519217851980920", "1363429678619072700", "-269374969407033333",
       "40612859877938577", "-4362120554579953", "293255347774576", "-9061971967716"});
  L.eta2 = IntPoly::from_strings({"7237548828125", "70864769531250", "314655757840625", "889027170133500",
                                  "1845686712291930", "2969194934204748", "6007481883873834", "14368049748482976",
                                  "23991657392689833", "23305737247777970", "9939040159739877", "-2269867978871308",
                                  "-3190456836365280", "2429318649600", "508754442240000", "-6234734592000"});
  return L;
}

/// beta and kappa of the gamma = delta slice as functions of (gamma, eta).
inline double lorentz_beta(double g, double e) {
  double g2 = g * g, e2 = e * e;
  double den = -2.0 * (g2 + 4.0) * e2 + g2 * (g2 + 4.0) + e2 * e2;
  return (g - e) * (g + e) * (g2 + e2 + 4.0) / den;
}

inline double lorentz_kappa(double g, double e) {
  double g2 = g * g, e2 = e * e;
  double den = -2.0 * (g2 + 4.0) * e2 + g2 * (g2 + 4.0) + e2 * e2;
  return (g2 + e2 + 2.0) * den / (12.0 * (g - e) * (g + e) * (g2 + e2 + 4.0));
}

struct CubicRoots {
  std::vector<std::complex<double>> roots;
  int n_real = 0, n_positive = 0, n_negative = 0;
  std::optional<double> positive_root;
};

/// Cubic in x = eta^2 at fixed (gamma, epsilon); coefficients highest first.
inline std::array<double, 4> eta2_cubic_coefficients(double g, double e) {
  double g2 = g * g, g3 = g2 * g, g4 = g3 * g, g5 = g4 * g, g6 = g5 * g, g7 = g6 * g, e2 = e * e;
  double c3 = 3 * g * e + 3 * g - 12 * e;
  double c2 = -g3 * e + 12 * g2 * e - 3 * g3 - 12 * g * e2 - 4 * g * e + 12 * g - 48 * e;
  double c1 = -12 * g3 * e2 - 7 * g5 * e + 12 * g4 * e - 52 * g3 * e + 96 * g2 * e - 3 * g5 - 24 * g3 - 48 * g * e2 -
              64 * g * e;
  double c0 = 5 * g7 * e - 12 * g6 * e + 24 * g5 * e - 48 * g4 * e + 16 * g3 * e + 3 * g7 + 12 * g5;
  return {c3, c2, c1, c0};
}

inline CubicRoots eta2_cubic_roots(double gamma, double epsilon) {
  auto c = eta2_cubic_coefficients(gamma, epsilon);
  std::vector<double> cv(c.begin(), c.end());
  CubicRoots out;
  out.roots = poly_roots(cv);
  for (double r : real_roots(cv)) {
    ++out.n_real;
    if (r > 0) {
      ++out.n_positive;
      out.positive_root = r;
    } else if (r < 0) {
      ++out.n_negative;
    }
  }
  if (out.n_positive != 1) out.positive_root.reset();
  return out;
}

/// Strict version: three real roots, two negative and one positive.
inline CubicRoots eta2_cubic(double gamma, double epsilon) {
  CubicRoots r = eta2_cubic_roots(gamma, epsilon);
  if (r.n_real != 3 || r.n_positive != 1 || r.n_negative != 2)
    throw Error(ErrorCode::NO_POSITIVE_ROOT, "eta^2 cubic does not have the (2 negative, 1 positive) root pattern");
  return r;
}

/// Certifies a U1_I Lorentz solution (alpha = 1, gamma = delta, theta = zeta = 0).
inline CertificateReport certify_lorentz(const EinsteinSolution& s,
                                         const LorentzPolynomials& L = lorentz_polynomials()) {
  if (s.family != Family::U1_I) throw Error(ErrorCode::BAD_INPUT, "certify_lorentz needs a U1_I solution");
  auto P = [&](const char* n) { return s.params[param_index(Family::U1_I, n)]; };
  double eps = P("epsilon"), gam = P("gamma"), eta = P("eta"), beta = P("beta");
  CertificateReport rep;
  rep.items.push_back({"epsilon", certify_root(L.epsilon, eps)});
  rep.items.push_back({"gamma", certify_root(L.gamma, gam)});
  rep.items.push_back({"beta", certify_root(L.beta, beta)});
  rep.items.push_back({"kappa", certify_root(L.kappa, s.kappa)});
  rep.items.push_back({"eta2", certify_root(L.eta2, eta * eta)});
  rep.beta_closed_form_error = std::abs(lorentz_beta(gam, eta) - beta);
  rep.kappa_closed_form_error = std::abs(lorentz_kappa(gam, eta) - s.kappa);
  rep.pass = rep.beta_closed_form_error < 1e-9 && rep.kappa_closed_form_error < 1e-9;
  for (const auto& it : rep.items) rep.pass = rep.pass && it.root.pass;
  return rep;
}

/// Lorentzian class of the U1_I gamma = delta slice found by multistart.
inline std::optional<EinsteinSolution> find_lorentz(int starts = 400, std::uint64_t seed = 7) {
  SolveOptions o;
  o.starts = starts;
  o.seed = seed;
  o.constraints = {"gamma=delta"};
  for (auto& s : solve_family(Family::U1_I, o).solutions)
    if (s.p == 7 && s.q == 1) return s;
  return std::nullopt;
}

// ---- trivial-K diagonal ansatz ------------------------------------------------------

struct GlpReport {
  EinsteinSolution killing, jensen, glp;
  double x1 = 0, x2 = 0;
  double x2_identity_error = 0;
  double kappa_over_beta = 0, kappa_over_beta_closed = 0;
  double kappa_cubic = 0, tau_cubic = 0;  // from the cubic root data
};

inline GlpReport solve_glp() {
  GlpReport r;
  double beta = smallest_real_root({85, -29, 27, -3});
  double gamma = smallest_real_root({768, 128, 204, 45});
  r.kappa_cubic = smallest_real_root({14400, -5520, 1044, -101});
  r.tau_cubic = smallest_real_root({225, -690, 1044, -808});
  auto kappa_of = [](const std::vector<double>& p) {
    InvariantMetric g = build_metric(Family::DIAG_GLP, p);
    return scalar_curvature(g) / 8.0;
  };
  r.killing = make_solution(Family::DIAG_GLP, {1, 1, 1}, 0.25);
  r.jensen = make_solution(Family::DIAG_GLP, {1, 11, 1}, 21.0 / 44.0);
  std::vector<double> p{1.0, beta, gamma};
  r.glp = make_solution(Family::DIAG_GLP, p, kappa_of(p));
  r.x1 = beta;
  r.x2 = beta / gamma;
  r.x2_identity_error = std::abs(r.x2 + (1 - r.x1) * (1 - 5 * r.x1) / (5 * r.x1));
  r.kappa_over_beta = r.glp.kappa / beta;
  r.kappa_over_beta_closed = (1 - r.x1) * (10 * r.x1 - 1) / (20 * (1 - 5 * r.x1) * r.x1 * r.x1);
  return r;
}

// ---- fixed-volume stationarity -----------------------------------------------------

struct ScanPoint {
  double u, derivative;
};

struct ScanResult {
  std::string param;
  double lo = 0, hi = 0;
  std::vector<ScanPoint> points;
  std::optional<double> zero_crossing;  // linear interpolation at the first sign change
  double derivative_at_solution = 0;
};

/// Subfamily (alpha, beta, gamma, epsilon, eta) -> U1_I with delta = gamma, zeta = theta = 0.
inline std::vector<double> u1i_subfamily(double alpha, double beta, double gamma, double epsilon, double eta) {
  return {alpha, beta, gamma, gamma, epsilon, 0.0, eta, 0.0};
}

/// tau / (-det h_inv)^{1/8} on the gamma = delta slice.
inline double normalized_scalar(const std::vector<double>& p) {
  InvariantMetric g = build_metric(Family::U1_I, p);
  double d = g.h_inv().determinant();
  return scalar_curvature(g) / std::pow(-d, 1.0 / 8.0);
}

inline ScanResult stationarity_scan(const EinsteinSolution& s, const std::string& param, double lo, double hi,
                                    int n) {
  if (s.family != Family::U1_I) throw Error(ErrorCode::BAD_INPUT, "stationarity scan is defined on U1_I");
  if (!(hi > lo) || n < 2) throw Error(ErrorCode::BAD_INPUT, "scan window must satisfy lo < hi and points >= 2");
  const char* names[] = {"alpha", "beta", "gamma", "epsilon", "eta"};
  int which = -1;
  for (int i = 0; i < 5; ++i)
    if (param == names[i]) which = i;
  if (which < 0) throw Error(ErrorCode::BAD_INPUT, "scan parameter must be one of alpha,beta,gamma,epsilon,eta");
  auto P = [&](const char* nm) { return s.params[param_index(Family::U1_I, nm)]; };
  double base[5] = {P("alpha"), P("beta"), P("gamma"), P("epsilon"), P("eta")};
  auto at = [&](double u) {
    double v[5];
    std::copy(base, base + 5, v);
    v[which] = u;
    return u1i_subfamily(v[0], v[1], v[2], v[3], v[4]);
  };
  const double step = (hi - lo) / (10.0 * n);
  auto sign_data = [&](double u) {
    auto p = at(u);
    double det = family_dual(Family::U1_I, p).determinant();
    return std::pair<double, double>(det, p[2] * p[2] - p[6] * p[6]);
  };
  auto ref = sign_data(lo - step);
  auto check = [&](double u) {
    auto sd = sign_data(u);
    if (sd.first == 0 || sd.second == 0 || (sd.first > 0) != (ref.first > 0) || (sd.second > 0) != (ref.second > 0))
      throw Error(ErrorCode::WINDOW_CROSSES_SINGULARITY, "det or gamma^2-eta^2 vanishes in the scan window");
  };
  if (ref.first >= 0) throw Error(ErrorCode::WINDOW_CROSSES_SINGULARITY, "det h_inv is not negative on the window");
  auto deriv = [&](double u) {
    check(u - step);
    check(u + step);
    return (normalized_scalar(at(u + step)) - normalized_scalar(at(u - step))) / (2.0 * step);
  };
  ScanResult r;
  r.param = param;
  r.lo = lo;
  r.hi = hi;
  for (int i = 0; i < n; ++i) {
    double u = lo + (hi - lo) * i / (n - 1);
    r.points.push_back({u, deriv(u)});
  }
  for (std::size_t i = 1; i < r.points.size(); ++i) {
    const auto& a = r.points[i - 1];
    const auto& b = r.points[i];
    if (a.derivative == 0) {
      r.zero_crossing = a.u;
      break;
    }
    if ((a.derivative > 0) != (b.derivative > 0)) {
      r.zero_crossing = a.u - a.derivative * (b.u - a.u) / (b.derivative - a.derivative);
      break;
    }
  }
  r.derivative_at_solution = deriv(base[which]);
  return r;
}

// ---- fibered metrics over a symmetric space -----------------------------------------

inline double fibered_scalar_curvature(double t, int n, int k, int s, double c) {
  (void)n;
  if (t == 0) throw Error(ErrorCode::BAD_INPUT, "t must be nonzero");
  double t2 = t * t;
  return s / 2.0 + c * k / (4.0 * t2) - k * (1.0 - c) * t2 / 4.0;
}

/// Values of t^2 where d/dt [(t^2)^{k/n} tau(h(t))] = 0, ascending, positive only.
inline std::vector<double> fibered_stationary_points(int n, int k, int s, double c) {
  double r = static_cast<double>(k) / n;
  std::vector<double> coeffs{-k * (1.0 - c) / 4.0 * (r + 1.0), r * s / 2.0, c * k / 4.0 * (r - 1.0)};
  std::vector<double> out;
  for (double y : real_roots(coeffs))
    if (y > 0) out.push_back(y);
  return out;
}

/// Second stationary point for an irreducible symmetric pair (c = 1 - s/(2k)).
inline double symmetric_pair_stationary_point(int k, int s) { return (2.0 * k - s) / (2.0 * k + s); }

}  // namespace liegeom
