// liegeom: command-line front end for the left-invariant geometry library.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liegeom/acceptance.hpp"
#include "liegeom/io.hpp"
#include "liegeom/liegeom.hpp"

using namespace liegeom;
using io::json;

namespace {

struct Global {
  std::string emit = "json";
  std::string manifest;
  std::uint64_t seed = 7;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BAD_INPUT, "not a number: '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::BAD_INPUT, "not a number: '" + s + "'");
  return v;
}

std::string ascii_name(const std::string& n) {
  static const std::map<std::string, std::string> greek = {
      {"α", "alpha"}, {"β", "beta"}, {"γ", "gamma"}, {"δ", "delta"},
      {"ε", "epsilon"}, {"ζ", "zeta"}, {"η", "eta"}, {"θ", "theta"},
  };
  auto it = greek.find(n);
  return it == greek.end() ? n : it->second;
}

// "alpha=1,beta=11" or "1,11"
std::vector<double> parse_params(Family f, const std::string& text) {
  const auto& names = family_info(f).params;
  std::vector<double> p(names.size(), std::nan(""));
  auto items = split(text, ',');
  bool named = !items.empty() && items[0].find('=') != std::string::npos;
  if (!named) {
    if (items.size() != names.size())
      throw Error(ErrorCode::BAD_ARITY, std::string(to_string(f)) + " takes " + std::to_string(names.size()) +
                                            " parameters, got " + std::to_string(items.size()));
    for (std::size_t k = 0; k < items.size(); ++k) p[k] = to_double(items[k]);
    return p;
  }
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BAD_INPUT, "mixing named and positional parameters");
    p[param_index(f, ascii_name(it.substr(0, eq)))] = to_double(it.substr(eq + 1));
  }
  for (std::size_t k = 0; k < p.size(); ++k)
    if (std::isnan(p[k])) throw Error(ErrorCode::BAD_ARITY, "missing parameter " + names[k]);
  return p;
}

HighestWeight parse_irrep(const std::string& s) {
  auto v = split(s, ',');
  if (v.size() != 2) throw Error(ErrorCode::BAD_INPUT, "irrep must be o1,o2");
  double a = to_double(v[0]), b = to_double(v[1]);
  if (a < 0 || b < 0 || a != std::floor(a) || b != std::floor(b))
    throw Error(ErrorCode::BAD_INPUT, "irrep components must be nonnegative integers");
  return {static_cast<int>(a), static_cast<int>(b)};
}

std::string dump(const json& j) { return io::dump17(j); }

json header(const char* command) {
  json j;
  j["schema"] = io::kSchema;
  j["command"] = command;
  return j;
}

// ---- subcommands ------------------------------------------------------------------

std::string cmd_algebra(const Global& g) {
  const Su3& s = su3();
  auto rounded = [](double v) { return std::round(v * 1e15) / 1e15 + 0.0; };
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "a,b,c,f,d\n";
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          if (s.f(a, b, c) != 0 || s.d(a, b, c) != 0)
            os << a + 1 << "," << b + 1 << "," << c + 1 << "," << io::fmt17(rounded(s.f(a, b, c))) << ","
               << io::fmt17(rounded(s.d(a, b, c))) << "\n";
    return os.str();
  }
  json j = header("algebra");
  auto tensor = [&](const Tensor3& t) {
    json A = json::array();
    for (int a = 0; a < N; ++a) {
      json B = json::array();
      for (int b = 0; b < N; ++b) {
        json C = json::array();
        for (int c = 0; c < N; ++c) C.push_back(rounded(t(a, b, c)));
        B.push_back(C);
      }
      A.push_back(B);
    }
    return A;
  };
  j["f"] = tensor(s.f.x);
  j["d"] = tensor(s.d.d);
  j["killing_x_basis"] = io::matrix(killing_matrix(s.x));
  j["jacobi_residual"] = jacobi_residual(s.f);
  return dump(j);
}

std::string cmd_metric(const Global& g, const std::string& fam, const std::string& params, bool normalize) {
  Family f = parse_family(fam);
  std::vector<double> p = parse_params(f, params);
  if (normalize && f == Family::U1_I) p = normalize_u1i(p);
  if (normalize && f == Family::U1_Y) p = normalize_u1y(p);
  InvariantMetric m = build_metric(f, p);
  Signature sig = signature(m.h_inv());
  Stabilizer st = stabilizer(m.h_inv());
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "row,c1,c2,c3,c4,c5,c6,c7,c8\n";
    for (int i = 0; i < N; ++i) {
      os << i + 1;
      for (int k = 0; k < N; ++k) os << "," << io::fmt17(m.h_inv()(i, k));
      os << "\n";
    }
    return os.str();
  }
  json j = header("metric");
  j["family"] = to_string(f);
  j["params"] = io::params_object(f, p);
  j["h_inv"] = io::matrix(m.h_inv());
  j["h"] = io::matrix(m.h());
  j["signature"] = {sig.p, sig.q};
  j["h_eigenvalues"] = sig.eigenvalues;
  j["stabilizer_dim"] = st.dimension;
  json basis = json::array();
  for (const Vec8& v : st.basis) basis.push_back(std::vector<double>(v.data(), v.data() + N));
  j["stabilizer_basis"] = basis;
  DecompositionTriple t = project_1_8_27(m.h_inv(), f);
  json dec;
  if (t.A) dec["A"] = *t.A;
  if (t.B) dec["B"] = *t.B;
  if (t.C) dec["C"] = *t.C;
  j["decomposition_1_8_27"] = dec;
  return dump(j);
}

std::string cmd_curvature(const Global& g, const std::string& fam, const std::string& params) {
  Family f = parse_family(fam);
  InvariantMetric m = build_metric(f, parse_params(f, params));
  CurvatureBundle cb = curvature(m);
  SectionalTable st = sectional_table(m, cb.riemann);
  if (g.emit == "csv") return io::sectional_csv(st);
  RicciDecomposition d = ricci_decomposition(m, cb);
  PrincipalCurvatures pc = ricci_principal(m, cb.ricci);
  json j = header("curvature");
  j["family"] = to_string(f);
  j["params"] = io::params_object(f, m.params());
  j["ricci"] = io::matrix(cb.ricci);
  j["tau"] = cb.scalar;
  j["principal_curvatures"] = pc.values;
  j["sectional"] = io::sectional_json(st);
  j["norms"] = {{"riemann", d.norm_R}, {"weyl", d.norm_weyl}, {"traceless", d.norm_traceless}, {"scalar", d.norm_scalar}};
  j["yamabe_shift"] = yamabe_shift(cb.scalar);
  return dump(j);
}

std::string cmd_solve(const Global& g, const std::string& fam, const std::vector<std::string>& constraints, int starts,
                      int threads, bool no_normalize) {
  Family f = parse_family(fam);
  SolveOptions o;
  o.starts = starts;
  o.seed = g.seed;
  o.constraints = constraints;
  o.threads = threads;
  o.normalize = !no_normalize;
  SolveResult r = solve_family(f, o);
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "class,p,q,kappa,lambda,tau,stabilizer_dim,residual,hits";
    for (const auto& n : family_info(f).params) os << "," << n;
    os << "\n";
    for (std::size_t k = 0; k < r.solutions.size(); ++k) {
      const auto& s = r.solutions[k];
      os << k + 1 << "," << s.p << "," << s.q << "," << io::fmt17(s.kappa) << "," << io::fmt17(s.lambda_cc) << ","
         << io::fmt17(s.tau) << "," << s.stabilizer_dim << "," << io::fmt17(s.residual) << "," << s.hits;
      for (double v : s.params) os << "," << io::fmt17(v);
      os << "\n";
    }
    return os.str();
  }
  json j = header("solve");
  j["family"] = to_string(f);
  j["seed"] = g.seed;
  j["starts"] = starts;
  j["constraints"] = constraints;
  j["diagnostics"] = {{"converged", r.diagnostics.converged},
                      {"no_convergence", r.diagnostics.no_convergence},
                      {"rejected", r.diagnostics.rejected}};
  json sols = json::array();
  for (const auto& s : r.solutions) sols.push_back(io::to_json(s));
  j["solutions"] = sols;
  return dump(j);
}

// "gamma:5:-578539506" replaces one coefficient (index from the leading term)
LorentzPolynomials with_typos(const std::vector<std::string>& typos) {
  LorentzPolynomials L = lorentz_polynomials();
  for (const auto& t : typos) {
    auto f = split(t, ':');
    if (f.size() != 3) throw Error(ErrorCode::BAD_INPUT, "typo must be ID:INDEX:VALUE");
    IntPoly* p = f[0] == "epsilon" ? &L.epsilon
                 : f[0] == "gamma" ? &L.gamma
                 : f[0] == "beta"  ? &L.beta
                 : f[0] == "kappa" ? &L.kappa
                 : f[0] == "eta2"  ? &L.eta2
                                   : nullptr;
    if (!p) throw Error(ErrorCode::BAD_INPUT, "unknown polynomial '" + f[0] + "'");
    auto c = p->coeffs();
    int idx = static_cast<int>(to_double(f[1]));
    if (idx < 0 || idx >= static_cast<int>(c.size())) throw Error(ErrorCode::BAD_INPUT, "coefficient index out of range");
    c[static_cast<std::size_t>(idx)] = parse_int128(f[2]);
    *p = IntPoly(c);
  }
  return L;
}

EinsteinSolution need_lorentz(int starts, std::uint64_t seed) {
  auto s = find_lorentz(starts, seed);
  if (!s) throw Error(ErrorCode::NO_CONVERGENCE, "no Lorentzian class found; raise --starts");
  return *s;
}

std::string cmd_certify(const Global& g, const std::string& which, int starts, const std::vector<std::string>& typos,
                        bool& failed) {
  if (which != "lorentz") throw Error(ErrorCode::BAD_INPUT, "only --solution lorentz is certifiable");
  EinsteinSolution s = need_lorentz(starts, g.seed);
  LorentzPolynomials L = with_typos(typos);
  CertificateReport rep = certify_lorentz(s, L);
  failed = !rep.pass;
  const IntPoly* polys[] = {&L.epsilon, &L.gamma, &L.beta, &L.kappa, &L.eta2};
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "polynomial,value,residual,refined,displacement,iterations,pass,real_roots_companion,sign_changes\n";
    for (std::size_t k = 0; k < rep.items.size(); ++k) {
      const auto& it = rep.items[k];
      RealRootCount rc = count_real_roots(*polys[k]);
      os << it.id << "," << io::fmt17(it.root.value) << "," << io::fmt17(it.root.residual) << ","
         << io::fmt17(it.root.refined) << "," << io::fmt17(it.root.displacement) << "," << it.root.iterations << ","
         << (it.root.pass ? "PASS" : "FAIL") << "," << rc.companion << "," << rc.sign_changes << "\n";
    }
    return os.str();
  }
  json j = header("certify");
  j["solution"] = io::to_json(s);
  j["certificate"] = io::to_json(rep);
  json counts = json::array();
  for (std::size_t k = 0; k < rep.items.size(); ++k) {
    RealRootCount rc = count_real_roots(*polys[k]);
    counts.push_back({{"polynomial", rep.items[k].id}, {"companion", rc.companion}, {"sign_changes", rc.sign_changes}});
  }
  j["real_root_counts"] = counts;
  auto P = [&](const char* n) { return s.params[param_index(Family::U1_I, n)]; };
  CubicRoots cr = eta2_cubic_roots(P("gamma"), P("epsilon"));
  json cubic;
  cubic["real_roots"] = cr.n_real;
  cubic["positive"] = cr.n_positive;
  cubic["negative"] = cr.n_negative;
  if (cr.positive_root) cubic["positive_root"] = *cr.positive_root;
  j["eta2_cubic"] = cubic;
  return dump(j);
}

std::string cmd_scan(const Global& g, const std::string& param, const std::string& window, int points, int starts) {
  auto w = split(window, ':');
  if (w.size() != 2) throw Error(ErrorCode::BAD_INPUT, "window must be lo:hi");
  EinsteinSolution s = need_lorentz(starts, g.seed);
  ScanResult r = stationarity_scan(s, param, to_double(w[0]), to_double(w[1]), points);
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "u,derivative\n";
    for (const auto& p : r.points) os << io::fmt17(p.u) << "," << io::fmt17(p.derivative) << "\n";
    return os.str();
  }
  json j = header("scan");
  j["param"] = r.param;
  j["window"] = {r.lo, r.hi};
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back({p.u, p.derivative});
  j["points"] = pts;
  j["zero_crossing"] = r.zero_crossing ? json(*r.zero_crossing) : json(nullptr);
  j["derivative_at_solution"] = r.derivative_at_solution;
  return dump(j);
}

std::string cmd_spectrum(const Global& g, const std::string& irrep, double a, double b, double c, bool check) {
  HighestWeight w = parse_irrep(irrep);
  auto spec = laplacian_spectrum_u2(w, a, b, c);
  std::vector<double> dev(spec.size(), 0.0);
  if (check) {
    RepSpec rs{RepKind::CONSTRUCTED, w};
    auto blocks = operator_spectrum_by_branch(rs, operator_in_rep(rs, LaplaceU2{a, b, c}));
    for (std::size_t k = 0; k < blocks.size(); ++k)
      for (double v : blocks[k].eigenvalues) dev[k] = std::max(dev[k], std::abs(v - spec[k].eigenvalue));
  }
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "2I,3Y,eigenvalue,multiplicity" << (check ? ",operator_deviation" : "") << "\n";
    for (std::size_t k = 0; k < spec.size(); ++k) {
      os << spec[k].u2.twoI << "," << spec[k].u2.threeY << "," << io::fmt17(spec[k].eigenvalue) << ","
         << spec[k].multiplicity;
      if (check) os << "," << io::fmt17(dev[k]);
      os << "\n";
    }
    return os.str();
  }
  json j = header("spectrum");
  j["irrep"] = {w.o1, w.o2};
  j["dim"] = w.dim();
  j["casimir2"] = casimir2(w).str();
  j["casimir3"] = casimir3(w).str();
  j["metric"] = {{"alpha", a}, {"beta", b}, {"gamma", c}};
  json rows = json::array();
  for (std::size_t k = 0; k < spec.size(); ++k) {
    json r = {{"2I", spec[k].u2.twoI},
              {"3Y", spec[k].u2.threeY},
              {"label", spec[k].u2.label()},
              {"eigenvalue", spec[k].eigenvalue},
              {"multiplicity", spec[k].multiplicity}};
    if (check) r["operator_deviation"] = dev[k];
    rows.push_back(r);
  }
  j["spectrum"] = rows;
  if (w.o1 == 2 && w.o2 == 1) {
    json cmp = json::array();
    for (const auto& row : listed_21_comparison(a, b, c))
      cmp.push_back({{"label", row.u2.label()}, {"tabulated", row.listed}, {"formula", row.formula}});
    j["tabulated_comparison"] = cmp;
  }
  return dump(j);
}

std::string cmd_branch(const Global& g, const std::string& irrep) {
  HighestWeight w = parse_irrep(irrep);
  auto terms = branch_to_u2(w);
  long long dim = 0, hyper = 0;
  for (const auto& t : terms) {
    dim += static_cast<long long>(t.twoI + 1) * t.multiplicity;
    hyper += static_cast<long long>(t.twoI + 1) * t.threeY * t.multiplicity;
  }
  if (g.emit == "csv") {
    std::ostringstream os;
    os << "2I,3Y,multiplicity,label\n";
    for (const auto& t : terms) os << t.twoI << "," << t.threeY << "," << t.multiplicity << "," << t.label() << "\n";
    return os.str();
  }
  json j = header("branch");
  j["irrep"] = {w.o1, w.o2};
  j["dim"] = w.dim();
  json rows = json::array();
  for (const auto& t : terms)
    rows.push_back({{"2I", t.twoI}, {"3Y", t.threeY}, {"multiplicity", t.multiplicity}, {"label", t.label()}});
  j["terms"] = rows;
  j["dimension_sum"] = dim;
  j["hypercharge_sum"] = hyper;
  json weights = json::array();
  for (const auto& x : weight_system(w)) weights.push_back({{"weight", {x.w1, x.w2}}, {"multiplicity", x.multiplicity}});
  j["weights"] = weights;
  return dump(j);
}

std::string cmd_gmo(const Global& g, const std::string& masses, bool predict) {
  std::vector<double> m;
  for (const auto& s : split(masses, ',')) m.push_back(to_double(s));
  if (predict) {
    if (m.size() < 2) throw Error(ErrorCode::BAD_ARITY, "--predict-eta needs m_pi,m_K");
    GmoPrediction p = gmo_predict(m[0], m[1]);
    if (g.emit == "csv")
      return "m_pi,m_K,m_eta\n" + io::fmt17(m[0]) + "," + io::fmt17(m[1]) + "," + io::fmt17(p.m_eta) + "\n";
    json j = header("gmo");
    j["m_pi"] = m[0];
    j["m_K"] = m[1];
    j["m_eta_predicted"] = p.m_eta;
    j["mu2"] = {{"alpha", p.mu2_alpha}, {"beta", p.mu2_beta}, {"gamma", p.mu2_gamma}};
    j["kaon_check"] = p.kaon_check;
    return dump(j);
  }
  if (m.size() != 3) throw Error(ErrorCode::BAD_ARITY, "--masses needs m_pi,m_K,m_eta");
  GmoFit f = gmo_fit({m[0], m[1], m[2]});
  if (g.emit == "csv")
    return "mu2_alpha,mu2_beta,mu2_gamma,ratio_alpha,ratio_gamma\n" + io::fmt17(f.mu2_alpha) + "," +
           io::fmt17(f.mu2_beta) + "," + io::fmt17(f.mu2_gamma) + "," + io::fmt17(f.ratio_alpha()) + "," +
           io::fmt17(f.ratio_gamma()) + "\n";
  json j = header("gmo");
  j["masses"] = {{"m_pi", m[0]}, {"m_K", m[1]}, {"m_eta", m[2]}};
  j["mu2"] = {{"alpha", f.mu2_alpha}, {"beta", f.mu2_beta}, {"gamma", f.mu2_gamma}};
  j["ratios"] = {f.ratio_alpha(), 1.0, f.ratio_gamma()};
  return dump(j);
}

std::string cmd_reproduce(const Global& g, const std::vector<std::string>& only, const std::vector<std::string>& typos,
                          bool verbose, bool& failed) {
  acceptance::Options o;
  o.seed = g.seed;
  if (!typos.empty()) o.polynomials = with_typos(typos);
  auto results = acceptance::run(o, only);
  if (results.empty()) throw Error(ErrorCode::BAD_INPUT, "--only matched no criterion");
  failed = false;
  for (const auto& c : results) failed = failed || !c.pass();
  if (g.emit == "json") {
    json j = header("reproduce");
    j["seed"] = g.seed;
    json arr = json::array();
    for (const auto& c : results) {
      json checks = json::array();
      for (const auto& k : c.checks)
        checks.push_back({{"what", k.what},
                          {"measured", k.measured},
                          {"expected", k.expected},
                          {"tolerance", k.tol},
                          {"status", k.reported_only ? "INFO" : (k.pass ? "PASS" : "FAIL")}});
      arr.push_back({{"id", c.id}, {"key", c.key}, {"title", c.title}, {"status", c.pass() ? "PASS" : "FAIL"},
                     {"checks", checks}});
    }
    j["criteria"] = arr;
    j["status"] = failed ? "FAIL" : "PASS";
    return dump(j);
  }
  std::ostringstream os;
  if (g.emit == "csv") {
    os << "criterion,key,check,measured,expected,tolerance,status\n";
    for (const auto& c : results)
      for (const auto& k : c.checks)
        os << c.id << "," << c.key << ",\"" << k.what << "\"," << io::fmt17(k.measured) << "," << io::fmt17(k.expected)
           << "," << io::fmt17(k.tol) << "," << (k.reported_only ? "INFO" : (k.pass ? "PASS" : "FAIL")) << "\n";
    return os.str();
  }
  for (const auto& c : results) {
    os << acceptance::summary_line(c) << "\n";
    for (const auto& k : c.checks) {
      if (!verbose && k.pass && !k.reported_only) continue;
      char buf[512];
      std::snprintf(buf, sizeof buf, "      %s %-60s measured %-22.15g expected %-22.15g tol %.1e\n",
                    k.reported_only ? "info" : (k.pass ? "ok  " : "FAIL"), k.what.c_str(), k.measured, k.expected,
                    k.tol);
      os << buf;
    }
  }
  os << (failed ? "FAIL" : "PASS") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liegeom: left-invariant metrics, curvature and spectra on SU(3)"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--manifest", g.manifest, "write a run manifest (JSON) to this file");

  std::string family, params, irrep = "1,0", window, which = "lorentz", masses, param;
  std::vector<std::string> constraints, typos, only;
  int starts = 200, lorentz_starts = 400, threads = 0, points = 200;
  double alpha = 1, beta = 1, gamma = 1;
  bool dump_flag = false, normalize = false, no_normalize = false, check = false, predict = false, verbose = false;

  auto* algebra = app.add_subcommand("algebra", "structure constants and d-symbols");
  algebra->add_flag("--dump", dump_flag, "emit f and d tensors");

  auto* metric = app.add_subcommand("metric", "build a family member");
  metric->add_option("--family", family)->required();
  metric->add_option("--params", params)->required();
  metric->add_flag("--normalize", normalize, "Ad-normalise U1_I (theta -> 0) or U1_Y (diagonal k-block)");

  auto* curv = app.add_subcommand("curvature", "Ricci, scalar, sectional and norm data");
  curv->add_option("--family", family)->required();
  curv->add_option("--params", params)->required();

  auto* solve = app.add_subcommand("solve", "multistart Einstein solver");
  solve->add_option("--family", family)->required();
  solve->add_option("--constraint", constraints, "lhs=rhs, repeatable")->take_all();
  solve->add_option("--starts", starts);
  solve->add_option("--seed", g.seed);
  solve->add_option("--threads", threads, "0: hardware concurrency capped by LIEGEOM_THREADS");
  solve->add_flag("--no-normalize", no_normalize, "leave theta (U1_I) and the k-block (U1_Y) free");

  auto* certify = app.add_subcommand("certify", "polynomial certificate of the Lorentzian solution");
  certify->add_option("--solution", which);
  certify->add_option("--starts", lorentz_starts, "solver starts used to locate the solution");
  certify->add_option("--seed", g.seed);
  certify->add_option("--inject-typo", typos, "ID:INDEX:VALUE, replaces one coefficient");

  auto* scan = app.add_subcommand("scan", "d/du of tau/(-det)^(1/8) around the Lorentzian solution");
  scan->add_option("--param", param)->required();
  scan->add_option("--window", window)->required();
  scan->add_option("--points", points);
  scan->add_option("--starts", lorentz_starts, "solver starts used to locate the solution");
  scan->add_option("--seed", g.seed);

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of a U(2)-invariant metric");
  spectrum->add_option("--irrep", irrep)->required();
  spectrum->add_option("--alpha", alpha);
  spectrum->add_option("--beta", beta);
  spectrum->add_option("--gamma", gamma);
  spectrum->add_flag("--check", check, "compare with the constructed operator");

  auto* branch = app.add_subcommand("branch", "restriction to U(2)");
  branch->add_option("--irrep", irrep)->required();

  auto* gmo = app.add_subcommand("gmo", "meson mass fit");
  gmo->add_option("--masses", masses)->required();
  gmo->add_flag("--predict-eta", predict);

  auto* repro = app.add_subcommand("reproduce", "run the acceptance suite");
  repro->add_option("--only", only, "criterion key or number, repeatable")->take_all();
  repro->add_option("--seed", g.seed);
  repro->add_option("--inject-typo", typos, "ID:INDEX:VALUE, negative control");
  repro->add_flag("-v,--verbose", verbose);

  for (auto* sub : {algebra, metric, curv, solve, certify, scan, spectrum, branch, gmo})
    sub->add_option("--emit", g.emit, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  std::string repro_emit = "text";
  repro->add_option("--emit", repro_emit, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string out;
  int status = 0;
  try {
    bool failed = false;
    if (*algebra) {
      if (!dump_flag) throw Error(ErrorCode::BAD_INPUT, "algebra needs --dump");
      out = cmd_algebra(g);
    } else if (*metric) {
      out = cmd_metric(g, family, params, normalize);
    } else if (*curv) {
      out = cmd_curvature(g, family, params);
    } else if (*solve) {
      out = cmd_solve(g, family, constraints, starts, threads, no_normalize);
    } else if (*certify) {
      out = cmd_certify(g, which, lorentz_starts, typos, failed);
    } else if (*scan) {
      out = cmd_scan(g, param, window, points, lorentz_starts);
    } else if (*spectrum) {
      out = cmd_spectrum(g, irrep, alpha, beta, gamma, check);
    } else if (*branch) {
      out = cmd_branch(g, irrep);
    } else if (*gmo) {
      out = cmd_gmo(g, masses, predict);
    } else if (*repro) {
      g.emit = repro_emit;
      out = cmd_reproduce(g, only, typos, verbose, failed);
    }
    if (failed) status = 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  std::cout << out;

  if (!g.manifest.empty()) {
    json m;
    m["schema"] = io::kSchema;
    std::string cmdline;
    for (int i = 0; i < argc; ++i) cmdline += (i ? " " : "") + std::string(argv[i]);
    m["command"] = cmdline;
    m["seed"] = g.seed;
    m["version"] = io::kVersion;
    m["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m["output_fnv1a"] = io::hex64(io::fnv1a(out));
    m["exit_status"] = status;
    std::ofstream(g.manifest) << io::dump17(m);
  }
  return status;
}
