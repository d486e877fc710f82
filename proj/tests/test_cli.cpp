#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "liegeom/io.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LIEGEOM_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("metric --family SO3 --params 1,11").status, 0);
  EXPECT_EQ(run("metric --family SO3 --params 1").status, 2);       // arity
  EXPECT_EQ(run("metric --family SU4 --params 1").status, 2);       // unknown family
  EXPECT_EQ(run("metric --family SO3").status, 2);                  // parse error
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("metric --family U2 --params 1,0,1").status, 3);    // degenerate
  EXPECT_EQ(run("gmo --masses 500,100 --predict-eta").status, 2);  // negative square
  EXPECT_EQ(run("spectrum --irrep 4,4 --check").status, 2);         // dim limit
}

TEST(Cli, MetricJsonSchema) {
  auto j = parse(run("metric --family U1_I --params alpha=1,beta=11,gamma=6,delta=6,epsilon=1,zeta=0,eta=5,theta=0"));
  EXPECT_EQ(j["schema"], "liegeom/1");
  EXPECT_EQ(j["family"], "U1_I");
  EXPECT_EQ(j["params"]["beta"], 11.0);
  EXPECT_EQ(j["h_inv"].size(), 8u);
  EXPECT_EQ(j["signature"][0], 8);
  EXPECT_EQ(j["stabilizer_dim"], 3);
  EXPECT_EQ(j["stabilizer_basis"].size(), 3u);
}

TEST(Cli, GreekAliases) {
  auto a = run("metric --family SO3 --params α=1,β=11");
  auto b = run("metric --family SO3 --params 1,11");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FloatsHaveSeventeenDigits) {
  auto r = run("gmo --masses 137,496,549");
  EXPECT_NE(r.out.find("-0.40659"), std::string::npos);
  auto j = parse(r);
  double ra = j["ratios"][0];
  EXPECT_NEAR(ra, -0.406591, 1e-6);
  // 17 significant digits survive the round trip exactly
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", ra);
  EXPECT_NE(r.out.find(buf), std::string::npos);
}

TEST(Cli, CurvatureCsvLayout) {
  auto r = run("curvature --family SU3 --params 1 --emit csv");
  ASSERT_EQ(r.status, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "a,X2,X3,X4,X5,X6,X7,X8");
  std::getline(is, line);
  EXPECT_EQ(line.substr(0, 3), "X1,");
  std::getline(is, line);
  EXPECT_EQ(line.substr(0, 5), "X2,.,");
  int rows = 2;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 7);
}

TEST(Cli, SolveIsByteIdentical) {
  auto a = run("solve --family SO3 --starts 60 --seed 3 --emit json");
  auto b = run("solve --family SO3 --starts 60 --seed 3 --threads 1 --emit json");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = parse(a);
  EXPECT_EQ(j["solutions"].size(), 2u);
  for (const char* k : {"family", "params", "kappa", "lambda", "tau", "signature", "stabilizer_dim", "residual", "hits"})
    EXPECT_TRUE(j["solutions"][0].contains(k)) << k;
  auto c = run("solve --family SO3 --starts 60 --seed 3 --emit csv");
  EXPECT_EQ(first_line(c.out), "class,p,q,kappa,lambda,tau,stabilizer_dim,residual,hits,alpha,beta");
}

TEST(Cli, SpectrumAndBranch) {
  auto s = run("spectrum --irrep 2,1 --alpha 1 --beta 2 --gamma 3 --check --emit csv");
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(first_line(s.out), "2I,3Y,eigenvalue,multiplicity,operator_deviation");
  auto j = parse(run("branch --irrep 1,1"));
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(j["dimension_sum"], 8);
  EXPECT_EQ(j["hypercharge_sum"], 0);
  EXPECT_EQ(first_line(run("branch --irrep 1,1 --emit csv").out), "2I,3Y,multiplicity,label");
}

TEST(Cli, GmoPrediction) {
  auto j = parse(run("gmo --masses 137,496 --predict-eta"));
  EXPECT_NEAR(j["m_eta_predicted"].get<double>(), 567.243, 1e-3);
}

TEST(Cli, AlgebraDump) {
  auto j = parse(run("algebra --dump"));
  EXPECT_EQ(j["f"][0][1][2], 1.0);
  EXPECT_EQ(j["f"][1][0][2], -1.0);
  EXPECT_EQ(j["d"].size(), 8u);
  EXPECT_EQ(run("algebra").status, 2);
}

TEST(Cli, ScanCsvAndSingularWindow) {
  auto r = run("scan --param beta --window 1.41:1.42 --points 11 --emit csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(first_line(r.out), "u,derivative");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 12);
  EXPECT_EQ(run("scan --param eta --window 0.1:0.3 --points 11").status, 3);
}

TEST(Cli, CertifyPassesAndTypoFails) {
  auto ok = run("certify --solution lorentz --emit csv");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(std::count(ok.out.begin(), ok.out.end(), '\n'), 6);
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  auto bad = run("certify --solution lorentz --inject-typo gamma:7:-1700000000");
  EXPECT_EQ(bad.status, 3);
  EXPECT_EQ(parse(bad)["certificate"]["status"], "FAIL");
  EXPECT_EQ(run("certify --solution jensen").status, 2);
}

TEST(Cli, ReproduceSubsetAndNegativeControl) {
  auto r = run("reproduce --only gmo");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  auto j = parse(run("reproduce --only gmo --emit json"));
  EXPECT_EQ(j["criteria"].size(), 1u);
  EXPECT_EQ(j["status"], "PASS");
  auto bad = run("reproduce --only lorentz --inject-typo kappa:3:1");
  EXPECT_EQ(bad.status, 3);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("reproduce --only nothing").status, 2);
}

TEST(Cli, ManifestDigestsOutput) {
  std::string path = ::testing::TempDir() + "liegeom_manifest.json";
  auto r = run("--manifest " + path + " gmo --masses 137,496,549 --emit csv");
  ASSERT_EQ(r.status, 0);
  std::ifstream in(path);
  auto m = nlohmann::json::parse(in);
  EXPECT_EQ(m["output_fnv1a"], liegeom::io::hex64(liegeom::io::fnv1a(r.out)));
  EXPECT_EQ(m["version"], liegeom::io::kVersion);
  EXPECT_EQ(m["exit_status"], 0);
}
