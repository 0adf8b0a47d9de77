#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + GOLDCALC_CLI + std::string(" ") + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p) != nullptr) out += buf;
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

double field_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  if (pos == std::string::npos) return std::nan("");
  return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

}  // namespace

TEST(Cli, SeqPublishedLists) {
  auto r = run("seq --k 4 --n-max 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n7\n48\n329\n2255\n");
  r = run("seq --k 5 --n-max 5");
  EXPECT_EQ(r.out, "1\n11\n122\n1353\n15005\n");
  r = run("seq --k 1 --n-max 1");
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("seq --k 0 --n-max 5").code, 1);
  EXPECT_EQ(run("seq --k 2 --n-max 0").code, 1);
  EXPECT_EQ(run("seq --k two --n-max 3").code, 1);
  EXPECT_EQ(run("seq --k 2 --n-max 3 --bogus 1").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("field --z0 '1.2 + 0i' --out x.csv").code, 1);
}

TEST(Cli, Eval) {
  auto r = run("eval --fn exp --z 1 --k 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(std::strtod(r.out.c_str(), nullptr), 3.7045028991540674872, 1e-14);
  r = run("eval --fn phi_number --n 3 --k 1");
  EXPECT_EQ(r.out.substr(0, 10), "2 + 2*phi ");
  r = run("eval --fn omega --r 1.1 --gamma 1");
  EXPECT_NEAR(std::strtod(r.out.c_str(), nullptr), -0.27695182272478103056, 1e-13);
  r = run("eval --fn ln_phi --z 0.5 --k 2 --form series");
  EXPECT_NEAR(std::strtod(r.out.c_str(), nullptr), 0.440987033775865882, 1e-14);
  EXPECT_EQ(run("eval --fn E_phi --z 3").code, 1);
  EXPECT_EQ(run("eval --fn nope").code, 1);
}

TEST(Cli, FieldCsvSchemaAndBoundary) {
  const auto r = run("field --z0 1.2+0i --gamma 1 --k 2 --trunc 80 --grid 50x50 --out field_k2.csv");
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string text = slurp("field_k2.csv");
  EXPECT_EQ(text.substr(0, 12), "x,y,psi,u,v\n");
  std::istringstream is(text);
  std::string line;
  int rows = -1;
  while (std::getline(is, line)) ++rows;
  EXPECT_GT(rows, 0);
  EXPECT_LE(rows, 2500);
  EXPECT_NE(r.out.find("psi min "), std::string::npos);
  EXPECT_LT(field_after(r.out, "std-dev inner "), 1e-6);
  EXPECT_LT(field_after(r.out, " outer "), 1e-6);
}

TEST(Cli, FieldZeroGammaAllZeroPsi) {
  ASSERT_EQ(run("field --z0 1.2+0i --gamma 0 --k 1 --trunc 20 --grid 20x20 --out field_zero.csv").code, 0);
  std::istringstream is(slurp("field_zero.csv"));
  std::string line;
  std::getline(is, line);
  int rows = 0;
  while (std::getline(is, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    const auto c = line.find(',', b + 1);
    EXPECT_EQ(std::strtod(line.substr(b + 1, c - b - 1).c_str(), nullptr), 0.0);
    ++rows;
  }
  EXPECT_GT(rows, 0);
}

TEST(Cli, FieldJsonAndThreadsDeterministic) {
  ASSERT_EQ(run("field --z0 1.1+0.2i --k 1 --trunc 30 --grid 30x30 --out f1.json", "GOLDCALC_THREADS=1").code, 0);
  ASSERT_EQ(run("field --z0 1.1+0.2i --k 1 --trunc 30 --grid 30x30 --out f4.json", "GOLDCALC_THREADS=4").code, 0);
  const std::string a = slurp("f1.json");
  EXPECT_EQ(a.front(), '[');
  EXPECT_EQ(a, slurp("f4.json"));
  EXPECT_EQ(run("field --z0 1.1+0.2i --out f.csv", "GOLDCALC_THREADS=zero").code, 1);
}

TEST(Cli, FieldRejectsVortexOutside) {
  EXPECT_EQ(run("field --z0 2+0i --out bad.csv").code, 1);
}

TEST(Cli, SimulateStationaryVortex) {
  write("stationary.json", "[{\"x\": 1.1278384855616823, \"y\": 0.0, \"gamma\": 1.0}]");
  const auto r = run("simulate --init stationary.json --dt 1e-3 --steps 1000 --out stationary.csv");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_LT(field_after(r.out, "displacement "), 1e-8);
  EXPECT_EQ(slurp("stationary.csv").substr(0, 24), "step,t,vortex_index,x,y\n");
}

TEST(Cli, SimulateRingFrequency) {
  const double r = std::pow((1.0 + std::sqrt(5.0)) / 2.0, 0.25);
  std::ostringstream js;
  js.precision(17);
  js << "[";
  for (int l = 0; l < 3; ++l) {
    const double th = 2.0 * 3.14159265358979323846 * l / 3.0;
    js << (l ? "," : "") << "{\"x\": " << r * std::cos(th) << ", \"y\": " << r * std::sin(th) << ", \"gamma\": 1}";
  }
  js << "]";
  write("ring.json", js.str());
  const auto out = run("simulate --init ring.json --dt 1e-3 --steps 5000 --out ring.csv");
  ASSERT_EQ(out.code, 0) << out.out;
  const double measured = field_after(out.out, "measured omega ");
  const double expect = 2.0 / (4.0 * 3.14159265358979323846 * std::sqrt((1.0 + std::sqrt(5.0)) / 2.0));
  EXPECT_LT(std::abs(measured - expect) / expect, 1e-4);
}

TEST(Cli, SimulateEscapeExitsTwo) {
  write("escape.json", "[{\"x\": 1.1, \"y\": 0.0, \"gamma\": 1.0}]");
  const auto r = run("simulate --init escape.json --dt 20 --steps 5 --out escape.csv");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("left the annulus"), std::string::npos);
}

TEST(Cli, SimulateMalformedJson) {
  write("broken.json", "[{\"x\": 1.1, \"y\": ");
  auto r = run("simulate --init broken.json --out broken.csv");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("initial conditions"), std::string::npos);
  EXPECT_EQ(run("simulate --init does_not_exist.json --out x.csv").code, 1);
}

TEST(Cli, VerifySuites) {
  auto r = run("verify --suite ring");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS A1 "), std::string::npos);
  EXPECT_EQ(run("verify --suite nonsense").code, 1);
  r = run("verify --suite calculus --seed 99");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, VerifyDeterministicGivenSeed) {
  const auto a = run("verify --suite calculus --seed 5");
  const auto b = run("verify --suite calculus --seed 5");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyExitCodeTracksFailures) {
  // exit 3 exactly when some check printed FAIL
  const auto r = run("verify --suite hydro");
  const bool any_fail = r.out.find("FAIL ") != std::string::npos;
  EXPECT_EQ(r.code, any_fail ? 3 : 0) << r.out;
  const auto strict = run("verify --suite functions --tol 1e-12");
  EXPECT_EQ(strict.code, 3);
}
