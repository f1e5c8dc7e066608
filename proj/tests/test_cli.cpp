// Black-box tests: run the built binary and inspect stdout and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "infogeom/classification.hpp"
#include "infogeom/equivalence.hpp"
#include "infogeom/io.hpp"

namespace fs = std::filesystem;
using infogeom::io::json;

namespace {

struct Outcome {
  int exit_code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("infogeom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string write(const std::string& name, const infogeom::FiniteExpFamily& fam) const {
    return write(name, infogeom::io::family_text(fam));
  }

  // stderr is discarded so stdout must hold the payload alone.
  static Outcome run(const std::string& args) {
    const std::string cmd = std::string(INFOGEOM_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
  }

  static json run_json(const std::string& args, int expected_exit = 0) {
    const auto r = run(args);
    EXPECT_EQ(r.exit_code, expected_exit) << args;
    return json::parse(r.out);
  }

  fs::path dir_;
};

std::string read_file(const std::string& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_F(Cli, InfoOnBinomialTwo) {
  const auto j = run_json("info " + write("b2.json", infogeom::binomial_family(2)));
  EXPECT_NEAR(j.at("psi0").get<double>(), 1.3862943611, 1e-9);
  EXPECT_EQ(j.at("m").get<int>(), 2);
  EXPECT_EQ(j.at("levels").get<int>(), 3);
  EXPECT_NEAR(j.at("eta0").get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j.at("fisher0").get<double>(), 0.5, 1e-15);
}

TEST_F(Cli, InfoRejectsBadFiles) {
  EXPECT_EQ(run("info " + write("bad.json", R"({"C": [0, 0, 0], "F": [0, 1]})")).exit_code, 2);
  EXPECT_EQ(run("info " + write("one.json", R"({"C": [0], "F": [1]})")).exit_code, 2);
  EXPECT_EQ(run("info " + write("flat.json", R"({"C": [0, 1], "F": [1, 1]})")).exit_code, 2);
  EXPECT_EQ(run("info " + path("missing.json")).exit_code, 2);
  EXPECT_EQ(run("info").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(Cli, CurvatureCsvOfBinomialFour) {
  const auto r = run("curvature " + write("b4.json", infogeom::binomial_family(4)));
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "theta,scal");
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    ASSERT_NE(comma, std::string::npos);
    EXPECT_NEAR(std::stod(line.substr(comma + 1)), 0.5, 1e-8);
    ++rows;
  }
  EXPECT_EQ(rows, 601);
}

TEST_F(Cli, CurvatureJsonOfUniformThreePoints) {
  const auto f = write("u3.json", R"({"C": [0, 0, 0], "F": [0, 1, 2]})");
  const auto j = run_json("curvature " + f + " --lo -1 --hi 1 --points 5 --format json");
  const auto thetas = j.at("thetas").get<std::vector<double>>();
  const auto values = j.at("values").get<std::vector<double>>();
  ASSERT_EQ(thetas.size(), 5u);
  EXPECT_EQ(thetas[2], 0.0);
  EXPECT_NEAR(values[2], 1.5, 1e-9);
  EXPECT_FALSE(j.at("is_constant").get<bool>());
  EXPECT_TRUE(j.at("lambda").is_null());
}

TEST_F(Cli, CurvatureRejectsBadFlags) {
  const auto f = write("b4.json", infogeom::binomial_family(4));
  EXPECT_EQ(run("curvature " + f + " --points 2").exit_code, 2);
  EXPECT_EQ(run("curvature " + f + " --lo 1 --hi -1").exit_code, 2);
  EXPECT_EQ(run("curvature " + f + " --tol 0").exit_code, 2);
  EXPECT_EQ(run("curvature " + f + " --format xml").exit_code, 2);
  EXPECT_EQ(run("curvature " + f + " --points abc").exit_code, 2);
}

TEST_F(Cli, ClassifyBinomialFive) {
  const auto j = run_json("classify " + write("b5.json", infogeom::binomial_family(5)));
  EXPECT_TRUE(j.at("is_constant").get<bool>());
  EXPECT_EQ(j.at("lambda").get<double>(), 0.4);
  EXPECT_EQ(j.at("r").get<double>(), 0.0);
  EXPECT_EQ(j.at("s").get<double>(), 0.0);
  EXPECT_TRUE(j.at("binomial_equivalent").get<bool>());
}

TEST_F(Cli, ClassifyPerturbedBinomial) {
  const auto b = infogeom::binomial_family(5);
  std::vector<double> c(b.c().begin(), b.c().end());
  c[1] += 0.001;
  const infogeom::FiniteExpFamily bumped(c, {b.f().begin(), b.f().end()});
  const auto j = run_json("classify " + write("bumped.json", bumped));
  EXPECT_FALSE(j.at("is_constant").get<bool>());
  EXPECT_FALSE(j.at("binomial_equivalent").get<bool>());
  EXPECT_TRUE(j.at("lambda").is_null());
}

TEST_F(Cli, ClassifyTwoPointFamily) {
  const auto j = run_json("classify " + write("two.json", R"({"C": [0.4, -1.1], "F": [-3, 7]})"));
  EXPECT_TRUE(j.at("is_constant").get<bool>());
  EXPECT_EQ(j.at("lambda").get<double>(), 2.0);
  EXPECT_TRUE(j.at("binomial_equivalent").get<bool>());
}

TEST_F(Cli, EquivRecoversWitness) {
  const infogeom::FiniteExpFamily fam({0.2, -0.4, 1.0, 0.0}, {0.0, 0.7, 1.9, -1.2});
  const infogeom::GroupElement g(-1.5, 0.25, 2.0, -0.75);
  const auto j = run_json("equiv " + write("image.json", infogeom::act(g, fam)) + " " + write("fam.json", fam));
  ASSERT_TRUE(j.at("equivalent").get<bool>());
  const auto w = infogeom::io::group_element_from_json(j.at("witness"));
  EXPECT_NEAR(w.a(), g.a(), 1e-9);
  EXPECT_NEAR(w.b(), g.b(), 1e-9);
  EXPECT_NEAR(w.c(), g.c(), 1e-9);
  EXPECT_NEAR(w.d(), g.d(), 1e-9);
}

TEST_F(Cli, EquivExamples) {
  const auto x = write("x.json", R"({"C": [0, 0, 0], "F": [0, 1, 3]})");
  const auto y = write("y.json", R"({"C": [0, 0, 0], "F": [0, 1, 2]})");
  const auto no = run_json("equiv " + x + " " + y);
  EXPECT_FALSE(no.at("equivalent").get<bool>());
  EXPECT_TRUE(no.at("witness").is_null());

  const auto p = write("p.json", R"({"C": [1, 2], "F": [0, 5]})");
  const auto q = write("q.json", R"({"C": [-3, 0.5], "F": [2, -1]})");
  EXPECT_TRUE(run_json("equiv " + p + " " + q).at("equivalent").get<bool>());
  EXPECT_EQ(run("equiv " + p + " " + x).exit_code, 2);
}

TEST_F(Cli, GenMatchesBinomial) {
  const auto gen = run("gen --p 3 --alpha0 0 --alphap 3 --r 0 --s 0");
  const auto bin = run("binomial --n 3");
  ASSERT_EQ(gen.exit_code, 0);
  ASSERT_EQ(bin.exit_code, 0);
  EXPECT_EQ(gen.out, bin.out);
  ASSERT_EQ(run("gen --p 3 --out " + path("g.json")).exit_code, 0);
  ASSERT_EQ(run("binomial --n 3 --out " + path("b.json")).exit_code, 0);
  EXPECT_EQ(read_file(path("g.json")), read_file(path("b.json")));
  EXPECT_EQ(read_file(path("b.json")), bin.out);
}

TEST_F(Cli, GenRejectsBadParameters) {
  EXPECT_EQ(run("gen --p 3 --alpha0 1 --alphap 1").exit_code, 2);
  EXPECT_EQ(run("gen --p 0").exit_code, 2);
  EXPECT_EQ(run("binomial --n 0").exit_code, 2);
  EXPECT_EQ(run("gen").exit_code, 2);
}

TEST_F(Cli, GeneratedFamilyRoundTrips) {
  ASSERT_EQ(run("gen --p 7 --alpha0 -2 --alphap 5 --r 0.3 --s -1.2 --out " + path("g7.json")).exit_code, 0);
  const auto j = run_json("classify " + path("g7.json"));
  EXPECT_TRUE(j.at("is_constant").get<bool>());
  EXPECT_NEAR(j.at("lambda").get<double>(), 2.0 / 7.0, 1e-9);
  EXPECT_NEAR(j.at("r").get<double>(), 0.3, 1e-9);
  EXPECT_NEAR(j.at("s").get<double>(), -1.2, 1e-9);
}

TEST_F(Cli, SphereCheck) {
  for (int n : {1, 3}) {
    const auto j = run_json("sphere-check --n " + std::to_string(n));
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_LE(j.at("max_defect").get<double>(), 1e-6);
  }
  EXPECT_EQ(run("sphere-check --n 0").exit_code, 2);
  EXPECT_EQ(run("sphere-check --n 2 --grid 1").exit_code, 2);
}

TEST_F(Cli, OutputIsDeterministic) {
  const auto f = write("fam.json", R"({"C": [0.1, 0.2, -0.3, 0.0], "F": [0, 1, 2.5, 4]})");
  for (const std::string cmd : {"info " + f, "curvature " + f, "curvature " + f + " --format json",
                                "classify " + f, std::string("sphere-check --n 2")}) {
    const auto first = run(cmd);
    const auto second = run(cmd);
    EXPECT_EQ(first.exit_code, second.exit_code);
    EXPECT_EQ(first.out, second.out) << cmd;
    EXPECT_FALSE(first.out.empty());
  }
}
