// Command-line front end. Payloads (JSON or CSV) go to stdout, diagnostics to
// stderr. Exit codes: 0 success, 2 invalid input, 3 computation failure.

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "infogeom/classification.hpp"
#include "infogeom/curvature.hpp"
#include "infogeom/equivalence.hpp"
#include "infogeom/errors.hpp"
#include "infogeom/io.hpp"
#include "infogeom/kahler.hpp"

namespace {

using infogeom::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCompute = 3;
constexpr double kSphereTolerance = 1e-6;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_family(const infogeom::FiniteExpFamily& fam, const std::string& out) {
  if (out.empty()) {
    std::cout << infogeom::io::family_text(fam);
  } else {
    infogeom::io::save_family(fam, out);
  }
}

int run_info(const std::string& path) {
  const auto fam = infogeom::io::load_family(path);
  const auto range = infogeom::f_range(fam);
  const auto red = infogeom::reduce(fam);
  emit(json{{"m", fam.size_m()},
            {"F_min", range.f_min},
            {"F_max", range.f_max},
            {"levels", red.p + 1},
            {"psi0", infogeom::log_partition(fam, 0.0)},
            {"eta0", infogeom::expectation_parameter(fam, 0.0)},
            {"fisher0", infogeom::fisher_metric(fam, 0.0)}});
  return kExitOk;
}

struct CurvatureArgs {
  std::string path;
  std::optional<double> lo;
  std::optional<double> hi;
  std::size_t points = infogeom::kDefaultGridPoints;
  double tol = infogeom::kDefaultConstancyTol;
  std::string format = "csv";
};

int run_curvature(const CurvatureArgs& args) {
  const auto fam = infogeom::io::load_family(args.path);
  auto grid = infogeom::default_grid(fam);
  if (args.lo) grid.lo = *args.lo;
  if (args.hi) grid.hi = *args.hi;
  grid.n_points = args.points;
  grid.tol = args.tol;
  const auto report = infogeom::curvature_profile(fam, grid);
  if (args.format == "json") {
    emit(infogeom::io::to_json(report));
  } else {
    std::cout << infogeom::io::to_csv(report);
  }
  return kExitOk;
}

int run_classify(const std::string& path, double tol, double level_tol) {
  const auto fam = infogeom::io::load_family(path);
  const auto result = infogeom::classify_constant_curvature(fam, tol, level_tol);
  const bool binomial = infogeom::reduced_equivalent_to_binomial(fam, tol, level_tol);
  if (binomial != result.is_constant) {
    std::cerr << "warning: level conditions and binomial equivalence disagree at tol " << tol
              << "; the level conditions decide is_constant\n";
  }
  auto j = infogeom::io::to_json(result);
  j["binomial_equivalent"] = binomial;
  emit(j);
  return kExitOk;
}

int run_equiv(const std::string& path1, const std::string& path2, double tol) {
  const auto fam1 = infogeom::io::load_family(path1);
  const auto fam2 = infogeom::io::load_family(path2);
  const auto witness = infogeom::are_equivalent(fam1, fam2, tol);
  emit(json{{"equivalent", witness.has_value()},
            {"witness", witness ? infogeom::io::to_json(*witness) : json(nullptr)}});
  return kExitOk;
}

int run_sphere_check(int n, int grid, double step) {
  if (grid < 2) throw infogeom::InvalidInput("--grid must be at least 2");
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double q = -2.0 + 4.0 * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double r = 4.0 * std::numbers::pi * j / grid;
      worst = std::max(worst, infogeom::sphere_isometry_defect(n, {q, r}, step));
    }
  }
  const bool ok = worst <= kSphereTolerance;
  emit(json{{"n", n}, {"grid", grid}, {"max_defect", worst}, {"tolerance", kSphereTolerance}, {"ok", ok}});
  if (!ok) std::cerr << "sphere map is not a local isometry within " << kSphereTolerance << '\n';
  return ok ? kExitOk : kExitCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information geometry of one-parameter exponential families on finite sets"};
  app.require_subcommand(1);

  std::string file;
  auto* info = app.add_subcommand("info", "Summary of a family at theta = 0");
  info->add_option("family", file, "Family JSON file {\"C\": [...], \"F\": [...]}")->required();

  CurvatureArgs curv;
  auto* curvature = app.add_subcommand("curvature", "Sample the Hessian scalar curvature on a grid");
  curvature->add_option("family", curv.path, "Family JSON file")->required();
  curvature->add_option("--lo", curv.lo, "Grid start (default -30/(F_max - F_min))");
  curvature->add_option("--hi", curv.hi, "Grid end (default 30/(F_max - F_min))");
  curvature->add_option("--points", curv.points, "Number of grid points, at least 3")->capture_default_str();
  curvature->add_option("--tol", curv.tol, "Constancy tolerance")->capture_default_str();
  curvature->add_option("--format", curv.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  double classify_tol = infogeom::kDefaultClassifyTol;
  double level_tol = infogeom::kDefaultLevelTol;
  auto* classify = app.add_subcommand("classify", "Exact constant-curvature test");
  classify->add_option("family", file, "Family JSON file")->required();
  classify->add_option("--tol", classify_tol, "Residual tolerance")->capture_default_str();
  classify->add_option("--level-tol", level_tol, "Relative tolerance for merging F levels")
      ->capture_default_str();

  std::string file2;
  double equiv_tol = infogeom::kDefaultEquivalenceTol;
  auto* equiv = app.add_subcommand("equiv", "Search for g with g . family2 = family1");
  equiv->add_option("family1", file, "First family JSON file")->required();
  equiv->add_option("family2", file2, "Second family JSON file")->required();
  equiv->add_option("--tol", equiv_tol, "Componentwise tolerance")->capture_default_str();

  int gen_p = 0;
  double alpha0 = 0.0;
  std::optional<double> alphap;
  double gen_r = 0.0;
  double gen_s = 0.0;
  std::string out;
  auto* gen = app.add_subcommand("gen", "Write a constant-curvature family");
  gen->add_option("--p", gen_p, "Number of levels minus one")->required();
  gen->add_option("--alpha0", alpha0, "Lowest level")->capture_default_str();
  gen->add_option("--alphap", alphap, "Highest level (default p)");
  gen->add_option("--r", gen_r, "Weight slope of the top level")->capture_default_str();
  gen->add_option("--s", gen_s, "Weight slope of the bottom level")->capture_default_str();
  gen->add_option("--out", out, "Output file (default stdout)");

  int binom_n = 0;
  auto* binomial = app.add_subcommand("binomial", "Write the binomial family B(n)");
  binomial->add_option("--n", binom_n, "Number of trials")->required();
  binomial->add_option("--out", out, "Output file (default stdout)");

  int sphere_n = 0;
  int sphere_grid = 5;
  double sphere_step = 1e-5;
  auto* sphere = app.add_subcommand("sphere-check", "Check the B(n) sphere covering is a local isometry");
  sphere->add_option("--n", sphere_n, "Number of trials")->required();
  sphere->add_option("--grid", sphere_grid, "Points per axis on [-2,2] x [0,4 pi)")->capture_default_str();
  sphere->add_option("--step", sphere_step, "Finite-difference step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*info) return run_info(file);
    if (*curvature) return run_curvature(curv);
    if (*classify) return run_classify(file, classify_tol, level_tol);
    if (*equiv) return run_equiv(file, file2, equiv_tol);
    if (*gen) {
      write_family(infogeom::make_constant_curvature_family(gen_p, alpha0, alphap.value_or(gen_p), gen_r, gen_s),
                   out);
      return kExitOk;
    }
    if (*binomial) {
      write_family(infogeom::binomial_family(binom_n), out);
      return kExitOk;
    }
    if (*sphere) return run_sphere_check(sphere_n, sphere_grid, sphere_step);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitInvalid;
}
