#include "infogeom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "infogeom/errors.hpp"

namespace infogeom::io {

namespace {

std::vector<double> finite_array(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing key \"") + key + "\"");
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw InvalidInput(std::string("key \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& v = arr[k];
    if (!v.is_number() || !std::isfinite(v.get<double>())) {
      throw InvalidInput(std::string("key \"") + key + "\": entry " + std::to_string(k) +
                         " is not a finite number");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json matrix(const Mat2& m) { return json::array({json::array({m[0][0], m[0][1]}), json::array({m[1][0], m[1][1]})}); }

}  // namespace

FiniteExpFamily family_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("family must be a JSON object with keys \"C\" and \"F\"");
  auto c = finite_array(j, "C");
  auto f = finite_array(j, "F");
  if (c.size() != f.size()) {
    throw InvalidInput("key \"C\" has " + std::to_string(c.size()) + " entries but key \"F\" has " +
                       std::to_string(f.size()));
  }
  if (f.size() < 2) throw InvalidInput("key \"F\": need at least 2 entries");
  return FiniteExpFamily(std::move(c), std::move(f));
}

FiniteExpFamily parse_family(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return family_from_json(j);
}

FiniteExpFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_family(buf.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

json to_json(const FiniteExpFamily& fam) {
  return json{{"C", std::vector<double>(fam.c().begin(), fam.c().end())},
              {"F", std::vector<double>(fam.f().begin(), fam.f().end())}};
}

std::string family_text(const FiniteExpFamily& fam) { return to_json(fam).dump(2) + "\n"; }

void save_family(const FiniteExpFamily& fam, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << family_text(fam);
}

json to_json(const CurvatureReport& report) {
  return json{{"thetas", report.thetas},
              {"values", report.values},
              {"is_constant", report.is_constant},
              {"lambda", optional_number(report.lambda)},
              {"max_deviation", report.max_deviation},
              {"tolerance", report.tolerance}};
}

std::string to_csv(const CurvatureReport& report) {
  std::string out = "theta,scal\n";
  char line[64];
  for (std::size_t i = 0; i < report.thetas.size(); ++i) {
    std::snprintf(line, sizeof line, "%.12g,%.12g\n", report.thetas[i], report.values[i]);
    out += line;
  }
  return out;
}

json to_json(const ClassificationResult& result) {
  return json{{"is_constant", result.is_constant}, {"p", result.p},
              {"lambda", optional_number(result.lambda)}, {"r", optional_number(result.r)},
              {"s", optional_number(result.s)}, {"residual", result.residual}};
}

json to_json(const GroupElement& g) {
  return json{{"a", g.a()}, {"b", g.b()}, {"c", g.c()}, {"d", g.d()}};
}

GroupElement group_element_from_json(const json& j) {
  auto num = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
      throw InvalidInput(std::string("key \"") + key + "\" must be a number");
    }
    return j.at(key).get<double>();
  };
  return {num("a"), num("b"), num("c"), num("d")};
}

json to_json(const CanonicalClass& cls) { return json{{"base", cls.base}, {"direction", cls.direction}}; }

json to_json(const TensorFrame& frame) {
  return json{{"metric", matrix(frame.metric)},
              {"J", matrix(frame.complex_structure)},
              {"omega", matrix(frame.form)},
              {"ricci", matrix(frame.ricci)}};
}

}  // namespace infogeom::io
