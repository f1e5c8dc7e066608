#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "infogeom/classification.hpp"
#include "infogeom/curvature.hpp"
#include "infogeom/equivalence.hpp"
#include "infogeom/family.hpp"
#include "infogeom/kahler.hpp"

// JSON and CSV forms of the library types. Parsing failures surface as
// InvalidInput with a message naming the offending key.
namespace infogeom::io {

using nlohmann::json;

/// {"C": [...], "F": [...]}: equal-length arrays of finite numbers, length >= 2.
FiniteExpFamily family_from_json(const json& j);
FiniteExpFamily parse_family(std::string_view text);
FiniteExpFamily load_family(const std::filesystem::path& path);

json to_json(const FiniteExpFamily& fam);
/// Two-space indented JSON with a trailing newline.
std::string family_text(const FiniteExpFamily& fam);
void save_family(const FiniteExpFamily& fam, const std::filesystem::path& path);

json to_json(const CurvatureReport& report);
/// Header "theta,scal", 12 significant digits.
std::string to_csv(const CurvatureReport& report);

json to_json(const ClassificationResult& result);
json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);
json to_json(const CanonicalClass& cls);
json to_json(const TensorFrame& frame);

}  // namespace infogeom::io
