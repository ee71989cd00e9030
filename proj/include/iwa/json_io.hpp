#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "iwa/curves.hpp"
#include "iwa/fitting.hpp"
#include "iwa/ideal.hpp"
#include "iwa/theta.hpp"

namespace iwa {

// On-disk formats.  All integers may be given either as JSON numbers or as
// decimal strings; output always uses numbers.  Every loader throws
// DataError with a descriptive message on malformed input.
//
//   tower:        {"p", "M", "ap", "levels": [[c...], ...], "seed"?}
//   stabilized:   {"p", "M", "alpha", "levels": [[c...], ...]}
//   presentation: {"p", "M", "n", "rows", "cols",
//                  "entries": [[{"n", "coeffs"}, ...], ...]}
//   ideal:        {"p", "M", "n", "generators": [[c...], ...]}
//   curve:        {"a1", "a2", "a3", "a4", "a6", "N", "label"?}
//   field:        {"D_K"}

struct TowerFile {
    ThetaTower tower;
    std::optional<std::uint64_t> seed;
};

nlohmann::json tower_to_json(const ThetaTower& tower, std::optional<std::uint64_t> seed);
TowerFile tower_from_json(const nlohmann::json& j);

nlohmann::json stabilized_to_json(const StabilizedTower& s);
StabilizedTower stabilized_from_json(const nlohmann::json& j);

nlohmann::json presentation_to_json(const PresentationMatrix& m);
PresentationMatrix presentation_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const IdealHandle& ideal);
IdealHandle ideal_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const CurveSpec& curve);
CurveSpec curve_from_json(const nlohmann::json& j);

nlohmann::json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace iwa
