#ifndef VWSERIES_SERIALIZE_HPP
#define VWSERIES_SERIALIZE_HPP

// JSON encodings of the library's value types, plus the bundled surface
// presets. Every rational travels as a "num/den" string (integers as plain
// "num") — never as a float — so serialization round-trips exactly.
//
// QSeries:  {"step_den": D, "order": O, "terms": [[k, "num/den"], ...]}
//           with terms sorted by ascending scaled exponent k; the series is
//           sum of c * q^(k/D) plus O(q^(O/D)).
// Surface:  {"name": ..., "gram": [[...]], "h": [...], "k": [...],
//            "h01": ..., "h02": ..., "h0K": ..., "chiO": ..., "eulS": ...}

#include <string>
#include <vector>

#include <json.hpp>

#include <vwseries/qseries.hpp>
#include <vwseries/surface.hpp>

namespace vwseries {

nlohmann::json qseries_to_json(const QSeries& a);
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json surface_to_json(const SurfaceData& s);
SurfaceData surface_from_json(const nlohmann::json& j);

// Bundled presets: "k3" (the even rank-one lattice, trivial canonical
// class) and "gt2"/"gt3"/"gt4" (minimal general-type data with canonical
// class 3H and two-form space of the stated dimension). The same data ships
// in data/surfaces.json for reference and user editing.
std::vector<std::string> preset_names();
SurfaceData surface_preset(const std::string& name);

// Resolves --surface arguments: an existing file path wins (same schema as
// the presets), then preset names; anything else throws.
SurfaceData load_surface(const std::string& name_or_path);

}  // namespace vwseries

#endif  // VWSERIES_SERIALIZE_HPP
