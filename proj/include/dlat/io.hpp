#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlat/birkhoff.hpp"
#include "dlat/diamond.hpp"
#include "dlat/lattice.hpp"
#include "dlat/ncpoly.hpp"
#include "dlat/pseudoroots.hpp"
#include "dlat/quaternion.hpp"

namespace dlat::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Missing files and malformed JSON raise
/// PreconditionError.
Json read_json(const std::filesystem::path& file);

/// { "elements": [names...], "leq": [[i, j], ...] }; the relation is
/// closed reflexively and transitively on load.
FiniteLattice lattice_from_json(const Json& j);
/// Writes the cover pairs as "leq".
Json lattice_to_json(const FiniteLattice& lat);

/// { "lattice": <file>, "arcs": [[top, bottom], ...] }. A relative lattice
/// path is resolved against the directory of the arc file.
struct ArcFile {
  std::filesystem::path lattice;
  std::vector<Arc> arcs;
};
ArcFile arc_file_from_json(const Json& j, const std::filesystem::path& base_dir);
std::vector<Arc> arcs_from_json(const Json& j);
/// Sorted [[top, bottom], ...].
Json arcs_to_json(std::vector<Arc> arcs);

/// { "elements": [...], "leq": [[i, j], ...], "bottom": b, "top": t }.
PointedPoset poset_from_json(const Json& j);
Json poset_to_json(const PointedPoset& p);
Json quasi_order_to_json(const QuasiOrder& q);

/// { "elements": [[a, b, c, d], ...] } with rational strings (or integers).
std::vector<Quaternion> quaternions_from_json(const Json& j);
Json quaternion_to_json(const Quaternion& q);
/// Coefficients by ascending power.
Json poly_to_json(const NCPoly& p);

Json report_to_json(const PseudoRootLattice& pl, const GenerationReport& r);
std::string report_text(const PseudoRootLattice& pl, const GenerationReport& r);

}  // namespace dlat::io
