#pragma once

#include <liepair/cohomology.hpp>
#include <liepair/deform.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>

namespace liepair::io {

using nlohmann::json;

/// Reads and parses a JSON file; throws ParseError.
json read_json_file(const std::filesystem::path& path);

json to_json(const ArtinAlgebra& alg);
ArtinAlgebra artin_from_json(const json& j);
/// Built-in name or path to a JSON file.
ArtinAlgebra resolve_algebra(std::string_view ref);

json to_json(const LieAlgebra& lie);
LieAlgebra lie_from_json(const json& j);
json to_json(const LiePair& pair);
LiePair pair_from_json(const json& j);
/// Catalog name or path to a JSON file.
LiePair resolve_pair(std::string_view ref);

json to_json(const OmegaElement& x);
OmegaElement omega_from_json(const LiePair& pair, const json& j);

/// {algebra, components:[{m_index, omega}]}, zero components omitted.
json to_json(const AOmega& xi);
/// Uses the algebra named or inlined in the document when present, else `fallback`.
AOmega aomega_from_json(const LiePair& pair, const json& j, const std::optional<ArtinAlgebra>& fallback);

json to_json(const GaugeParameter& delta);
GaugeParameter gauge_from_json(const LiePair& pair, const json& j, const std::optional<ArtinAlgebra>& fallback);

json to_json(const SmallAutomorphism& pi);
json to_json(const CohomologyReport& report);

}  // namespace liepair::io
