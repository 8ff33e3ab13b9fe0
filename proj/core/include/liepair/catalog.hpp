#pragma once

#include <liepair/lie.hpp>

#include <optional>

namespace liepair {

struct CatalogEntry {
  std::string name;
  LiePair pair;
  std::string note;
  std::optional<std::size_t> h1_ce;    // golden dim H^1_CE
  std::optional<std::size_t> h1_weak;  // golden dim H^1 of the extended algebra
};

/// Named entries: b3, b3_twisted, sl2_borel, sl3_h_e12, aff1, heis3_center, abelian_<n>_<r>.
/// Throws ParseError for unknown names.
CatalogEntry catalog_entry(std::string_view name);
inline LiePair catalog_pair(std::string_view name) { return catalog_entry(name).pair; }

/// The fixed list shown by `liepair catalog` and swept by the test suites.
std::vector<std::string> catalog_names();

/// dual, t^k (K[t]/(t^k)), m2x<r> (r variables, square-zero). Throws ParseError.
ArtinAlgebra algebra_by_name(std::string_view name);

/// The upper-triangular 3 x 3 matrices with basis e11, e12, e13, e22, e23, e33.
LieAlgebra b3_algebra();

}  // namespace liepair
