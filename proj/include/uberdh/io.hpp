#pragma once

// Reading complexes and graphs, writing results as JSON or plain text, and
// the on-disk cache of subset homology groups.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uberdh/complex.hpp"
#include "uberdh/domination.hpp"
#include "uberdh/group.hpp"
#include "uberdh/verify.hpp"

namespace uberdh {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// JSON {"m": .., "facets": [[..], ..]} or text with one facet per line.
/// In text form m is the largest vertex plus one unless `vertices` is given.
SimplicialComplex parse_complex(const std::string& text, std::optional<int> vertices = std::nullopt);

/// Edge list: JSON {"n": .., "edges": [[u, v], ..]} or text lines "u v"
/// (an optional first line "n <count>" fixes the vertex count).
Graph parse_graph(const std::string& text);

Json complex_json(const SimplicialComplex& k);

Json group_json(const GroupClass& g);  // {"rank": .., "torsion": [..]}
Json graded_json(const GradedGroup& g);
Json subsets_json(const std::vector<GradedGroup>& groups);
Json uber_json(const TriGradedTable& t);
Json zero_degree_json(const BigradedTable& t);
Json double_json(const BigradedTable& dh);
Json page_json(const std::string& variant, int page, const BigradedTable& entries);
Json polynomial_json(const IntPolynomial& p);
Json report_json(const VerificationReport& r);

std::string graded_text(const GradedGroup& g);
std::string subsets_text(const std::vector<GradedGroup>& groups);
std::string uber_text(const TriGradedTable& t);
std::string zero_degree_text(const BigradedTable& t);
std::string double_text(const BigradedTable& dh);
std::string page_text(const std::string& variant, int page, const BigradedTable& entries);
std::string report_text(const VerificationReport& r);

/// FNV-1a over m and the facets in canonical order.
std::uint64_t complex_hash(const SimplicialComplex& k);

/// Groups of K[I] for every I, indexed by the bitmask of I.
using SubsetGroups = std::vector<GradedGroup>;

/// File inside `directory` holding the cache for this complex and variant.
std::string cache_file(const std::string& directory, const SimplicialComplex& k, Coefficients coeffs, bool reduced);

void save_cache(const std::string& path, const SimplicialComplex& k, Coefficients coeffs, bool reduced,
                const SubsetGroups& groups);
/// Empty when the file is missing or keyed to a different complex,
/// coefficient choice or variant.
std::optional<SubsetGroups> load_cache(const std::string& path, const SimplicialComplex& k, Coefficients coeffs,
                                       bool reduced);

}  // namespace uberdh
