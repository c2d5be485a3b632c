#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallcx/complex.hpp"
#include "smallcx/isomorphism.hpp"

namespace smallcx {

struct CensusEntry {
  CanonicalForm form;
  /// The canonical complex, labelled 1..n.
  SimplicialComplex complex;
  /// "sphere", "non-sphere", or "homology-sphere" (sphere homology but no
  /// collapsible facet complement was found).
  std::string cls;
};

struct CensusResult {
  /// One entry per isomorphism class, sorted by canonical form.
  std::vector<CensusEntry> entries;
  std::map<std::string, int> counts;
  std::size_t nodes = 0;
  /// Complete complexes found, before isomorphism rejection.
  std::size_t leaves = 0;
  std::size_t isomorph_rejections = 0;
  double seconds = 0;
};

struct EnumerationOptions {
  int threads = 1;
  /// Relabels every seed complex at random before searching. Counts must
  /// not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Combinatorial 2-spheres on exactly n vertices up to isomorphism,
/// 4 <= n <= 8.
CensusResult enumerate_two_spheres(int n, const EnumerationOptions& opt = {});

/// Neighbourly combinatorial 3-manifolds on 9 vertices up to isomorphism.
CensusResult enumerate_neighbourly_9_manifolds(const EnumerationOptions& opt = {});

/// All combinatorial 3-manifolds on 9 vertices (vertex degrees 4..8).
CensusResult enumerate_all_9_manifolds(const EnumerationOptions& opt = {});

/// "sphere", "homology-sphere" or "non-sphere" for a connected closed
/// combinatorial 3-manifold.
std::string classify_3_manifold(const SimplicialComplex& k);

}  // namespace smallcx
