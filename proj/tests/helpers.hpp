#pragma once

#include <random>

#include "oracles.hpp"
#include "smallcx/complex.hpp"

namespace testing_support {

/// Facets with ids compacted to 0..n-1, for the brute-force oracles.
inline oracle::Facets to_raw(const smallcx::SimplicialComplex& k) {
  oracle::Facets out;
  std::array<int, smallcx::kMaxVertices> local{};
  int n = 0;
  for (int v : k.vertex_set().vertices()) local[static_cast<std::size_t>(v)] = n++;
  for (auto f : k.facets()) {
    std::vector<int> g;
    for (int v : f.vertices()) g.push_back(local[static_cast<std::size_t>(v)]);
    out.push_back(g);
  }
  return out;
}

/// A uniformly random relabeling of K's vertices onto the same id set.
inline smallcx::SimplicialComplex shuffle(const smallcx::SimplicialComplex& k, std::mt19937_64& rng) {
  auto ids = k.vertex_set().vertices();
  auto targets = ids;
  std::shuffle(targets.begin(), targets.end(), rng);
  std::array<smallcx::VertexId, smallcx::kMaxVertices> map{};
  for (int i = 0; i < smallcx::kMaxVertices; ++i) map[static_cast<std::size_t>(i)] = static_cast<smallcx::VertexId>(i);
  for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = targets[i];
  return smallcx::relabel(k, map);
}

}  // namespace testing_support
