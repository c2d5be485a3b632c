#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smallcx/complex.hpp"
#include "smallcx/permutation.hpp"

namespace smallcx {

/// Relabeling-invariant encoding of a complex. Two complexes have equal
/// `bytes` exactly when they are isomorphic.
struct CanonicalForm {
  /// Vertex count, then the canonically relabeled facets (sorted, 2 bytes
  /// each, big-endian).
  std::vector<std::uint8_t> bytes;
  /// original id -> canonical id; 0xFF for ids not in the complex.
  std::array<VertexId, kMaxVertices> relabeling{};

  [[nodiscard]] std::string hex() const;
  /// 64-bit FNV-1a of `bytes`, as 16 hex digits. Handy as a dictionary key.
  [[nodiscard]] std::string digest() const;
  /// The canonical complex itself (ids 0..n-1, no labels).
  [[nodiscard]] SimplicialComplex complex() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes < b.bytes; }
};

CanonicalForm canonical_form(const SimplicialComplex& k);

struct IsomorphismResult {
  bool isomorphic = false;
  /// K id -> L id, verified facet by facet. Set only when isomorphic.
  std::optional<std::array<VertexId, kMaxVertices>> witness;
};

IsomorphismResult are_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l);

/// Full simplicial automorphism group, acting on K's vertex ids.
PermutationGroup automorphism_group(const SimplicialComplex& k);

/// A family of vertex sets (an edge, a coclique of 4-sets, ...). Kept sorted.
using Family = std::vector<Simplex>;

Family normalize_family(Family f);
Family image_of(const Permutation& p, const Family& f);

struct OrbitClass {
  /// Lexicographically least family in the orbit.
  Family representative;
  /// Indices of the input objects lying in this orbit, ascending.
  std::vector<std::size_t> members;
  /// Size of the whole orbit, including images absent from the input.
  std::size_t orbit_size = 0;
};

/// Partitions `objects` into G-orbits. Classes are sorted by representative.
/// Throws PreconditionError if an object uses a point outside G's domain.
std::vector<OrbitClass> orbits(const PermutationGroup& g, const std::vector<Family>& objects);

/// Short description like "order 18, non-abelian, dihedral-like". This is a
/// heuristic label, not a certified isomorphism type.
std::string describe_group(const PermutationGroup& g);

}  // namespace smallcx
