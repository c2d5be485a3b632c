#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallcx/complex.hpp"

namespace smallcx {

/// A yes/no answer with the face that refutes it when the answer is no.
struct Verdict {
  bool value = false;
  std::optional<Simplex> witness;
  std::string reason;

  explicit operator bool() const { return value; }
  static Verdict yes() { return {true, std::nullopt, {}}; }
  static Verdict no(Simplex face, std::string why) { return {false, face, std::move(why)}; }
};

struct Witness {
  std::string property;
  Simplex face;
};

struct RecognitionReport {
  bool is_pure = false;
  bool is_pseudomanifold = false;
  bool is_closed_surface = false;
  bool is_two_sphere = false;
  bool is_three_manifold = false;
  bool is_neighbourly = false;
  /// One entry for every false field.
  std::vector<Witness> witnesses;
};

RecognitionReport recognize(const SimplicialComplex& k);

Verdict is_pure(const SimplicialComplex& k);
/// Pure, every ridge in exactly two facets, facet-adjacency graph connected.
Verdict is_pseudomanifold(const SimplicialComplex& k);
/// Connected closed surface: every edge in two triangles, vertex links are
/// single cycles. Throws PreconditionError unless dim(K) = 2.
Verdict is_closed_surface(const SimplicialComplex& k);
/// Closed surface with Euler characteristic 2. Throws unless dim(K) = 2.
Verdict is_two_sphere(const SimplicialComplex& k);
/// Every vertex link is a 2-sphere. Throws unless dim(K) = 3.
Verdict is_combinatorial_3_manifold(const SimplicialComplex& k);
/// Complete 1-skeleton (every pair of vertices spans an edge).
Verdict is_neighbourly(const SimplicialComplex& k);
bool is_connected(const SimplicialComplex& k);

/// An elementary collapse: remove the free face and its unique coface.
struct Collapse {
  Simplex free_face;
  Simplex coface;
};

struct CollapseResult {
  bool collapsible = false;
  /// A full sequence ending at a single vertex, when collapsible.
  std::vector<Collapse> sequence;
  /// Search states visited (exhaustive backtracking with memoisation).
  std::size_t states = 0;
};

/// Exhaustive search over free-face choices. Throws PreconditionError for
/// more than 8 vertices.
CollapseResult is_collapsible(const SimplicialComplex& k);
/// Replays `seq` on K; true iff every step is a legal elementary collapse
/// and a single vertex remains.
bool replay_collapse(const SimplicialComplex& k, const std::vector<Collapse>& seq);

struct SphereCertificate {
  /// True means a facet with collapsible complement was found. False means
  /// only that no certificate exists, not that X is not a sphere.
  bool certified = false;
  std::optional<Simplex> facet;
  std::vector<Collapse> collapse;
};

/// Requires a connected combinatorial 3-manifold.
SphereCertificate certify_sphere_via_complement(const SimplicialComplex& x);

/// Vertices whose link is not a 2-sphere. Requires a 3-pseudomanifold.
std::vector<VertexId> singular_vertices(const SimplicialComplex& k);

}  // namespace smallcx
