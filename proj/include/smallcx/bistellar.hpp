#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smallcx/complex.hpp"

namespace smallcx {

/// A bistellar i-move: alpha is a (d-i)-face whose link is the boundary of
/// the i-simplex beta, and beta is not a face.
struct BistellarMove {
  Simplex alpha;
  Simplex beta;
  int type = 0;

  friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
};

/// Orders by (alpha, beta) as ascending id tuples.
bool lex_less(const BistellarMove& a, const BistellarMove& b);
/// "alpha={1,5} beta={2,3,4} type=2" with K's display labels.
std::string describe(const SimplicialComplex& k, const BistellarMove& m);

struct Removability {
  bool removable = false;
  std::optional<BistellarMove> move;
  /// Empty when removable; otherwise "not a face", "α is a facet",
  /// "link is not a simplex boundary" or "β is a face".
  std::string reason;
};

/// Tests whether alpha is a removable face of the pure complex K.
Removability check_removable(const SimplicialComplex& k, Simplex alpha);

/// Every i-move on the d-pseudomanifold K, sorted by lex_less.
/// Throws PreconditionError unless 0 < i <= d and K is a pseudomanifold.
std::vector<BistellarMove> removable_faces(const SimplicialComplex& k, int i);
/// All proper moves (0 < i < d) without the pseudomanifold check; the
/// caller vouches for K.
std::vector<BistellarMove> proper_moves_unchecked(const SimplicialComplex& k);

/// Revalidates m and replaces the star of alpha by beta * boundary(alpha).
/// Throws PreconditionError if m is stale.
SimplicialComplex apply_move(const SimplicialComplex& k, const BistellarMove& m);
/// The move undoing m on apply_move(K, m): roles of alpha and beta swap.
BistellarMove inverse_move(const BistellarMove& m, int d);

/// Replaces `facet` by the cone from a new vertex over its boundary.
SimplicialComplex star_vertex(const SimplicialComplex& k, Simplex facet, VertexId fresh, std::string label = {});

/// 1-moves on a 3-manifold whose new edge contains u.
std::vector<BistellarMove> degree_raising_moves(const SimplicialComplex& k, VertexId u);
/// Least 1-move raising the degree of some minimum-degree vertex. Requires a
/// combinatorial 3-manifold on at most 9 vertices with min degree <= n-2.
/// Throws InternalContradiction if no such move exists.
BistellarMove raise_min_degree(const SimplicialComplex& k);

struct Reduction {
  SimplicialComplex result;
  std::vector<BistellarMove> moves;
};
/// Applies raise_min_degree until the complex is neighbourly. Requires a
/// 9-vertex combinatorial 3-manifold.
Reduction neighbourly_reduction(const SimplicialComplex& k);

struct FlipSearch {
  /// false means "not found within the limits", not "unreachable".
  bool found = false;
  /// Moves taking K to a complex isomorphic to L.
  std::vector<BistellarMove> path;
  std::size_t states = 0;
};
/// Bidirectional breadth-first search over proper moves with isomorphism
/// deduplication. `move_budget` bounds the path length, `state_cap` the
/// number of distinct complexes visited.
FlipSearch flip_reachable(const SimplicialComplex& k, const SimplicialComplex& l, int move_budget,
                          std::size_t state_cap);

/// Seeded random combinatorial 3-sphere on `n` vertices: from the boundary
/// of the 4-simplex, random 0-moves and proper moves until n vertices, then
/// `extra_proper` random proper moves.
SimplicialComplex random_sphere3(int n, int extra_proper, std::mt19937_64& rng);
/// Stacked 3-sphere (0-moves only) on n vertices.
SimplicialComplex stacked_sphere3(int n, std::mt19937_64& rng);
/// `count` random proper moves on any pseudomanifold; also returns the moves.
SimplicialComplex random_proper_walk(const SimplicialComplex& k, int count, std::mt19937_64& rng,
                                     std::vector<BistellarMove>* moves = nullptr);

}  // namespace smallcx
