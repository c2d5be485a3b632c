#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallcx/complex.hpp"
#include "smallcx/isomorphism.hpp"
#include "smallcx/permutation.hpp"

namespace smallcx {

// ---------------------------------------------------------------------------
// Candidate graph of a 2-sphere and its maximal cocliques
// ---------------------------------------------------------------------------

/// Nodes are the 4-subsets of V(X) holding one or two triangles of X; two
/// nodes are adjacent when they share a triangle of X.
struct CandidateGraph {
  SimplicialComplex base;
  /// Sorted by lex_less.
  std::vector<Simplex> nodes;
  /// adjacency[i] has bit j set iff nodes i and j share a triangle.
  std::vector<std::uint64_t> adjacency;
  /// Triangles of X inside each node (1 or 2).
  std::vector<int> triangle_count;

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
  [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const { return (adjacency[i] >> j) & 1u; }
  [[nodiscard]] std::optional<std::size_t> index_of(Simplex node) const;
};

/// Requires a 2-sphere on at most 16 vertices with at most 64 nodes.
CandidateGraph candidate_graph(const SimplicialComplex& x);

/// Node count of the candidate graph. Requires a 2-sphere with k >= 5.
int alpha(const SimplicialComplex& x);
/// (k-2)(2k-9). Throws PreconditionError for k < 5, where the closed form
/// does not describe the count.
long long alpha_formula(int k);

/// Node-index bitmask of a coclique.
using NodeSet = std::uint64_t;

/// Every maximal independent set of g, as ascending bitmasks. Root branches
/// of the pivoting Bron-Kerbosch search are spread over `threads` workers.
std::vector<NodeSet> maximal_cocliques(const CandidateGraph& g, int threads = 1);

Family to_family(const CandidateGraph& g, NodeSet s);
bool is_independent(const CandidateGraph& g, const Family& f);
/// Independent, made of nodes, and every other node is adjacent to a member.
bool is_maximal_coclique(const CandidateGraph& g, const Family& f);
/// Every triangle of X lies in exactly one member.
bool covers_triangles_once(const CandidateGraph& g, const Family& f);

struct CocliqueCensus {
  std::uint64_t group_order = 0;
  /// size -> every maximal coclique of that size.
  std::map<int, std::vector<Family>> by_size;
  /// size -> Aut(X)-orbits of by_size[size].
  std::map<int, std::vector<OrbitClass>> orbit_reps;
  /// The subfamily whose members cover every triangle exactly once; these
  /// are the configurations a facet set around a vertex can realise.
  std::map<int, std::vector<Family>> admissible;
  std::map<int, std::vector<OrbitClass>> admissible_orbits;
};

/// Maximal cocliques with size in [min_size, max_size], with orbit
/// representatives. Requires a 2-sphere on 5..7 vertices.
CocliqueCensus coclique_census(const SimplicialComplex& x, int min_size = 1, int max_size = 64,
                               int threads = 1);

// ---------------------------------------------------------------------------
// Reference case lists
// ---------------------------------------------------------------------------

struct ReferenceCase {
  std::string label;
  Family members;
};

/// Published labels for one catalog sphere, in that sphere's vertex ids.
struct ReferenceCases {
  std::string sphere;
  /// Node list in reference order (empty when none is given).
  std::vector<Simplex> nodes;
  std::vector<Permutation> generators;
  std::vector<ReferenceCase> cases;
};

/// Parsed from the shipped case file, one entry per sphere (S2..S9).
const std::vector<ReferenceCases>& reference_cases();
/// Throws PreconditionError for names without a table.
const ReferenceCases& reference_cases(const std::string& sphere);

struct CaseMatch {
  std::string label;
  int size = 0;
  bool independent = false;
  bool maximal = false;
  bool admissible = false;
  /// Index into census.admissible_orbits[size], when admissible.
  std::optional<std::size_t> orbit;
  /// Earlier label in the same orbit, if any.
  std::optional<std::string> duplicate_of;
};

struct CaseReport {
  std::string sphere;
  int vertices = 0;
  CocliqueCensus census;
  std::optional<bool> node_list_matches;
  /// Whether the listed generators are automorphisms generating Aut(X).
  std::optional<bool> generators_match;
  std::vector<CaseMatch> matches;
  /// Sizes whose counts are compared (5 and 6 for seven vertices, all
  /// sizes otherwise).
  std::vector<int> compared_sizes;
  std::map<int, int> expected_orbits;
  std::map<int, int> computed_orbits;
  /// (size, orbit index) pairs that no listed case reaches.
  std::vector<std::pair<int, std::size_t>> unmatched_orbits;
  bool pass = false;
};

/// Recomputes the census for a catalog sphere and compares it with its
/// reference table: counts, per-case validity, and a bijection between
/// cases and admissible orbits.
CaseReport check_reference_cases(const std::string& sphere, int threads = 1);

// ---------------------------------------------------------------------------
// Neighbourly 9-vertex 3-manifolds
// ---------------------------------------------------------------------------

struct FacetDegreeEntry {
  Simplex facet;
  /// Sum of deg(e) over the six edges of the facet.
  int degree_sum = 0;
  /// Facets sharing no vertex with this one.
  int disjoint_facets = 0;
  std::optional<Simplex> disjoint_partner;
};

struct FacetDegreeLedger {
  std::vector<FacetDegreeEntry> entries;
  /// Edge degree -> number of edges (the epsilon_i).
  std::map<int, int> edge_degrees;
  long long edge_total = 0;
  long long weighted_total = 0;
  /// degree_sum - 28 equals disjoint_facets for every facet. This
  /// inclusion-exclusion count holds for any neighbourly 9-vertex
  /// 3-manifold.
  bool count_identity_holds = false;
  /// At most one disjoint facet each, so every sum is 29 with a partner and
  /// 28 without.
  bool dichotomy_holds = false;
};

/// Requires a neighbourly 9-vertex combinatorial 3-manifold.
FacetDegreeLedger facet_degree_ledger(const SimplicialComplex& k);

/// The counting argument when no two facets are disjoint and every edge
/// degree is 3, 4 or 5.
struct AllTwentyEight {
  /// Sorted degree 6-tuples with entries in {3,4,5} summing to 28.
  std::vector<std::vector<int>> facet_types;
  /// Unique solution of e3+e4+e5 = 36, 3e3+4e4+5e5 = 162, 3e3+4e4 = 27.
  long long e3 = 0, e4 = 0, e5 = 0;
  bool integral = false;
};
AllTwentyEight all_twenty_eight_system();

struct ComplementEntry {
  Simplex facet;
  /// Padded to four entries.
  std::vector<long long> f_vector;
  long long euler = 0;
  bool collapsible = false;
  bool ok = false;
};
struct ComplementReport {
  std::vector<ComplementEntry> entries;
  bool pass = false;
};
/// Every facet complement has f-vector (5,10,7,1) or (5,10,6,0), Euler
/// characteristic 1, and is not collapsible. Requires a neighbourly
/// 9-vertex combinatorial 3-manifold.
ComplementReport verify_complement_dichotomy(const SimplicialComplex& k);

struct GoodVertex {
  VertexId vertex;
  std::vector<std::pair<Simplex, Simplex>> partitions;
};
/// Vertices whose complement splits into two facets. Requires a 9-vertex
/// combinatorial 3-manifold.
std::vector<GoodVertex> good_vertices(const SimplicialComplex& k);
/// Unordered pairs of disjoint facets.
std::vector<std::pair<Simplex, Simplex>> disjoint_facet_pairs(const SimplicialComplex& k);

struct GoodLinkReport {
  std::vector<GoodVertex> good;
  std::size_t partition_count = 0;
  std::size_t disjoint_pairs = 0;
  /// Per good vertex: link isomorphic to calS / to calT.
  std::vector<bool> link_is_cal_s;
  std::vector<bool> link_is_cal_t;
  bool pass = false;
};
GoodLinkReport verify_good_vertex_links(const SimplicialComplex& k);

struct DisjointLinkEntry {
  Simplex first;
  Simplex second;
  VertexId leftover;
  /// The facet of the pair examined, and whether lk(leftover) restricted to
  /// it is a 3-cycle plus one isolated vertex.
  Simplex side;
  bool ok = false;
};
struct DisjointLinkReport {
  std::vector<DisjointLinkEntry> entries;
  bool pass = false;
};
/// Requires a pure 3-dimensional neighbourly complex on 9 vertices; the
/// manifold condition is not checked so damaged inputs can be diagnosed.
DisjointLinkReport verify_disjoint_facet_links(const SimplicialComplex& k);

}  // namespace smallcx
