#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallcx/simplex.hpp"

namespace smallcx {

/// Display labels indexed by vertex id. Empty entries print as the id.
using LabelMap = std::array<std::string, kMaxVertices>;

/// f_i = number of i-dimensional faces, i = 0..dim.
struct FVector {
  std::vector<long long> counts;

  [[nodiscard]] long long euler_characteristic() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

std::string to_string(const FVector& f);

/// An immutable finite simplicial complex, stored as its antichain of
/// maximal faces. Faces of every dimension are generated lazily and cached;
/// copies share the cache, so passing complexes around by value is cheap.
///
/// Vertex ids need not be dense (links and vertex-deleting moves keep the
/// parent's ids); normalized() compacts them.
class SimplicialComplex {
 public:
  /// The empty complex (zero facets). This is how an empty link is returned.
  SimplicialComplex();

  /// Antichain-reduces and sorts `facets`. Throws PreconditionError on an
  /// empty simplex.
  static SimplicialComplex from_simplices(std::vector<Simplex> facets, LabelMap labels = {});

  [[nodiscard]] const std::vector<Simplex>& facets() const { return facets_; }
  [[nodiscard]] Simplex vertex_set() const { return vertices_; }
  [[nodiscard]] int vertex_count() const { return vertices_.size(); }
  /// -1 for the empty complex.
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] bool empty() const { return facets_.empty(); }
  [[nodiscard]] bool is_pure() const;

  [[nodiscard]] bool has_face(Simplex s) const;
  [[nodiscard]] bool has_facet(Simplex s) const;

  /// All i-faces sorted by bitmask; empty span for i outside [0, dim].
  [[nodiscard]] std::span<const Simplex> faces_of_dim(int i) const;
  [[nodiscard]] FVector f_vector() const;

  [[nodiscard]] const LabelMap& labels() const { return *labels_; }
  [[nodiscard]] std::string label(int v) const;
  [[nodiscard]] SimplicialComplex with_labels(LabelMap labels) const;
  /// Id of the vertex displayed as `label`; throws PreconditionError if absent.
  [[nodiscard]] VertexId vertex_of(std::string_view label) const;
  /// Vertex set from display labels, e.g. {"1","5"}.
  [[nodiscard]] Simplex simplex_of(std::initializer_list<std::string_view> labels) const;
  [[nodiscard]] Simplex simplex_of(const std::vector<std::string>& labels) const;
  /// Returns "{1,5}" using display labels.
  [[nodiscard]] std::string format(Simplex s) const;

  /// Relabels ids to 0..n-1 preserving their order; labels follow.
  [[nodiscard]] SimplicialComplex normalized() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  struct FaceCache {
    std::once_flag once;
    std::vector<std::vector<Simplex>> by_dim;
  };

  std::vector<Simplex> facets_;
  Simplex vertices_;
  int dim_ = -1;
  std::shared_ptr<const LabelMap> labels_;
  std::shared_ptr<FaceCache> cache_;
};

/// Builds a complex from facets written with display labels. Labels are
/// mapped to ids in natural order (numeric labels numerically first, then
/// the rest lexicographically), so "1".."9" become ids 0..8.
SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_list);
SimplicialComplex from_facets(const std::vector<std::vector<int>>& facet_list);

/// Natural label order used by from_facets.
bool natural_label_less(const std::string& a, const std::string& b);

/// Throws PreconditionError unless 0 <= i <= dim(K).
std::vector<Simplex> faces(const SimplicialComplex& k, int i);
FVector f_vector(const SimplicialComplex& k);
long long euler_characteristic(const SimplicialComplex& k);

/// Faces tau disjoint from sigma with sigma|tau in K. A facet's link is the
/// empty complex. Throws if sigma is not a face.
SimplicialComplex link(const SimplicialComplex& k, Simplex sigma);
/// Closed star: all facets containing sigma.
SimplicialComplex star(const SimplicialComplex& k, Simplex sigma);
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, Simplex vertex_subset);
/// Induced subcomplex on V(K) minus sigma.
SimplicialComplex simplicial_complement(const SimplicialComplex& k, Simplex sigma);
/// Requires disjoint vertex ids and non-empty factors.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// Facets {s + u : u not in s} and {t + v}, for u in V(K) and v a fresh id.
SimplicialComplex one_point_suspension(const SimplicialComplex& k, VertexId u, VertexId v,
                                       std::string v_label = {});

/// Vertex count of the link.
int degree(const SimplicialComplex& k, Simplex sigma);
/// degree -> number of edges with that degree.
std::map<int, int> edge_degree_histogram(const SimplicialComplex& k);

/// Applies a vertex map (old id -> new id) to every facet; labels move along.
SimplicialComplex relabel(const SimplicialComplex& k, std::span<const VertexId> map);
/// Shifts every id by `offset`.
SimplicialComplex translate(const SimplicialComplex& k, int offset);

/// K minus the open facet: its proper faces are kept.
SimplicialComplex remove_facet(const SimplicialComplex& k, Simplex facet);

}  // namespace smallcx
