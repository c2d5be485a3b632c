#pragma once

#include <string>
#include <vector>

#include "smallcx/complex.hpp"

namespace smallcx {

using IntMatrix = std::vector<std::vector<long long>>;

/// Signed boundary map from i-faces (columns) to (i-1)-faces (rows), both
/// sorted by bitmask, oriented by ascending vertex id.
struct BoundaryMatrix {
  std::vector<Simplex> rows;
  std::vector<Simplex> cols;
  IntMatrix entries;  // rows.size() x cols.size()
};

/// Requires 1 <= i <= dim(K).
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int i);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  /// Non-zero diagonal entries d1 | d2 | ... (all positive).
  std::vector<long long> invariant_factors;
  int rank = 0;
};

/// Exact Smith normal form (arbitrary-precision arithmetic internally).
SmithForm smith_normal_form(const IntMatrix& m);

struct HomologyProfile {
  std::vector<int> betti;
  /// torsion[i]: invariant factors > 1 of H_i, ascending.
  std::vector<std::vector<long long>> torsion;

  /// "H0=Z  H1=Z  H2=Z/2  H3=0"
  [[nodiscard]] std::string format() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Integral homology. Throws PreconditionError for dim(K) > 3.
HomologyProfile homology(const SimplicialComplex& k);
/// Z, 0, ..., 0, Z in dimensions 0..d.
HomologyProfile sphere_homology(int d);

}  // namespace smallcx
