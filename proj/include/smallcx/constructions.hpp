#pragma once

#include <string>
#include <vector>

#include "smallcx/complex.hpp"

namespace smallcx {

/// Boundary of the (d+1)-simplex on ids 0..d+1 (labels 1..d+2).
SimplicialComplex standard_sphere(int d);
/// The n-cycle on labels 1..n.
SimplicialComplex cycle(int n);
/// The (2d+3)-vertex complex: for each run of d+2 cyclically consecutive
/// vertices, delete one interior vertex. Labels 1..2d+3.
SimplicialComplex walkup_complex(int d);
/// 4-subsets of the 7-cycle inducing only even-sized path components.
SimplicialComplex cyclic_sphere_c37();
/// Two copies of cyclic_sphere_c37 minus {1,2,3,4}, glued along 1,2,3,4.
/// The second copy's 5,6,7 are labelled 5',6',7' (ids 7,8,9).
SimplicialComplex connected_sum_remark1();

struct CatalogEntry {
  std::string name;
  SimplicialComplex complex;
  std::string provenance;
};

/// S1..S9 (the 2-spheres on at most 7 vertices, in the labelings used by the
/// coclique analysis) followed by calS and calT (8-vertex 2-spheres).
std::vector<CatalogEntry> sphere_catalog();

/// Every name accepted by lookup_complex, in display order.
std::vector<std::string> catalog_names();
/// Resolves "k39", "k27", "c37", "remark1", "S1".."S9", "calS", "calT",
/// "sphere<d>", "cycle<n>", "walkup<d>". Throws PreconditionError otherwise.
SimplicialComplex lookup_complex(const std::string& name);

}  // namespace smallcx
