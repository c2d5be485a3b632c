#include "doctest.h"
#include "helpers.hpp"
#include "smallcx/constructions.hpp"
#include "smallcx/errors.hpp"
#include "smallcx/homology.hpp"
#include "smallcx/isomorphism.hpp"
#include "smallcx/recognition.hpp"

using namespace smallcx;

namespace {

// 7-vertex torus: {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialComplex torus7() {
  std::vector<Simplex> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back(Simplex{i, (i + 1) % 7, (i + 3) % 7});
    f.push_back(Simplex{i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_simplices(f);
}

SimplicialComplex two_triangle_cycles() { return join(cycle(3), translate(cycle(3), 3)); }

// All complexes on 5 vertices with complete 1-skeleton and the given
// numbers of tetrahedra and triangles.
std::vector<SimplicialComplex> five_vertex_complexes(int tets, int tris) {
  std::vector<SimplicialComplex> out;
  const auto all_tets = subsets_of_size(Simplex::range(5), 4);
  const auto all_tris = subsets_of_size(Simplex::range(5), 3);
  for (unsigned tm = 0; tm < 32; ++tm) {
    if (std::popcount(tm) != tets) continue;
    for (unsigned rm = 0; rm < 1024; ++rm) {
      std::vector<Simplex> faces;
      for (int i = 0; i < 5; ++i) {
        if (tm >> i & 1) faces.push_back(all_tets[static_cast<std::size_t>(i)]);
      }
      for (int i = 0; i < 10; ++i) {
        if (rm >> i & 1) faces.push_back(all_tris[static_cast<std::size_t>(i)]);
      }
      for (auto e : subsets_of_size(Simplex::range(5), 2)) faces.push_back(e);
      const auto k = SimplicialComplex::from_simplices(faces);
      const auto f = k.f_vector().counts;
      const long long t3 = f.size() > 3 ? f[3] : 0;
      const long long t2 = f.size() > 2 ? f[2] : 0;
      // tets must be exactly the chosen ones (no extra tet implied by triangles)
      if (t3 == tets && t2 == tris) out.push_back(k);
    }
  }
  std::vector<SimplicialComplex> classes;
  for (const auto& k : out) {
    bool seen = false;
    for (const auto& c : classes) seen = seen || canonical_form(c) == canonical_form(k);
    if (!seen) classes.push_back(k);
  }
  return classes;
}

}  // namespace

TEST_CASE("pseudomanifolds") {
  CHECK(is_pseudomanifold(walkup_complex(3)));
  CHECK(is_pseudomanifold(two_triangle_cycles()));
  const auto k = walkup_complex(3);
  const Simplex f = k.facets()[5];
  const auto v = is_pseudomanifold(remove_facet(k, f));
  CHECK_FALSE(v);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->size() == 3);
  CHECK(f.contains(*v.witness));
  const auto two = SimplicialComplex::from_simplices({Simplex{0, 1, 2}, Simplex{3, 4}});
  const auto np = is_pseudomanifold(two);
  CHECK_FALSE(np);
  CHECK(np.reason == "facet of lower dimension");
}

TEST_CASE("two-sphere recognition") {
  for (const auto& e : sphere_catalog()) {
    CAPTURE(e.name);
    CHECK(is_two_sphere(e.complex));
    CHECK(euler_characteristic(e.complex) == 2);
  }
  const auto k = walkup_complex(3);
  for (int v : k.vertex_set().vertices()) {
    const auto lk = link(k, Simplex::vertex(v));
    CHECK(is_two_sphere(lk));
    CHECK(lk.vertex_count() == 8);
  }
  const auto skel = SimplicialComplex::from_simplices(subsets_of_size(Simplex::range(5), 3));
  const auto v = is_two_sphere(skel);
  CHECK_FALSE(v);
  CHECK(v.witness->size() == 2);
  CHECK_FALSE(is_two_sphere(torus7()));
  CHECK(is_closed_surface(torus7()));
  CHECK(euler_characteristic(torus7()) == 0);
  CHECK_THROWS_AS(is_two_sphere(walkup_complex(3)), PreconditionError);
}

TEST_CASE("combinatorial 3-manifolds") {
  CHECK(is_combinatorial_3_manifold(walkup_complex(3)));
  CHECK(is_combinatorial_3_manifold(cyclic_sphere_c37()));
  CHECK(is_combinatorial_3_manifold(connected_sum_remark1()));
  // the join of two 3-cycles is the boundary of a product of triangles,
  // a genuine 3-sphere; every vertex link is a 5-vertex bipyramid
  const auto j = two_triangle_cycles();
  CHECK(is_combinatorial_3_manifold(j));
  CHECK(are_isomorphic(link(j, Simplex::vertex(0)), lookup_complex("S2")).isomorphic);
  const auto susp = one_point_suspension(torus7(), 0, 7);
  const auto v = is_combinatorial_3_manifold(susp);
  CHECK_FALSE(v);
  CHECK(v.witness.has_value());
  CHECK_THROWS_AS(is_combinatorial_3_manifold(cycle(4)), PreconditionError);
}

TEST_CASE("walkup complexes are manifolds") {
  const auto k27 = walkup_complex(2);
  CHECK(is_closed_surface(k27));
  CHECK(euler_characteristic(k27) == 0);
  CHECK(k27.facets().size() == 14);
  CHECK(walkup_complex(3).facets().size() == 27);
}

TEST_CASE("neighbourliness") {
  CHECK(is_neighbourly(walkup_complex(3)));
  CHECK(is_neighbourly(standard_sphere(3)));
  CHECK(is_neighbourly(cyclic_sphere_c37()));
  const auto m = connected_sum_remark1();
  const auto v = is_neighbourly(m);
  CHECK_FALSE(v);
  CHECK(v.witness->size() == 2);
  CHECK_FALSE(m.has_face(m.simplex_of({"6", "5'"})));
}

TEST_CASE("cyclic 3-sphere") {
  const auto c = cyclic_sphere_c37();
  CHECK(c.facets().size() == 14);
  CHECK(c.has_facet(c.simplex_of({"1", "2", "3", "4"})));
  CHECK(c.has_facet(c.simplex_of({"1", "2", "4", "5"})));
  CHECK_FALSE(c.has_facet(c.simplex_of({"1", "2", "3", "5"})));
}

TEST_CASE("collapsibility") {
  CHECK(is_collapsible(SimplicialComplex::from_simplices({Simplex{0, 1, 2, 3}})).collapsible);
  const auto s24 = standard_sphere(2);
  CHECK_FALSE(is_collapsible(s24).collapsible);
  CHECK_THROWS_AS(is_collapsible(walkup_complex(3)), PreconditionError);
  for (auto [tets, tris] : {std::pair{4, 10}, {3, 9}, {2, 8}}) {
    const auto classes = five_vertex_complexes(tets, tris);
    CAPTURE(tets);
    CHECK(classes.size() == 1);
    for (const auto& k : classes) {
      const auto r = is_collapsible(k);
      CHECK(r.collapsible);
      CHECK(replay_collapse(k, r.sequence));
    }
  }
  // the (5,10,7,1) and (5,10,6,0) shapes contain non-collapsible members
  const auto k = walkup_complex(3);
  for (Simplex f : k.facets()) CHECK_FALSE(is_collapsible(simplicial_complement(k, f)).collapsible);
}

TEST_CASE("sphere certificates") {
  const auto c = certify_sphere_via_complement(cyclic_sphere_c37());
  CHECK(c.certified);
  REQUIRE(c.facet.has_value());
  CHECK(replay_collapse(simplicial_complement(cyclic_sphere_c37(), *c.facet), c.collapse));
  CHECK_FALSE(certify_sphere_via_complement(walkup_complex(3)).certified);
  CHECK(certify_sphere_via_complement(standard_sphere(3)).certified);
  CHECK(certify_sphere_via_complement(connected_sum_remark1()).certified);
  CHECK_THROWS_AS(certify_sphere_via_complement(one_point_suspension(torus7(), 0, 7)), PreconditionError);
  // a certificate implies sphere homology
  for (const auto& x : {cyclic_sphere_c37(), standard_sphere(3), connected_sum_remark1(), two_triangle_cycles()}) {
    if (certify_sphere_via_complement(x).certified) CHECK(homology(x) == sphere_homology(3));
  }
}

TEST_CASE("singular vertices") {
  CHECK(singular_vertices(walkup_complex(3)).empty());
  CHECK(singular_vertices(standard_sphere(3)).empty());
  CHECK(singular_vertices(cyclic_sphere_c37()).empty());
  const auto susp = one_point_suspension(torus7(), 0, 7);
  CHECK(singular_vertices(susp) == std::vector<VertexId>{0, 7});
  CHECK_THROWS_AS(singular_vertices(standard_sphere(2)), PreconditionError);
}

TEST_CASE("recognition report carries a witness for every false field") {
  for (const auto& k : {walkup_complex(3), lookup_complex("S5"), torus7(), cycle(5), connected_sum_remark1()}) {
    const auto r = recognize(k);
    const int falses = !r.is_pure + !r.is_pseudomanifold + !r.is_closed_surface + !r.is_two_sphere +
                       !r.is_three_manifold + !r.is_neighbourly;
    CHECK(static_cast<int>(r.witnesses.size()) == falses);
  }
  const auto r = recognize(walkup_complex(3));
  CHECK(r.is_pseudomanifold);
  CHECK(r.is_three_manifold);
  CHECK(r.is_neighbourly);
  CHECK_FALSE(r.is_two_sphere);
}
