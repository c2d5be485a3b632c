#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "smallcx/bistellar.hpp"
#include "smallcx/constructions.hpp"
#include "smallcx/errors.hpp"
#include "smallcx/isomorphism.hpp"
#include "smallcx/recognition.hpp"

using namespace smallcx;

namespace {

std::vector<int> vertex_degrees(const SimplicialComplex& k) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVertices; ++v) out.push_back(k.vertex_set().contains(v) ? degree(k, Simplex::vertex(v)) : 0);
  return out;
}

}  // namespace

TEST_CASE("K39 admits no proper moves") {
  const auto k = walkup_complex(3);
  CHECK(removable_faces(k, 2).empty());
  CHECK(removable_faces(k, 1).empty());
  const auto r = check_removable(k, k.simplex_of({"1", "5"}));
  CHECK_FALSE(r.removable);
  CHECK(r.reason == "β is a face");
  CHECK(check_removable(k, k.simplex_of({"1", "2", "4", "5"})).reason == "α is a facet");
  CHECK(check_removable(k, k.simplex_of({"1", "2", "3", "4"})).reason == "not a face");
  CHECK_THROWS_AS(removable_faces(k, 0), PreconditionError);
  CHECK_THROWS_AS(removable_faces(k, 4), PreconditionError);
}

TEST_CASE("minimal sphere has no moves of positive type") {
  const auto s = standard_sphere(3);
  for (int i = 1; i <= 3; ++i) CHECK(removable_faces(s, i).empty());
}

TEST_CASE("1-moves on 9-vertex spheres change f by (0,1,2,1) and never lower a degree") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const auto k = random_sphere3(9, 3, rng);
    const auto before = k.f_vector().counts;
    const auto deg = vertex_degrees(k);
    for (const auto& m : removable_faces(k, 1)) {
      const auto after = apply_move(k, m);
      const auto fa = after.f_vector().counts;
      CHECK(fa[0] - before[0] == 0);
      CHECK(fa[1] - before[1] == 1);
      CHECK(fa[2] - before[2] == 2);
      CHECK(fa[3] - before[3] == 1);
      const auto deg2 = vertex_degrees(after);
      for (int v = 0; v < kMaxVertices; ++v) CHECK(deg2[static_cast<std::size_t>(v)] >= deg[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("move then inverse restores the complex") {
  std::mt19937_64 rng(4);
  std::vector<SimplicialComplex> cat{cyclic_sphere_c37(), connected_sum_remark1(), random_sphere3(8, 5, rng)};
  for (auto& e : sphere_catalog()) cat.push_back(e.complex);
  for (const auto& k : cat) {
    for (int i = 1; i <= k.dim(); ++i) {
      for (const auto& m : removable_faces(k, i)) {
        const auto after = apply_move(k, m);
        const auto inv = inverse_move(m, k.dim());
        if (inv.type == 0) {
          CHECK(after.has_facet(inv.alpha));
          continue;
        }
        const auto back = apply_move(after, inv);
        CHECK(canonical_form(back) == canonical_form(k));
        CHECK(back == k);
      }
    }
  }
}

TEST_CASE("stale moves are rejected") {
  std::mt19937_64 rng(2);
  const auto k = random_sphere3(8, 3, rng);
  auto moves = proper_moves_unchecked(k);
  REQUIRE_FALSE(moves.empty());
  const auto after = apply_move(k, moves.front());
  CHECK_THROWS_AS(apply_move(after, moves.front()), PreconditionError);
}

TEST_CASE("starring and removing a vertex") {
  const auto s24 = standard_sphere(2);
  const auto s = star_vertex(s24, s24.facets().front(), 4, "e");
  CHECK(are_isomorphic(s, lookup_complex("S2")).isomorphic);
  const auto c = cyclic_sphere_c37();
  const auto st = star_vertex(c, c.facets().front(), 7);
  const auto fa = st.f_vector().counts;
  const auto fb = c.f_vector().counts;
  CHECK(fa == std::vector<long long>{fb[0] + 1, fb[1] + 4, fb[2] + 6, fb[3] + 3});
  // the new degree-4 vertex is removable by a 3-move
  const auto r = check_removable(st, Simplex::vertex(7));
  REQUIRE(r.removable);
  CHECK(r.move->type == 3);
  CHECK(apply_move(st, *r.move).vertex_count() == 7);
  CHECK_THROWS_AS(star_vertex(c, Simplex{0, 1, 2}, 7), PreconditionError);
  CHECK_THROWS_AS(star_vertex(c, c.facets().front(), 3), PreconditionError);
}

TEST_CASE("the two 8-vertex spheres come from S3 and S4 by double starring") {
  for (auto [base, target] : {std::pair{"S3", "calS"}, {"S4", "calT"}}) {
    const auto b = lookup_complex(base);
    bool hit = false;
    const auto& tri = b.facets();
    for (std::size_t i = 0; i < tri.size(); ++i) {
      for (std::size_t j = i + 1; j < tri.size(); ++j) {
        if (!tri[i].disjoint(tri[j])) continue;
        const auto once = star_vertex(b, tri[i], 6);
        const auto twice = star_vertex(once, tri[j], 7);
        hit = hit || are_isomorphic(twice, lookup_complex(target)).isomorphic;
      }
    }
    CAPTURE(target);
    CHECK(hit);
    // conversely, removing some pair of degree-3 vertices recovers the base
    const auto t = lookup_complex(target);
    std::vector<int> low;
    for (int v : t.vertex_set().vertices()) {
      if (degree(t, Simplex::vertex(v)) == 3) low.push_back(v);
    }
    bool back = false;
    for (std::size_t i = 0; i < low.size(); ++i) {
      for (std::size_t j = i + 1; j < low.size(); ++j) {
        auto r1 = check_removable(t, Simplex::vertex(low[i]));
        if (!r1.removable) continue;
        const auto t1 = apply_move(t, *r1.move);
        auto r2 = check_removable(t1, Simplex::vertex(low[j]));
        if (!r2.removable) continue;
        back = back || are_isomorphic(apply_move(t1, *r2.move), b).isomorphic;
      }
    }
    CHECK(back);
  }
}

TEST_CASE("raise_min_degree preconditions") {
  CHECK_THROWS_AS(raise_min_degree(walkup_complex(3)), PreconditionError);
  const auto m = connected_sum_remark1();
  CHECK_THROWS_AS(raise_min_degree(m), PreconditionError);
  CHECK(degree_raising_moves(m, m.vertex_of("6")).empty());
  CHECK(degree(m, Simplex::vertex(m.vertex_of("6"))) == 6);
}

TEST_CASE("raise_min_degree picks the least move at a minimum-degree vertex") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto k = random_sphere3(9, 2, rng);
    if (is_neighbourly(k)) continue;
    const auto m = raise_min_degree(k);
    CHECK(m.type == 1);
    int min_deg = 99;
    for (int v : k.vertex_set().vertices()) min_deg = std::min(min_deg, degree(k, Simplex::vertex(v)));
    bool raises_min = false;
    m.beta.for_each([&](int v) { raises_min = raises_min || degree(k, Simplex::vertex(v)) == min_deg; });
    CHECK(raises_min);
  }
}

TEST_CASE("neighbourly reduction") {
  const auto k39 = neighbourly_reduction(walkup_complex(3));
  CHECK(k39.moves.empty());
  CHECK(k39.result == walkup_complex(3));
  std::mt19937_64 rng(99);
  const auto stacked = stacked_sphere3(9, rng);
  CHECK(stacked.f_vector().counts[1] == 26);
  CHECK(neighbourly_reduction(stacked).moves.size() == 10);
  for (int t = 0; t < 30; ++t) {
    const auto k = random_sphere3(9, 4, rng);
    const auto f1 = k.f_vector().counts[1];
    const auto r = neighbourly_reduction(k);
    CHECK(static_cast<long long>(r.moves.size()) == 36 - f1);
    CHECK(r.moves.size() <= 10);
    CHECK(is_neighbourly(r.result));
    CHECK(is_combinatorial_3_manifold(r.result));
  }
}

TEST_CASE("random spheres are spheres") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto k = random_sphere3(9, 6, rng);
    CHECK(k.vertex_count() == 9);
    CHECK(is_combinatorial_3_manifold(k));
    CHECK(is_pseudomanifold(k));
  }
}

TEST_CASE("flip reachability") {
  const auto c = cyclic_sphere_c37();
  const auto same = flip_reachable(c, c, 5, 100);
  CHECK(same.found);
  CHECK(same.path.empty());
  std::mt19937_64 rng(17);
  CHECK(flip_reachable(standard_sphere(2), testing_support::shuffle(standard_sphere(2), rng), 3, 100).found);
  CHECK_THROWS_AS(flip_reachable(c, c, 0, 10), PreconditionError);
  for (int t = 0; t < 2; ++t) {
    const auto a = random_sphere3(9, 4, rng);
    std::vector<BistellarMove> hidden;
    const auto b = random_proper_walk(a, 4, rng, &hidden);
    const auto r = flip_reachable(a, testing_support::shuffle(b, rng), 20, 200000);
    REQUIRE(r.found);
    CHECK(r.path.size() <= hidden.size());
    SimplicialComplex cur = a;
    for (const auto& m : r.path) cur = apply_move(cur, m);
    CHECK(are_isomorphic(cur, b).isomorphic);
  }
}
