#include "smallcx/recognition.hpp"

#include <bitset>
#include <deque>
#include <unordered_set>

#include "smallcx/errors.hpp"

namespace smallcx {

namespace {

void require_dim(const SimplicialComplex& k, int d, const char* what) {
  if (k.dim() != d) {
    throw PreconditionError(std::string(what) + ": expected dimension " + std::to_string(d) + ", got " +
                            std::to_string(k.dim()));
  }
}

int facets_containing(const SimplicialComplex& k, Simplex s) {
  int n = 0;
  for (Simplex f : k.facets()) n += f.contains(s) ? 1 : 0;
  return n;
}

// First facet not reachable from facets()[0] through shared ridges.
std::optional<Simplex> unreachable_facet(const SimplicialComplex& k) {
  const auto& fs = k.facets();
  if (fs.empty()) return std::nullopt;
  std::vector<bool> seen(fs.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (!seen[j] && (fs[i] & fs[j]).size() == fs[i].size() - 1) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!seen[j]) return fs[j];
  }
  return std::nullopt;
}

// A 1-dimensional complex that is one cycle through all its vertices.
bool is_single_cycle(const SimplicialComplex& c) {
  if (c.dim() != 1 || !c.is_pure() || c.vertex_count() < 3) return false;
  if (c.facets().size() != static_cast<std::size_t>(c.vertex_count())) return false;
  for (int v : c.vertex_set().vertices()) {
    if (facets_containing(c, Simplex::vertex(v)) != 2) return false;
  }
  return is_connected(c);
}

}  // namespace

bool is_connected(const SimplicialComplex& k) {
  if (k.empty()) return false;
  Simplex reached = k.facets().front();
  for (bool grew = true; grew;) {
    grew = false;
    for (Simplex f : k.facets()) {
      if (!f.disjoint(reached) && !reached.contains(f)) {
        reached = reached | f;
        grew = true;
      }
    }
  }
  return reached == k.vertex_set();
}

Verdict is_pure(const SimplicialComplex& k) {
  for (Simplex f : k.facets()) {
    if (f.dimension() != k.dim()) return Verdict::no(f, "facet of lower dimension");
  }
  return Verdict::yes();
}

Verdict is_pseudomanifold(const SimplicialComplex& k) {
  if (k.empty()) return {false, std::nullopt, "empty complex"};
  if (auto p = is_pure(k); !p) return p;
  if (k.dim() < 1) return Verdict::no(k.facets().front(), "dimension below 1");
  for (Simplex r : k.faces_of_dim(k.dim() - 1)) {
    const int n = facets_containing(k, r);
    if (n != 2) return Verdict::no(r, "ridge lies in " + std::to_string(n) + " facets");
  }
  if (auto f = unreachable_facet(k)) return Verdict::no(*f, "facet graph disconnected");
  return Verdict::yes();
}

Verdict is_closed_surface(const SimplicialComplex& k) {
  require_dim(k, 2, "is_closed_surface");
  if (auto p = is_pure(k); !p) return p;
  for (Simplex e : k.faces_of_dim(1)) {
    const int n = facets_containing(k, e);
    if (n != 2) return Verdict::no(e, "edge lies in " + std::to_string(n) + " triangles");
  }
  for (int v : k.vertex_set().vertices()) {
    if (!is_single_cycle(link(k, Simplex::vertex(v)))) return Verdict::no(Simplex::vertex(v), "vertex link is not a cycle");
  }
  if (!is_connected(k)) {
    return Verdict::no(unreachable_facet(k).value_or(k.facets().back()), "not connected");
  }
  return Verdict::yes();
}

Verdict is_two_sphere(const SimplicialComplex& k) {
  auto s = is_closed_surface(k);
  if (!s) return s;
  const long long chi = euler_characteristic(k);
  if (chi != 2) return Verdict::no(k.facets().front(), "Euler characteristic " + std::to_string(chi));
  return Verdict::yes();
}

Verdict is_combinatorial_3_manifold(const SimplicialComplex& k) {
  require_dim(k, 3, "is_combinatorial_3_manifold");
  for (int v : k.vertex_set().vertices()) {
    const auto lk = link(k, Simplex::vertex(v));
    if (lk.dim() != 2) return Verdict::no(Simplex::vertex(v), "vertex link has dimension " + std::to_string(lk.dim()));
    if (auto s = is_two_sphere(lk); !s) {
      return Verdict::no(Simplex::vertex(v), "vertex link is not a 2-sphere (" + s.reason + ")");
    }
  }
  return Verdict::yes();
}

Verdict is_neighbourly(const SimplicialComplex& k) {
  const auto verts = k.vertex_set().vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Simplex e{verts[i], verts[j]};
      if (!k.has_face(e)) return Verdict::no(e, "non-edge");
    }
  }
  return Verdict::yes();
}

RecognitionReport recognize(const SimplicialComplex& k) {
  RecognitionReport r;
  auto note = [&](bool& field, const Verdict& v, const char* name) {
    field = v.value;
    if (!v.value) r.witnesses.push_back({name, v.witness.value_or(k.empty() ? Simplex() : k.facets().front())});
  };
  const Simplex any_facet = k.empty() ? Simplex() : k.facets().front();
  note(r.is_pure, is_pure(k), "pure");
  note(r.is_pseudomanifold, is_pseudomanifold(k), "pseudomanifold");
  if (k.dim() == 2) {
    note(r.is_closed_surface, is_closed_surface(k), "closed_surface");
    note(r.is_two_sphere, is_two_sphere(k), "two_sphere");
  } else {
    note(r.is_closed_surface, Verdict::no(any_facet, "dimension is not 2"), "closed_surface");
    note(r.is_two_sphere, Verdict::no(any_facet, "dimension is not 2"), "two_sphere");
  }
  if (k.dim() == 3) {
    note(r.is_three_manifold, is_combinatorial_3_manifold(k), "three_manifold");
  } else {
    note(r.is_three_manifold, Verdict::no(any_facet, "dimension is not 3"), "three_manifold");
  }
  note(r.is_neighbourly, is_neighbourly(k), "neighbourly");
  return r;
}

namespace {

using FaceSet = std::bitset<256>;

struct CollapseSearch {
  std::vector<Simplex> faces;
  std::vector<std::vector<std::size_t>> supersets;  // strict supersets, by index
  std::unordered_set<FaceSet> failed;
  std::vector<Collapse> path;
  std::size_t states = 0;

  bool run(FaceSet present, std::size_t count) {
    if (count == 1) return true;
    if (failed.count(present)) return false;
    ++states;
    for (std::size_t t = 0; t < faces.size(); ++t) {
      if (!present[t]) continue;
      std::size_t coface = faces.size();
      int above = 0;
      for (auto s : supersets[t]) {
        if (present[s]) {
          ++above;
          coface = s;
          if (above > 1) break;
        }
      }
      if (above != 1) continue;
      FaceSet next = present;
      next.reset(t);
      next.reset(coface);
      path.push_back({faces[t], faces[coface]});
      if (run(next, count - 2)) return true;
      path.pop_back();
    }
    failed.insert(present);
    return false;
  }
};

}  // namespace

CollapseResult is_collapsible(const SimplicialComplex& k) {
  if (k.vertex_count() > 8) throw PreconditionError("is_collapsible: more than 8 vertices");
  CollapseResult result;
  if (k.empty() || euler_characteristic(k) != 1) return result;
  CollapseSearch search;
  for (int i = 0; i <= k.dim(); ++i) {
    for (Simplex s : k.faces_of_dim(i)) search.faces.push_back(s);
  }
  search.supersets.resize(search.faces.size());
  for (std::size_t a = 0; a < search.faces.size(); ++a) {
    for (std::size_t b = 0; b < search.faces.size(); ++b) {
      if (a != b && search.faces[b].contains(search.faces[a])) search.supersets[a].push_back(b);
    }
  }
  FaceSet all;
  for (std::size_t i = 0; i < search.faces.size(); ++i) all.set(i);
  result.collapsible = search.run(all, search.faces.size());
  result.states = search.states;
  if (result.collapsible) result.sequence = std::move(search.path);
  return result;
}

bool replay_collapse(const SimplicialComplex& k, const std::vector<Collapse>& seq) {
  std::vector<Simplex> present;
  for (int i = 0; i <= k.dim(); ++i) {
    for (Simplex s : k.faces_of_dim(i)) present.push_back(s);
  }
  for (const auto& step : seq) {
    if (step.free_face.size() + 1 != step.coface.size() || !step.coface.contains(step.free_face)) return false;
    int above = 0;
    bool has_coface = false;
    for (Simplex s : present) {
      if (s != step.free_face && s.contains(step.free_face)) {
        ++above;
        has_coface = has_coface || s == step.coface;
      }
    }
    if (above != 1 || !has_coface) return false;
    std::erase(present, step.free_face);
    std::erase(present, step.coface);
  }
  return present.size() == 1;
}

SphereCertificate certify_sphere_via_complement(const SimplicialComplex& x) {
  if (x.dim() != 3 || !is_connected(x) || !is_combinatorial_3_manifold(x)) {
    throw PreconditionError("certify_sphere_via_complement: input is not a connected combinatorial 3-manifold");
  }
  SphereCertificate cert;
  for (Simplex f : x.facets()) {
    if (x.vertex_count() - f.size() > 8) continue;
    const auto c = simplicial_complement(x, f);
    auto r = is_collapsible(c);
    if (r.collapsible) {
      cert.certified = true;
      cert.facet = f;
      cert.collapse = std::move(r.sequence);
      return cert;
    }
  }
  return cert;
}

std::vector<VertexId> singular_vertices(const SimplicialComplex& k) {
  if (k.dim() != 3 || !is_pseudomanifold(k)) {
    throw PreconditionError("singular_vertices: input is not a 3-pseudomanifold");
  }
  std::vector<VertexId> out;
  for (int v : k.vertex_set().vertices()) {
    const auto lk = link(k, Simplex::vertex(v));
    if (lk.dim() != 2 || !is_two_sphere(lk)) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

}  // namespace smallcx
