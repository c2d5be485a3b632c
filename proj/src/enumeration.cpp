#include "smallcx/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>

#include "smallcx/errors.hpp"
#include "smallcx/homology.hpp"
#include "smallcx/parallel.hpp"
#include "smallcx/recognition.hpp"

namespace smallcx {

namespace {

using Mask = Simplex::Mask;

LabelMap one_based_labels(int n) {
  LabelMap labels;
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  return labels;
}

// Canonical forms found by one task, merged afterwards.
struct Found {
  std::map<std::vector<std::uint8_t>, CanonicalForm> forms;
  std::size_t nodes = 0;
  std::size_t leaves = 0;

  void add(const SimplicialComplex& k) {
    ++leaves;
    auto cf = canonical_form(k);
    auto key = cf.bytes;
    forms.emplace(std::move(key), std::move(cf));
  }
};

template <class Classify>
CensusResult assemble(std::vector<Found>& parts, Classify&& classify, double seconds) {
  CensusResult out;
  std::map<std::vector<std::uint8_t>, CanonicalForm> all;
  for (auto& p : parts) {
    out.nodes += p.nodes;
    out.leaves += p.leaves;
    all.merge(p.forms);
  }
  out.isomorph_rejections = out.leaves - all.size();
  for (auto& [bytes, cf] : all) {
    const auto n = static_cast<int>(cf.bytes.front());
    auto cx = cf.complex().with_labels(one_based_labels(n));
    std::string cls = classify(cx);
    ++out.counts[cls];
    out.entries.push_back({std::move(cf), std::move(cx), std::move(cls)});
  }
  out.seconds = seconds;
  return out;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Surfaces: grow from one triangle across open edges.

struct SurfaceSearch {
  int n;
  int max_facets;
  std::array<std::uint8_t, 1 << 8> edge_count{};  // triangles on each edge
  std::array<int, 8> vertex_facets{};
  std::array<int, 8> vertex_open{};  // open edges at each vertex
  std::vector<Mask> facets;
  std::bitset<1 << 8> chosen;
  int used = 0;  // vertices 0..used-1 appear
  Found* found;

  void add(Mask f, int sign) {
    for (int v = 0; v < 8; ++v) {
      if (!((f >> v) & 1u)) continue;
      vertex_facets[static_cast<std::size_t>(v)] += sign;
      const Mask e = static_cast<Mask>(f & ~(1u << v));
      const int before = edge_count[e];
      edge_count[e] = static_cast<std::uint8_t>(before + sign);
      const int after = edge_count[e];
      const int delta = (after == 1) - (before == 1);
      for (int u = 0; u < 8; ++u) {
        if ((e >> u) & 1u) vertex_open[static_cast<std::size_t>(u)] += delta;
      }
    }
    chosen.flip(f);
    if (sign > 0) {
      facets.push_back(f);
    } else {
      facets.pop_back();
    }
  }

  [[nodiscard]] bool can_add(Mask f) const {
    if (chosen[f]) return false;
    for (int v = 0; v < 8; ++v) {
      if (!((f >> v) & 1u)) continue;
      if (edge_count[static_cast<Mask>(f & ~(1u << v))] >= 2) return false;
      const auto vi = static_cast<std::size_t>(v);
      if (vertex_facets[vi] > 0 && vertex_open[vi] == 0) return false;
    }
    return true;
  }

  void run() {
    ++found->nodes;
    Mask best_edge = 0;
    std::vector<int> best;
    bool any_open = false;
    for (int a = 0; a < used; ++a) {
      for (int b = a + 1; b < used; ++b) {
        const auto e = static_cast<Mask>((1u << a) | (1u << b));
        if (edge_count[e] != 1) continue;
        any_open = true;
        std::vector<int> opts;
        const int limit = std::min(used + 1, n);
        for (int w = 0; w < limit; ++w) {
          if (!((e >> w) & 1u) && can_add(static_cast<Mask>(e | (1u << w)))) opts.push_back(w);
        }
        if (opts.empty()) return;
        if (best_edge == 0 || opts.size() < best.size()) {
          best_edge = e;
          best = std::move(opts);
        }
      }
    }
    if (!any_open) {
      if (used == n) {
        std::vector<Simplex> fs;
        for (Mask f : facets) fs.emplace_back(f);
        const auto k = SimplicialComplex::from_simplices(std::move(fs));
        if (is_two_sphere(k)) found->add(k);
      }
      return;
    }
    if (static_cast<int>(facets.size()) >= max_facets) return;
    for (int w : best) {
      const auto f = static_cast<Mask>(best_edge | (1u << w));
      const int saved = used;
      used = std::max(used, w + 1);
      add(f, +1);
      run();
      add(f, -1);
      used = saved;
    }
  }
};

// ---------------------------------------------------------------------------
// 9-vertex 3-manifolds: fix the star of vertex 0 (a max-degree vertex) and
// fill in the rest across open triangles.

constexpr int kNine = 9;

struct ManifoldSearch {
  int link_size = 8;         // deg(0); every vertex has degree <= link_size
  int per_vertex_cap = 12;   // facets through a vertex: 2*deg - 4
  int max_facets = 27;
  bool neighbourly = false;

  std::array<std::uint8_t, 512> tri{};        // facets on each triangle
  std::array<std::uint8_t, 512> edge_open{};  // open triangles on each edge
  std::array<std::uint8_t, 512> edge_facets{};
  std::array<int, kNine> vertex_facets{};
  std::array<int, kNine> vertex_open{};
  std::bitset<512> chosen;
  std::vector<Mask> facets;
  Found* found = nullptr;

  static const std::vector<Mask>& triangles() {
    static const std::vector<Mask> all = [] {
      std::vector<Mask> t;
      for (Simplex s : subsets_of_size(Simplex::range(kNine), 3)) t.push_back(s.mask());
      return t;
    }();
    return all;
  }

  void add(Mask f, int sign) {
    for (int v = 0; v < kNine; ++v) {
      if (!((f >> v) & 1u)) continue;
      vertex_facets[static_cast<std::size_t>(v)] += sign;
      const auto t = static_cast<Mask>(f & ~(1u << v));
      const int before = tri[t];
      tri[t] = static_cast<std::uint8_t>(before + sign);
      const int delta = (tri[t] == 1) - (before == 1);
      for (int u = 0; u < kNine; ++u) {
        if (!((t >> u) & 1u)) continue;
        vertex_open[static_cast<std::size_t>(u)] += delta;
        const auto e = static_cast<Mask>(t & ~(1u << u));
        edge_open[e] = static_cast<std::uint8_t>(edge_open[e] + delta);
      }
    }
    for (int a = 0; a < kNine; ++a) {
      for (int b = a + 1; b < kNine; ++b) {
        const auto e = static_cast<Mask>((1u << a) | (1u << b));
        if ((f & e) == e) edge_facets[e] = static_cast<std::uint8_t>(edge_facets[e] + sign);
      }
    }
    chosen.flip(f);
    if (sign > 0) {
      facets.push_back(f);
    } else {
      facets.pop_back();
    }
  }

  [[nodiscard]] bool can_add(Mask f) const {
    if (chosen[f]) return false;
    for (int v = 0; v < kNine; ++v) {
      if (!((f >> v) & 1u)) continue;
      const auto vi = static_cast<std::size_t>(v);
      if (vertex_facets[vi] >= per_vertex_cap) return false;
      if (vertex_facets[vi] > 0 && vertex_open[vi] == 0) return false;  // link already closed
      if (tri[static_cast<Mask>(f & ~(1u << v))] >= 2) return false;
    }
    for (int a = 0; a < kNine; ++a) {
      for (int b = a + 1; b < kNine; ++b) {
        const auto e = static_cast<Mask>((1u << a) | (1u << b));
        if ((f & e) == e && edge_facets[e] > 0 && edge_open[e] == 0) return false;  // edge link closed
      }
    }
    return true;
  }

  [[nodiscard]] int fresh_limit() const {
    int top = link_size;
    for (int v = link_size + 1; v < kNine; ++v) {
      if (vertex_facets[static_cast<std::size_t>(v)] > 0) top = v;
    }
    return std::min(top + 1, kNine - 1);
  }

  void leaf() {
    for (int c : vertex_facets) {
      if (c == 0) return;
    }
    std::vector<Simplex> fs;
    for (Mask f : facets) fs.emplace_back(f);
    const auto k = SimplicialComplex::from_simplices(std::move(fs));
    if (neighbourly && !is_neighbourly(k)) return;
    if (!is_combinatorial_3_manifold(k)) return;
    found->add(k);
  }

  void run() {
    ++found->nodes;
    Mask best_tri = 0;
    std::array<int, kNine> best{};
    int best_count = kNine + 1;
    const int limit = fresh_limit();
    for (Mask t : triangles()) {
      if (tri[t] != 1) continue;
      std::array<int, kNine> opts{};
      int count = 0;
      for (int w = 1; w <= limit; ++w) {
        if (!((t >> w) & 1u) && can_add(static_cast<Mask>(t | (1u << w)))) opts[static_cast<std::size_t>(count++)] = w;
      }
      if (count == 0) return;
      if (count < best_count) {
        best_count = count;
        best = opts;
        best_tri = t;
      }
    }
    if (best_tri == 0) {
      leaf();
      return;
    }
    if (static_cast<int>(facets.size()) >= max_facets) return;
    for (int i = 0; i < best_count; ++i) {
      const auto f = static_cast<Mask>(best_tri | (1u << best[static_cast<std::size_t>(i)]));
      add(f, +1);
      run();
      add(f, -1);
    }
  }
};

// Seeds: each 2-sphere on d vertices as the link of vertex 0, on ids 1..d.
std::vector<SimplicialComplex> link_seeds(int d, const EnumerationOptions& opt) {
  std::vector<SimplicialComplex> out;
  std::mt19937_64 rng(opt.shuffle_seed.value_or(0));
  for (const auto& e : enumerate_two_spheres(d).entries) {
    std::vector<VertexId> ids(static_cast<std::size_t>(d));
    std::iota(ids.begin(), ids.end(), VertexId{1});
    if (opt.shuffle_seed) std::shuffle(ids.begin(), ids.end(), rng);
    std::array<VertexId, kMaxVertices> map{};
    for (std::size_t i = 0; i < ids.size(); ++i) map[i] = ids[i];
    out.push_back(relabel(e.complex, map));
  }
  return out;
}

CensusResult search_manifolds(const std::vector<int>& degrees, bool neighbourly, const EnumerationOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  struct Task {
    int d;
    SimplicialComplex link;
  };
  std::vector<Task> tasks;
  for (int d : degrees) {
    for (auto& l : link_seeds(d, opt)) tasks.push_back({d, std::move(l)});
  }
  std::vector<Found> parts(tasks.size());
  parallel_for(tasks.size(), opt.threads, [&](std::size_t i) {
    ManifoldSearch s;
    s.link_size = tasks[i].d;
    s.per_vertex_cap = 2 * tasks[i].d - 4;
    s.max_facets = kNine * s.per_vertex_cap / 4;
    s.neighbourly = neighbourly;
    s.found = &parts[i];
    for (Simplex t : tasks[i].link.facets()) s.add(t.with(0).mask(), +1);
    s.run();
  });
  return assemble(parts, classify_3_manifold, elapsed(start));
}

}  // namespace

CensusResult enumerate_two_spheres(int n, const EnumerationOptions& opt) {
  if (n < 4 || n > 8) throw PreconditionError("enumerate_two_spheres: n must be in [4, 8]");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Found> parts(1);
  SurfaceSearch s{};
  s.n = n;
  s.max_facets = 2 * n - 4;
  s.used = 3;
  s.found = &parts[0];
  s.add(0b111, +1);
  s.run();
  (void)opt;  // the surface search has a single root; options only matter for 3-manifolds
  return assemble(parts, [](const SimplicialComplex&) { return std::string("sphere"); }, elapsed(start));
}

CensusResult enumerate_neighbourly_9_manifolds(const EnumerationOptions& opt) {
  return search_manifolds({8}, true, opt);
}

CensusResult enumerate_all_9_manifolds(const EnumerationOptions& opt) {
  return search_manifolds({4, 5, 6, 7, 8}, false, opt);
}

std::string classify_3_manifold(const SimplicialComplex& k) {
  if (!(homology(k) == sphere_homology(3))) return "non-sphere";
  return certify_sphere_via_complement(k).certified ? "sphere" : "homology-sphere";
}

}  // namespace smallcx
