#include "smallcx/isomorphism.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "smallcx/errors.hpp"

namespace smallcx {

namespace {

constexpr VertexId kUnused = 0xFF;

using Colors = std::array<int, kMaxVertices>;

// Individualization-refinement search over a compacted copy of K.
class CanonSearch {
 public:
  explicit CanonSearch(const SimplicialComplex& k) {
    for (int v : k.vertex_set().vertices()) {
      local_of_[static_cast<std::size_t>(v)] = static_cast<VertexId>(n_);
      orig_[static_cast<std::size_t>(n_)] = static_cast<VertexId>(v);
      ++n_;
    }
    for (Simplex f : k.facets()) {
      Simplex g;
      f.for_each([&](int v) { g = g.with(local_of_[static_cast<std::size_t>(v)]); });
      facets_.push_back(g);
    }
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
      facets_[fi].for_each([&](int v) { incident_[static_cast<std::size_t>(v)].push_back(fi); });
    }
  }

  void run() {
    Colors c = initial_colors();
    search(c, Simplex());
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<std::uint16_t>& best_code() const { return best_code_; }
  [[nodiscard]] const std::array<int, kMaxVertices>& best_lab() const { return best_lab_; }
  [[nodiscard]] const std::vector<std::array<int, kMaxVertices>>& automorphisms() const { return autos_; }
  [[nodiscard]] VertexId orig(int local) const { return orig_[static_cast<std::size_t>(local)]; }

 private:
  template <class Sig>
  void rank_into(const std::vector<Sig>& sig, Colors& out) const {
    // color = number of vertices with a strictly smaller signature
    for (int v = 0; v < n_; ++v) {
      int below = 0;
      for (int w = 0; w < n_; ++w) {
        if (sig[static_cast<std::size_t>(w)] < sig[static_cast<std::size_t>(v)]) ++below;
      }
      out[static_cast<std::size_t>(v)] = below;
    }
  }

  Colors initial_colors() const {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      std::vector<int> by_size(kMaxVertices + 1, 0);
      Simplex nbrs;
      for (auto fi : incident_[static_cast<std::size_t>(v)]) {
        ++by_size[static_cast<std::size_t>(facets_[fi].size())];
        nbrs = nbrs | facets_[fi];
      }
      nbrs = nbrs.without(v);
      std::vector<int> edge_deg;
      nbrs.for_each([&](int w) {
        Simplex around;
        for (auto fi : incident_[static_cast<std::size_t>(v)]) {
          if (facets_[fi].contains(w)) around = around | facets_[fi];
        }
        edge_deg.push_back(around.size() - 2);
      });
      std::sort(edge_deg.begin(), edge_deg.end());
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(nbrs.size());
      s.insert(s.end(), by_size.begin(), by_size.end());
      s.push_back(-1);
      s.insert(s.end(), edge_deg.begin(), edge_deg.end());
    }
    Colors c{};
    rank_into(sig, c);
    return c;
  }

  static int distinct(const Colors& c, int n) {
    Simplex seen;
    for (int v = 0; v < n; ++v) seen = seen.with(c[static_cast<std::size_t>(v)]);
    return seen.size();
  }

  void refine(Colors& c) const {
    int cells = distinct(c, n_);
    while (cells < n_) {
      std::vector<std::vector<int>> fsig(facets_.size());
      for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        facets_[fi].for_each([&](int v) { fsig[fi].push_back(c[static_cast<std::size_t>(v)]); });
        std::sort(fsig[fi].begin(), fsig[fi].end());
      }
      std::vector<std::vector<int>> sorted = fsig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<int> frank(facets_.size());
      for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        frank[fi] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), fsig[fi]) - sorted.begin());
      }
      std::vector<std::vector<int>> vsig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& s = vsig[static_cast<std::size_t>(v)];
        for (auto fi : incident_[static_cast<std::size_t>(v)]) s.push_back(frank[fi]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), c[static_cast<std::size_t>(v)]);
      }
      Colors next{};
      rank_into(vsig, next);
      const int now = distinct(next, n_);
      c = next;
      if (now == cells) break;
      cells = now;
    }
  }

  std::vector<std::uint16_t> encode(const Colors& lab) const {
    std::vector<std::uint16_t> code;
    code.reserve(facets_.size());
    for (Simplex f : facets_) {
      std::uint16_t m = 0;
      f.for_each([&](int v) { m = static_cast<std::uint16_t>(m | (1u << lab[static_cast<std::size_t>(v)])); });
      code.push_back(m);
    }
    std::sort(code.begin(), code.end());
    return code;
  }

  void record_automorphism(const Colors& from, const Colors& to) {
    // gamma = from^{-1} o to
    std::array<int, kMaxVertices> inv{};
    for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(from[static_cast<std::size_t>(v)])] = v;
    std::array<int, kMaxVertices> gamma{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(to[static_cast<std::size_t>(v)])];
      if (gamma[static_cast<std::size_t>(v)] != v) identity = false;
    }
    if (!identity && std::find(autos_.begin(), autos_.end(), gamma) == autos_.end()) autos_.push_back(gamma);
  }

  void leaf(const Colors& lab) {
    auto code = encode(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_code_ = code;
      first_lab_ = lab;
      best_code_ = std::move(code);
      best_lab_ = lab;
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, lab);
    } else if (code == best_code_) {
      record_automorphism(best_lab_, lab);
    } else if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
    }
  }

  // Union-find orbits of the automorphisms fixing `fixed` pointwise.
  std::array<int, kMaxVertices> orbit_roots(Simplex fixed) const {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& g : autos_) {
      bool fixes = true;
      fixed.for_each([&](int v) { fixes = fixes && g[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(g[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  void search(Colors c, Simplex fixed) {
    refine(c);
    // first non-singleton cell, by color value
    int target = -1;
    {
      std::array<int, kMaxVertices> count{};
      for (int v = 0; v < n_; ++v) ++count[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
      for (int col = 0; col < n_; ++col) {
        if (count[static_cast<std::size_t>(col)] > 1) {
          target = col;
          break;
        }
      }
    }
    if (target < 0) {
      leaf(c);
      return;
    }
    std::vector<int> tried;
    for (int w = 0; w < n_; ++w) {
      if (c[static_cast<std::size_t>(w)] != target) continue;
      const auto roots = orbit_roots(fixed);
      const bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) {
        return roots[static_cast<std::size_t>(u)] == roots[static_cast<std::size_t>(w)];
      });
      if (redundant) continue;
      tried.push_back(w);
      Colors child = c;
      for (int v = 0; v < n_; ++v) {
        if (v != w && child[static_cast<std::size_t>(v)] == target) child[static_cast<std::size_t>(v)] = target + 1;
      }
      search(child, fixed.with(w));
    }
  }

  int n_ = 0;
  std::array<VertexId, kMaxVertices> local_of_{};
  std::array<VertexId, kMaxVertices> orig_{};
  std::vector<Simplex> facets_;
  std::array<std::vector<std::size_t>, kMaxVertices> incident_;

  bool have_leaf_ = false;
  std::vector<std::uint16_t> first_code_;
  Colors first_lab_{};
  std::vector<std::uint16_t> best_code_;
  Colors best_lab_{};
  std::vector<std::array<int, kMaxVertices>> autos_;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

std::string CanonicalForm::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SimplicialComplex CanonicalForm::complex() const {
  std::vector<Simplex> facets;
  for (std::size_t i = 1; i + 1 < bytes.size(); i += 2) {
    facets.emplace_back(static_cast<Simplex::Mask>((bytes[i] << 8) | bytes[i + 1]));
  }
  return SimplicialComplex::from_simplices(std::move(facets));
}

CanonicalForm canonical_form(const SimplicialComplex& k) {
  CanonicalForm out;
  out.relabeling.fill(kUnused);
  CanonSearch search(k);
  if (search.n() > 0) search.run();
  out.bytes.push_back(static_cast<std::uint8_t>(search.n()));
  for (auto m : search.best_code()) {
    out.bytes.push_back(static_cast<std::uint8_t>(m >> 8));
    out.bytes.push_back(static_cast<std::uint8_t>(m & 0xFF));
  }
  for (int v = 0; v < search.n(); ++v) {
    out.relabeling[search.orig(v)] = static_cast<VertexId>(search.best_lab()[static_cast<std::size_t>(v)]);
  }
  return out;
}

IsomorphismResult are_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
  IsomorphismResult result;
  if (k.vertex_count() != l.vertex_count() || k.facets().size() != l.facets().size()) return result;
  const auto ck = canonical_form(k);
  const auto cl = canonical_form(l);
  if (ck.bytes != cl.bytes) return result;
  std::array<VertexId, kMaxVertices> canon_to_l{};
  canon_to_l.fill(kUnused);
  for (int v = 0; v < kMaxVertices; ++v) {
    if (cl.relabeling[static_cast<std::size_t>(v)] != kUnused) canon_to_l[cl.relabeling[static_cast<std::size_t>(v)]] = static_cast<VertexId>(v);
  }
  std::array<VertexId, kMaxVertices> map{};
  map.fill(kUnused);
  for (int v = 0; v < kMaxVertices; ++v) {
    if (ck.relabeling[static_cast<std::size_t>(v)] != kUnused) map[static_cast<std::size_t>(v)] = canon_to_l[ck.relabeling[static_cast<std::size_t>(v)]];
  }
  for (Simplex f : k.facets()) {
    Simplex g;
    f.for_each([&](int v) { g = g.with(map[static_cast<std::size_t>(v)]); });
    if (!l.has_facet(g)) throw InternalContradiction("are_isomorphic: canonical witness failed on a facet");
  }
  result.isomorphic = true;
  result.witness = map;
  return result;
}

PermutationGroup automorphism_group(const SimplicialComplex& k) {
  CanonSearch search(k);
  if (search.n() > 0) search.run();
  std::vector<Permutation> gens;
  for (const auto& g : search.automorphisms()) {
    std::array<VertexId, kMaxVertices> images{};
    for (int i = 0; i < kMaxVertices; ++i) images[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
    for (int v = 0; v < search.n(); ++v) images[search.orig(v)] = search.orig(g[static_cast<std::size_t>(v)]);
    Permutation p(images);
    for (Simplex f : k.facets()) {
      if (!k.has_facet(p(f))) throw InternalContradiction("automorphism_group: generator is not an automorphism");
    }
    gens.push_back(p);
  }
  const int degree = k.empty() ? 0 : k.vertex_set().max_vertex() + 1;
  return PermutationGroup(std::move(gens), degree);
}

Family normalize_family(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

Family image_of(const Permutation& p, const Family& f) {
  Family out;
  out.reserve(f.size());
  for (Simplex s : f) out.push_back(p(s));
  return normalize_family(std::move(out));
}

std::vector<OrbitClass> orbits(const PermutationGroup& g, const std::vector<Family>& objects) {
  const Simplex domain = Simplex::range(g.degree());
  for (const auto& obj : objects) {
    for (Simplex s : obj) {
      if (!(s - domain).empty()) throw PreconditionError("orbits: permutation domain mismatch");
    }
  }
  std::map<Family, std::size_t> class_of;  // any orbit element -> class index
  std::vector<OrbitClass> classes;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    Family f = normalize_family(objects[i]);
    if (auto it = class_of.find(f); it != class_of.end()) {
      classes[it->second].members.push_back(i);
      continue;
    }
    std::set<Family> orbit{f};
    std::deque<Family> queue{f};
    while (!queue.empty()) {
      Family cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& p : g.generators()) {
        Family img = image_of(p, cur);
        if (orbit.insert(img).second) queue.push_back(std::move(img));
      }
    }
    const std::size_t idx = classes.size();
    for (const auto& e : orbit) class_of.emplace(e, idx);
    classes.push_back(OrbitClass{*orbit.begin(), {i}, orbit.size()});
  }
  std::sort(classes.begin(), classes.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.representative < b.representative; });
  return classes;
}

std::string describe_group(const PermutationGroup& g) {
  std::string out = "order " + std::to_string(g.order());
  if (g.order() == 1) return out + ", trivial";
  out += g.is_abelian() ? ", abelian" : ", non-abelian";
  if (g.order() <= 4096) {
    // element orders give a cheap structural hint
    std::map<int, int> by_order;
    for (const auto& e : g.elements()) {
      int o = 1;
      Permutation q = e;
      while (!q.is_identity()) {
        q = q * e;
        ++o;
      }
      ++by_order[o];
    }
    const auto n = static_cast<int>(g.order());
    if (by_order.count(n)) {
      out += ", cyclic";
    } else if (!g.is_abelian() && n % 2 == 0 && by_order.count(n / 2) && by_order[2] >= n / 2) {
      out += ", dihedral";
    }
  }
  return out;
}

}  // namespace smallcx
