#include "smallcx/complex.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "smallcx/errors.hpp"

namespace smallcx {

namespace {

std::shared_ptr<const LabelMap> shared_labels(LabelMap labels) {
  return std::make_shared<const LabelMap>(std::move(labels));
}

const std::shared_ptr<const LabelMap>& default_labels() {
  static const auto labels = std::make_shared<const LabelMap>();
  return labels;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

void require_face(const SimplicialComplex& k, Simplex sigma, const char* what) {
  if (sigma.empty() || !k.has_face(sigma)) {
    throw PreconditionError(std::string(what) + ": " + k.format(sigma) + " is not a face");
  }
}

}  // namespace

long long FVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
  return chi;
}

std::string to_string(const FVector& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(f.counts[i]);
  }
  return out + ")";
}

SimplicialComplex::SimplicialComplex()
    : labels_(default_labels()), cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> facets, LabelMap labels) {
  for (Simplex s : facets) {
    if (s.empty()) throw PreconditionError("empty simplex among facets");
  }
  // Larger sets first so a single pass can drop contained ones.
  std::sort(facets.begin(), facets.end(), [](Simplex a, Simplex b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Simplex> kept;
  kept.reserve(facets.size());
  for (Simplex s : facets) {
    bool covered = false;
    for (Simplex t : kept) {
      if (t.size() > s.size() && t.contains(s)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());

  SimplicialComplex k;
  k.facets_ = std::move(kept);
  for (Simplex s : k.facets_) {
    k.vertices_ = k.vertices_ | s;
    k.dim_ = std::max(k.dim_, s.dimension());
  }
  k.labels_ = shared_labels(std::move(labels));
  return k;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Simplex s) { return s.dimension() == dim_; });
}

bool SimplicialComplex::has_face(Simplex s) const {
  if (s.empty()) return false;
  return std::any_of(facets_.begin(), facets_.end(), [&](Simplex f) { return f.contains(s); });
}

bool SimplicialComplex::has_facet(Simplex s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::span<const Simplex> SimplicialComplex::faces_of_dim(int i) const {
  if (i < 0 || i > dim_) return {};
  std::call_once(cache_->once, [this] {
    std::vector<std::set<Simplex::Mask>> sets(static_cast<std::size_t>(dim_ + 1));
    for (Simplex f : facets_) {
      // Every non-empty submask of the facet.
      for (Simplex::Mask sub = f.mask(); sub != 0; sub = static_cast<Simplex::Mask>((sub - 1) & f.mask())) {
        sets[static_cast<std::size_t>(std::popcount(sub) - 1)].insert(sub);
      }
    }
    cache_->by_dim.resize(sets.size());
    for (std::size_t d = 0; d < sets.size(); ++d) {
      for (auto m : sets[d]) cache_->by_dim[d].emplace_back(m);
    }
  });
  return cache_->by_dim[static_cast<std::size_t>(i)];
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (int i = 0; i <= dim_; ++i) f.counts.push_back(static_cast<long long>(faces_of_dim(i).size()));
  return f;
}

std::string SimplicialComplex::label(int v) const {
  const auto& l = (*labels_)[static_cast<std::size_t>(v)];
  return l.empty() ? std::to_string(v) : l;
}

VertexId SimplicialComplex::vertex_of(std::string_view l) const {
  for (int v : vertices_.vertices()) {
    if (label(v) == l) return static_cast<VertexId>(v);
  }
  throw PreconditionError("unknown vertex label: " + std::string(l));
}

Simplex SimplicialComplex::simplex_of(std::initializer_list<std::string_view> ls) const {
  Simplex s;
  for (auto l : ls) s = s.with(vertex_of(l));
  return s;
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& ls) const {
  Simplex s;
  for (const auto& l : ls) s = s.with(vertex_of(l));
  return s;
}

SimplicialComplex SimplicialComplex::with_labels(LabelMap labels) const {
  SimplicialComplex k = *this;
  k.labels_ = shared_labels(std::move(labels));
  return k;
}

std::string SimplicialComplex::format(Simplex s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    out += label(v);
    first = false;
  });
  return out + "}";
}

SimplicialComplex SimplicialComplex::normalized() const {
  std::array<VertexId, kMaxVertices> map{};
  int next = 0;
  vertices_.for_each([&](int v) { map[static_cast<std::size_t>(v)] = static_cast<VertexId>(next++); });
  return relabel(*this, map);
}

bool natural_label_less(const std::string& a, const std::string& b) {
  long long ia = 0;
  long long ib = 0;
  const bool na = parse_int(a, ia);
  const bool nb = parse_int(b, ib);
  if (na != nb) return na;
  if (na) return ia < ib;
  if (a.size() != b.size()) {
    // Keep "x2" before "x10" for the common letter+digits shape.
    if (!a.empty() && !b.empty() && a[0] == b[0]) return a.size() < b.size();
  }
  return a < b;
}

SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_list) {
  if (facet_list.empty()) throw PreconditionError("from_facets: empty facet list");
  std::vector<std::string> labels;
  for (const auto& facet : facet_list) {
    if (facet.empty()) throw PreconditionError("from_facets: empty facet");
    for (const auto& l : facet) {
      if (l.empty()) throw PreconditionError("from_facets: empty vertex label");
      labels.push_back(l);
    }
  }
  std::sort(labels.begin(), labels.end(), natural_label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw PreconditionError("from_facets: more than 16 distinct vertex labels");
  }
  LabelMap label_map;
  std::map<std::string, int> id_of;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    label_map[i] = labels[i];
    id_of[labels[i]] = static_cast<int>(i);
  }
  std::vector<Simplex> simplices;
  for (const auto& facet : facet_list) {
    Simplex s;
    for (const auto& l : facet) s = s.with(id_of.at(l));
    simplices.push_back(s);
  }
  return SimplicialComplex::from_simplices(std::move(simplices), label_map);
}

SimplicialComplex from_facets(const std::vector<std::vector<int>>& facet_list) {
  std::vector<std::vector<std::string>> as_text;
  for (const auto& facet : facet_list) {
    auto& row = as_text.emplace_back();
    for (int v : facet) row.push_back(std::to_string(v));
  }
  return from_facets(as_text);
}

std::vector<Simplex> faces(const SimplicialComplex& k, int i) {
  if (i < 0 || i > k.dim()) {
    throw PreconditionError("faces: dimension " + std::to_string(i) + " outside [0, " +
                            std::to_string(k.dim()) + "]");
  }
  auto span = k.faces_of_dim(i);
  return {span.begin(), span.end()};
}

FVector f_vector(const SimplicialComplex& k) { return k.f_vector(); }

long long euler_characteristic(const SimplicialComplex& k) {
  return k.f_vector().euler_characteristic();
}

SimplicialComplex link(const SimplicialComplex& k, Simplex sigma) {
  require_face(k, sigma, "link");
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (f.contains(sigma) && f != sigma) out.push_back(f - sigma);
  }
  if (out.empty()) return SimplicialComplex().with_labels(k.labels());
  return SimplicialComplex::from_simplices(std::move(out), k.labels());
}

SimplicialComplex star(const SimplicialComplex& k, Simplex sigma) {
  require_face(k, sigma, "star");
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (f.contains(sigma)) out.push_back(f);
  }
  return SimplicialComplex::from_simplices(std::move(out), k.labels());
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, Simplex vertex_subset) {
  if (vertex_subset.empty()) throw PreconditionError("induced_subcomplex: empty vertex set");
  if (!k.vertex_set().contains(vertex_subset)) {
    throw PreconditionError("induced_subcomplex: " + k.format(vertex_subset) +
                            " is not a subset of the vertex set");
  }
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    Simplex part = f & vertex_subset;
    if (!part.empty()) out.push_back(part);
  }
  if (out.empty()) return SimplicialComplex().with_labels(k.labels());
  return SimplicialComplex::from_simplices(std::move(out), k.labels());
}

SimplicialComplex simplicial_complement(const SimplicialComplex& k, Simplex sigma) {
  require_face(k, sigma, "simplicial_complement");
  const Simplex rest = k.vertex_set() - sigma;
  if (rest.empty()) return SimplicialComplex().with_labels(k.labels());
  return induced_subcomplex(k, rest);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.empty() || l.empty()) throw PreconditionError("join: empty factor");
  if (!k.vertex_set().disjoint(l.vertex_set())) {
    throw PreconditionError("join: vertex sets overlap");
  }
  LabelMap labels = k.labels();
  l.vertex_set().for_each([&](int v) { labels[static_cast<std::size_t>(v)] = l.labels()[static_cast<std::size_t>(v)]; });
  std::vector<Simplex> out;
  for (Simplex a : k.facets()) {
    for (Simplex b : l.facets()) out.push_back(a | b);
  }
  return SimplicialComplex::from_simplices(std::move(out), labels);
}

SimplicialComplex one_point_suspension(const SimplicialComplex& k, VertexId u, VertexId v,
                                       std::string v_label) {
  if (!k.vertex_set().contains(u)) {
    throw PreconditionError("one_point_suspension: u is not a vertex");
  }
  if (v >= kMaxVertices || k.vertex_set().contains(v)) {
    throw PreconditionError("one_point_suspension: v is already a vertex (or out of range)");
  }
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (!f.contains(u)) out.push_back(f.with(u));
    out.push_back(f.with(v));
  }
  LabelMap labels = k.labels();
  labels[v] = std::move(v_label);
  return SimplicialComplex::from_simplices(std::move(out), labels);
}

int degree(const SimplicialComplex& k, Simplex sigma) {
  require_face(k, sigma, "degree");
  Simplex verts;
  for (Simplex f : k.facets()) {
    if (f.contains(sigma)) verts = verts | f;
  }
  return (verts - sigma).size();
}

std::map<int, int> edge_degree_histogram(const SimplicialComplex& k) {
  std::map<int, int> hist;
  for (Simplex e : k.faces_of_dim(1)) ++hist[degree(k, e)];
  return hist;
}

SimplicialComplex relabel(const SimplicialComplex& k, std::span<const VertexId> map) {
  LabelMap labels;
  std::vector<Simplex> out;
  out.reserve(k.facets().size());
  for (Simplex f : k.facets()) {
    Simplex g;
    f.for_each([&](int v) { g = g.with(map[static_cast<std::size_t>(v)]); });
    out.push_back(g);
  }
  k.vertex_set().for_each([&](int v) {
    labels[map[static_cast<std::size_t>(v)]] = k.labels()[static_cast<std::size_t>(v)];
  });
  if (out.empty()) return SimplicialComplex().with_labels(labels);
  return SimplicialComplex::from_simplices(std::move(out), labels);
}

SimplicialComplex translate(const SimplicialComplex& k, int offset) {
  if (!k.empty() && (k.vertex_set().min_vertex() + offset < 0 ||
                     k.vertex_set().max_vertex() + offset >= kMaxVertices)) {
    throw PreconditionError("translate: ids leave [0, 16)");
  }
  std::array<VertexId, kMaxVertices> map{};
  for (int v = 0; v < kMaxVertices; ++v) {
    map[static_cast<std::size_t>(v)] = static_cast<VertexId>(std::clamp(v + offset, 0, kMaxVertices - 1));
  }
  return relabel(k, map);
}

SimplicialComplex remove_facet(const SimplicialComplex& k, Simplex facet) {
  if (!k.has_facet(facet)) throw PreconditionError("remove_facet: not a facet");
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (f != facet) out.push_back(f);
  }
  // The boundary of the removed facet stays; antichain reduction drops the
  // parts already covered by other facets.
  if (facet.size() > 1) facet.for_each([&](int v) { out.push_back(facet.without(v)); });
  if (out.empty()) return SimplicialComplex().with_labels(k.labels());
  return SimplicialComplex::from_simplices(std::move(out), k.labels());
}

}  // namespace smallcx
