#include "smallcx/lemma.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "case_data.hpp"
#include "smallcx/constructions.hpp"
#include "smallcx/errors.hpp"
#include "smallcx/parallel.hpp"
#include "smallcx/recognition.hpp"

namespace smallcx {

namespace {

void require_two_sphere(const SimplicialComplex& x, const char* what) {
  if (x.dim() != 2 || !is_two_sphere(x)) throw PreconditionError(std::string(what) + ": input is not a 2-sphere");
}

void require_neighbourly_9(const SimplicialComplex& k, const char* what, bool manifold) {
  const bool shape = k.dim() == 3 && k.vertex_count() == 9 && k.is_pure() && is_neighbourly(k);
  if (!shape || (manifold && !is_combinatorial_3_manifold(k))) {
    throw PreconditionError(std::string(what) + ": need a neighbourly 9-vertex " +
                            (manifold ? "combinatorial 3-manifold" : "pure 3-dimensional complex"));
  }
}

int triangles_inside(const SimplicialComplex& x, Simplex quad) {
  int n = 0;
  quad.for_each([&](int v) { n += x.has_facet(quad.without(v)) ? 1 : 0; });
  return n;
}

// Pivoting Bron-Kerbosch for cliques of the complement graph.
struct CocliqueSearch {
  std::vector<std::uint64_t> free;  // free[i]: nodes not adjacent to i, excluding i
  std::vector<NodeSet> found;

  void expand(NodeSet r, NodeSet p, NodeSet x) {
    if (p == 0) {
      if (x == 0) found.push_back(r);
      return;
    }
    for (NodeSet v = p & ~free[pivot(p, x)]; v != 0; v &= v - 1) {
      const int i = std::countr_zero(v);
      const NodeSet bit = NodeSet{1} << i;
      expand(r | bit, p & free[static_cast<std::size_t>(i)], x & free[static_cast<std::size_t>(i)]);
      p &= ~bit;
      x |= bit;
    }
  }

  [[nodiscard]] std::size_t pivot(NodeSet p, NodeSet x) const {
    std::size_t best = 0;
    int best_count = -1;
    for (NodeSet u = p | x; u != 0; u &= u - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(u));
      const int c = std::popcount(p & free[i]);
      if (c > best_count) {
        best_count = c;
        best = i;
      }
    }
    return best;
  }
};

}  // namespace

std::optional<std::size_t> CandidateGraph::index_of(Simplex node) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), node, [](Simplex a, Simplex b) { return lex_less(a, b); });
  if (it == nodes.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

CandidateGraph candidate_graph(const SimplicialComplex& x) {
  require_two_sphere(x, "candidate_graph");
  CandidateGraph g;
  g.base = x;
  for (Simplex q : subsets_of_size(x.vertex_set(), 4)) {
    const int t = triangles_inside(x, q);
    if (t == 1 || t == 2) g.nodes.push_back(q);
  }
  if (g.nodes.size() > 64) throw PreconditionError("candidate_graph: more than 64 nodes");
  std::sort(g.nodes.begin(), g.nodes.end(), [](Simplex a, Simplex b) { return lex_less(a, b); });
  g.adjacency.assign(g.nodes.size(), 0);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    g.triangle_count.push_back(triangles_inside(x, g.nodes[i]));
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const Simplex common = g.nodes[i] & g.nodes[j];
      if (i != j && common.size() == 3 && x.has_facet(common)) g.adjacency[i] |= std::uint64_t{1} << j;
    }
  }
  return g;
}

long long alpha_formula(int k) {
  if (k < 5) throw PreconditionError("alpha_formula: the closed form applies for k >= 5 only");
  return static_cast<long long>(k - 2) * (2LL * k - 9);
}

int alpha(const SimplicialComplex& x) {
  require_two_sphere(x, "alpha");
  if (x.vertex_count() < 5) throw PreconditionError("alpha: need at least 5 vertices");
  return static_cast<int>(candidate_graph(x).size());
}

std::vector<NodeSet> maximal_cocliques(const CandidateGraph& g, int threads) {
  const std::size_t n = g.size();
  const NodeSet all = n == 64 ? ~NodeSet{0} : (NodeSet{1} << n) - 1;
  CocliqueSearch root;
  for (std::size_t i = 0; i < n; ++i) root.free.push_back(all & ~g.adjacency[i] & ~(NodeSet{1} << i));
  if (n == 0) return {};

  // Unroll the top level so each branch is an independent task.
  struct Branch {
    int v;
    NodeSet p, x;
  };
  std::vector<Branch> branches;
  NodeSet p = all, x = 0;
  for (NodeSet v = p & ~root.free[root.pivot(p, x)]; v != 0; v &= v - 1) {
    const int i = std::countr_zero(v);
    branches.push_back({i, p, x});
    p &= ~(NodeSet{1} << i);
    x |= NodeSet{1} << i;
  }

  std::vector<std::vector<NodeSet>> results(branches.size());
  parallel_for(branches.size(), threads, [&](std::size_t b) {
    CocliqueSearch local{root.free, {}};
    const auto& br = branches[b];
    const auto i = static_cast<std::size_t>(br.v);
    local.expand(NodeSet{1} << br.v, br.p & root.free[i], br.x & root.free[i]);
    results[b] = std::move(local.found);
  });
  std::vector<NodeSet> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

Family to_family(const CandidateGraph& g, NodeSet s) {
  Family f;
  for (; s != 0; s &= s - 1) f.push_back(g.nodes[static_cast<std::size_t>(std::countr_zero(s))]);
  return normalize_family(std::move(f));
}

bool is_independent(const CandidateGraph& g, const Family& f) {
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      const Simplex common = f[a] & f[b];
      if (common.size() == 3 && g.base.has_facet(common)) return false;
    }
  }
  return true;
}

bool is_maximal_coclique(const CandidateGraph& g, const Family& f) {
  NodeSet members = 0;
  for (Simplex s : f) {
    auto i = g.index_of(s);
    if (!i) return false;
    members |= NodeSet{1} << *i;
  }
  if (!is_independent(g, f)) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!((members >> i) & 1u) && (g.adjacency[i] & members) == 0) return false;
  }
  return true;
}

bool covers_triangles_once(const CandidateGraph& g, const Family& f) {
  for (Simplex t : g.base.facets()) {
    const auto n = std::count_if(f.begin(), f.end(), [&](Simplex s) { return s.contains(t); });
    if (n != 1) return false;
  }
  return true;
}

CocliqueCensus coclique_census(const SimplicialComplex& x, int min_size, int max_size, int threads) {
  require_two_sphere(x, "coclique_census");
  if (x.vertex_count() < 5 || x.vertex_count() > 7) {
    throw PreconditionError("coclique_census: need a 2-sphere on 5 to 7 vertices");
  }
  const auto g = candidate_graph(x);
  const auto group = automorphism_group(x);
  CocliqueCensus c;
  c.group_order = group.order();
  for (NodeSet s : maximal_cocliques(g, threads)) {
    const int size = std::popcount(s);
    if (size < min_size || size > max_size) continue;
    Family f = to_family(g, s);
    if (covers_triangles_once(g, f)) c.admissible[size].push_back(f);
    c.by_size[size].push_back(std::move(f));
  }
  for (const auto& [size, list] : c.by_size) c.orbit_reps[size] = orbits(group, list);
  for (const auto& [size, list] : c.admissible) c.admissible_orbits[size] = orbits(group, list);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_labels(const std::string& token) {
  std::vector<std::string> out;
  if (token.find(',') == std::string::npos) {
    for (char ch : token) out.emplace_back(1, ch);
    return out;
  }
  std::istringstream in(token);
  for (std::string part; std::getline(in, part, ',');) out.push_back(part);
  return out;
}

Permutation parse_cycles(const SimplicialComplex& x, const std::string& token) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while ((pos = token.find('(', pos)) != std::string::npos) {
    const auto close = token.find(')', pos);
    if (close == std::string::npos) throw ParseError("case data: unbalanced cycle in " + token);
    std::vector<int> cyc;
    std::istringstream in(token.substr(pos + 1, close - pos - 1));
    for (std::string lab; std::getline(in, lab, ',');) cyc.push_back(x.vertex_of(lab));
    cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  return Permutation::from_cycles(cycles);
}

std::vector<ReferenceCases> parse_case_data(std::string_view text) {
  std::vector<ReferenceCases> out;
  std::optional<SimplicialComplex> x;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string key;
    if (!(words >> key) || key.starts_with('#')) continue;
    if (key == "sphere") {
      out.emplace_back();
      words >> out.back().sphere;
      x = lookup_complex(out.back().sphere);
      continue;
    }
    if (out.empty()) throw ParseError("case data: entry before any sphere line");
    auto& cur = out.back();
    auto member = [&](const std::string& tok) {
      if (tok.size() > 1 && tok[0] == 'v' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
        const auto idx = static_cast<std::size_t>(std::stoul(tok.substr(1)));
        if (idx == 0 || idx > cur.nodes.size()) throw ParseError("case data: bad node reference " + tok);
        return cur.nodes[idx - 1];
      }
      return x->simplex_of(split_labels(tok));
    };
    if (key == "nodes") {
      for (std::string tok; words >> tok;) cur.nodes.push_back(member(tok));
    } else if (key == "generators") {
      for (std::string tok; words >> tok;) cur.generators.push_back(parse_cycles(*x, tok));
    } else if (key == "case") {
      ReferenceCase rc;
      words >> rc.label;
      for (std::string tok; words >> tok;) rc.members.push_back(member(tok));
      rc.members = normalize_family(std::move(rc.members));
      cur.cases.push_back(std::move(rc));
    } else {
      throw ParseError("case data: unknown key " + key);
    }
  }
  return out;
}

}  // namespace

const std::vector<ReferenceCases>& reference_cases() {
  static const std::vector<ReferenceCases> data = parse_case_data(coclique_case_text());
  return data;
}

const ReferenceCases& reference_cases(const std::string& sphere) {
  for (const auto& r : reference_cases()) {
    if (r.sphere == sphere) return r;
  }
  throw PreconditionError("no reference cases for " + sphere);
}

CaseReport check_reference_cases(const std::string& sphere, int threads) {
  const auto& ref = reference_cases(sphere);
  const SimplicialComplex x = lookup_complex(sphere);
  const auto g = candidate_graph(x);
  const auto group = automorphism_group(x);

  CaseReport r;
  r.sphere = sphere;
  r.vertices = x.vertex_count();
  r.census = coclique_census(x, 1, 64, threads);

  if (!ref.nodes.empty()) {
    auto listed = ref.nodes;
    std::sort(listed.begin(), listed.end(), [](Simplex a, Simplex b) { return lex_less(a, b); });
    r.node_list_matches = listed == g.nodes;
  }
  if (!ref.generators.empty()) {
    const Family facets = normalize_family(x.facets());
    bool ok = std::all_of(ref.generators.begin(), ref.generators.end(),
                          [&](const Permutation& p) { return image_of(p, facets) == facets; });
    r.generators_match = ok && PermutationGroup(ref.generators, group.degree()).order() == group.order();
  }

  if (x.vertex_count() == 7) {
    r.compared_sizes = {5, 6};
  } else {
    std::set<int> sizes;
    for (const auto& c : ref.cases) sizes.insert(static_cast<int>(c.members.size()));
    for (const auto& [size, list] : r.census.admissible_orbits) sizes.insert(size);
    r.compared_sizes.assign(sizes.begin(), sizes.end());
  }
  for (int s : r.compared_sizes) {
    r.expected_orbits[s] = static_cast<int>(std::count_if(ref.cases.begin(), ref.cases.end(), [&](const auto& c) {
      return static_cast<int>(c.members.size()) == s;
    }));
    auto it = r.census.admissible_orbits.find(s);
    r.computed_orbits[s] = it == r.census.admissible_orbits.end() ? 0 : static_cast<int>(it->second.size());
  }

  bool cases_ok = true;
  std::map<std::pair<int, std::size_t>, std::string> hit;
  for (const auto& c : ref.cases) {
    CaseMatch m;
    m.label = c.label;
    m.size = static_cast<int>(c.members.size());
    m.independent = is_independent(g, c.members);
    m.maximal = is_maximal_coclique(g, c.members);
    m.admissible = m.maximal && covers_triangles_once(g, c.members);
    if (m.admissible) {
      const Family rep = orbits(group, {c.members}).front().representative;
      const auto& classes = r.census.admissible_orbits[m.size];
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].representative == rep) m.orbit = i;
      }
      if (m.orbit) {
        auto [it, fresh] = hit.emplace(std::pair{m.size, *m.orbit}, m.label);
        if (!fresh) m.duplicate_of = it->second;
      }
    }
    cases_ok = cases_ok && m.admissible && m.orbit && !m.duplicate_of;
    r.matches.push_back(std::move(m));
  }
  for (int s : r.compared_sizes) {
    const auto n = r.census.admissible_orbits.count(s) ? r.census.admissible_orbits.at(s).size() : 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!hit.count({s, i})) r.unmatched_orbits.emplace_back(s, i);
    }
  }
  r.pass = cases_ok && r.unmatched_orbits.empty() && r.expected_orbits == r.computed_orbits &&
           r.node_list_matches.value_or(true) && r.generators_match.value_or(true);
  return r;
}

// ---------------------------------------------------------------------------

FacetDegreeLedger facet_degree_ledger(const SimplicialComplex& k) {
  require_neighbourly_9(k, "facet_degree_ledger", true);
  FacetDegreeLedger out;
  out.edge_degrees = edge_degree_histogram(k);
  for (const auto& [deg, count] : out.edge_degrees) {
    out.edge_total += count;
    out.weighted_total += static_cast<long long>(deg) * count;
  }
  out.dichotomy_holds = true;
  out.count_identity_holds = true;
  for (Simplex f : k.facets()) {
    FacetDegreeEntry e{f, 0, 0, std::nullopt};
    for (Simplex edge : k.faces_of_dim(1)) {
      if (f.contains(edge)) e.degree_sum += degree(k, edge);
    }
    for (Simplex g : k.facets()) {
      if (f.disjoint(g)) {
        ++e.disjoint_facets;
        e.disjoint_partner = g;
      }
    }
    out.count_identity_holds = out.count_identity_holds && e.degree_sum - 28 == e.disjoint_facets;
    out.dichotomy_holds =
        out.dichotomy_holds && e.disjoint_facets <= 1 && e.degree_sum == (e.disjoint_facets == 1 ? 29 : 28);
    out.entries.push_back(e);
  }
  return out;
}

AllTwentyEight all_twenty_eight_system() {
  AllTwentyEight out;
  std::vector<int> t(6, 3);
  // Non-decreasing 6-tuples over {3,4,5}.
  auto advance = [&] {
    int i = 5;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == 5) --i;
    if (i < 0) return false;
    const int v = t[static_cast<std::size_t>(i)] + 1;
    for (auto j = static_cast<std::size_t>(i); j < 6; ++j) t[j] = v;
    return true;
  };
  do {
    if (std::accumulate(t.begin(), t.end(), 0) == 28) out.facet_types.push_back(t);
  } while (advance());

  // Cramer's rule on the integer system.
  const long long a[3][3] = {{1, 1, 1}, {3, 4, 5}, {3, 4, 0}};
  const long long b[3] = {36, 162, 27};
  auto det = [](const long long m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const long long d = det(a);
  long long sol[3];
  out.integral = d != 0;
  for (int c = 0; c < 3; ++c) {
    long long m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = j == c ? b[i] : a[i][j];
    const long long n = det(m);
    out.integral = out.integral && n % d == 0;
    sol[c] = d == 0 ? 0 : n / d;
  }
  out.e3 = sol[0];
  out.e4 = sol[1];
  out.e5 = sol[2];
  return out;
}

ComplementReport verify_complement_dichotomy(const SimplicialComplex& k) {
  require_neighbourly_9(k, "verify_complement_dichotomy", true);
  const std::vector<long long> first{5, 10, 7, 1}, second{5, 10, 6, 0};
  ComplementReport out;
  out.pass = true;
  for (Simplex f : k.facets()) {
    const auto c = simplicial_complement(k, f);
    ComplementEntry e;
    e.facet = f;
    e.f_vector = c.f_vector().counts;
    e.f_vector.resize(4, 0);
    e.euler = euler_characteristic(c);
    e.collapsible = is_collapsible(c).collapsible;
    e.ok = (e.f_vector == first || e.f_vector == second) && e.euler == 1 && !e.collapsible;
    out.pass = out.pass && e.ok;
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::vector<std::pair<Simplex, Simplex>> disjoint_facet_pairs(const SimplicialComplex& k) {
  std::vector<std::pair<Simplex, Simplex>> out;
  const auto& fs = k.facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (fs[i].disjoint(fs[j])) out.emplace_back(fs[i], fs[j]);
    }
  }
  return out;
}

std::vector<GoodVertex> good_vertices(const SimplicialComplex& k) {
  if (k.dim() != 3 || k.vertex_count() != 9 || !is_combinatorial_3_manifold(k)) {
    throw PreconditionError("good_vertices: need a 9-vertex combinatorial 3-manifold");
  }
  std::vector<GoodVertex> out;
  for (int v : k.vertex_set().vertices()) {
    const Simplex rest = k.vertex_set().without(v);
    GoodVertex gv{static_cast<VertexId>(v), {}};
    for (Simplex f : k.facets()) {
      const Simplex other = rest - f;
      if (rest.contains(f) && f < other && k.has_facet(other)) gv.partitions.emplace_back(f, other);
    }
    if (!gv.partitions.empty()) out.push_back(std::move(gv));
  }
  return out;
}

GoodLinkReport verify_good_vertex_links(const SimplicialComplex& k) {
  GoodLinkReport r;
  r.good = good_vertices(k);
  r.disjoint_pairs = disjoint_facet_pairs(k).size();
  const auto cal_s = lookup_complex("calS");
  const auto cal_t = lookup_complex("calT");
  bool links_ok = true;
  for (const auto& gv : r.good) {
    r.partition_count += gv.partitions.size();
    const auto lk = link(k, Simplex::vertex(gv.vertex));
    r.link_is_cal_s.push_back(are_isomorphic(lk, cal_s).isomorphic);
    r.link_is_cal_t.push_back(are_isomorphic(lk, cal_t).isomorphic);
    links_ok = links_ok && r.link_is_cal_s.back() && !r.link_is_cal_t.back();
  }
  r.pass = !r.good.empty() && links_ok && r.partition_count == r.disjoint_pairs;
  return r;
}

namespace {

// A 3-cycle on three vertices of `side` plus the fourth as an isolated point.
bool cycle_plus_point(const SimplicialComplex& c, Simplex side) {
  Simplex edges_span, points;
  int edges = 0;
  for (Simplex f : c.facets()) {
    if (f.size() == 2) {
      ++edges;
      edges_span = edges_span | f;
    } else if (f.size() == 1) {
      points = points | f;
    } else {
      return false;
    }
  }
  return edges == 3 && edges_span.size() == 3 && points.size() == 1 && edges_span.disjoint(points) &&
         (edges_span | points) == side;
}

}  // namespace

DisjointLinkReport verify_disjoint_facet_links(const SimplicialComplex& k) {
  require_neighbourly_9(k, "verify_disjoint_facet_links", false);
  DisjointLinkReport r;
  r.pass = true;
  for (const auto& [a, b] : disjoint_facet_pairs(k)) {
    const Simplex left = k.vertex_set() - a - b;
    const auto x = static_cast<VertexId>(left.min_vertex());
    const auto lk = link(k, Simplex::vertex(x));
    for (Simplex side : {a, b}) {
      DisjointLinkEntry e{a, b, x, side, cycle_plus_point(induced_subcomplex(lk, side), side)};
      r.pass = r.pass && e.ok;
      r.entries.push_back(e);
    }
  }
  return r;
}

}  // namespace smallcx
