#include "smallcx/bistellar.hpp"

#include <algorithm>
#include <map>

#include "smallcx/constructions.hpp"
#include "smallcx/errors.hpp"
#include "smallcx/isomorphism.hpp"
#include "smallcx/recognition.hpp"

namespace smallcx {

bool lex_less(const BistellarMove& a, const BistellarMove& b) {
  if (a.alpha != b.alpha) return lex_less(a.alpha, b.alpha);
  if (a.beta != b.beta) return lex_less(a.beta, b.beta);
  return a.type < b.type;
}

std::string describe(const SimplicialComplex& k, const BistellarMove& m) {
  return "alpha=" + k.format(m.alpha) + " beta=" + k.format(m.beta) + " type=" + std::to_string(m.type);
}

Removability check_removable(const SimplicialComplex& k, Simplex alpha) {
  Removability r;
  if (!k.has_face(alpha)) {
    r.reason = "not a face";
    return r;
  }
  const int d = k.dim();
  if (alpha.size() == d + 1) {
    r.reason = "α is a facet";
    return r;
  }
  const int i = d + 1 - alpha.size();
  Simplex around;
  int count = 0;
  bool pure = true;
  for (Simplex f : k.facets()) {
    if (!f.contains(alpha)) continue;
    ++count;
    around = around | f;
    pure = pure && f.size() == d + 1;
  }
  const Simplex beta = around - alpha;
  if (!pure || count != i + 1 || beta.size() != i + 1) {
    r.reason = "link is not a simplex boundary";
    return r;
  }
  if (k.has_face(beta)) {
    r.reason = "β is a face";
    return r;
  }
  r.removable = true;
  r.move = BistellarMove{alpha, beta, i};
  return r;
}

namespace {

std::vector<BistellarMove> moves_of_type(const SimplicialComplex& k, int i) {
  std::vector<BistellarMove> out;
  for (Simplex a : k.faces_of_dim(k.dim() - i)) {
    auto r = check_removable(k, a);
    if (r.removable) out.push_back(*r.move);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

BistellarMove map_move(const BistellarMove& m, const std::array<VertexId, kMaxVertices>& phi) {
  auto img = [&](Simplex s) {
    Simplex out;
    s.for_each([&](int v) { out = out.with(phi[static_cast<std::size_t>(v)]); });
    return out;
  };
  return {img(m.alpha), img(m.beta), m.type};
}

}  // namespace

std::vector<BistellarMove> removable_faces(const SimplicialComplex& k, int i) {
  if (i <= 0 || i > k.dim()) throw PreconditionError("removable_faces: need 0 < i <= d");
  if (!is_pseudomanifold(k)) throw PreconditionError("removable_faces: input is not a pseudomanifold");
  return moves_of_type(k, i);
}

std::vector<BistellarMove> proper_moves_unchecked(const SimplicialComplex& k) {
  std::vector<BistellarMove> out;
  for (int i = 1; i < k.dim(); ++i) {
    auto m = moves_of_type(k, i);
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

SimplicialComplex apply_move(const SimplicialComplex& k, const BistellarMove& m) {
  const auto r = check_removable(k, m.alpha);
  if (!r.removable || r.move->beta != m.beta || r.move->type != m.type) {
    throw PreconditionError("apply_move: stale move (" + describe(k, m) + ")");
  }
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (!f.contains(m.alpha)) out.push_back(f);
  }
  m.alpha.for_each([&](int v) { out.push_back(m.beta | m.alpha.without(v)); });
  return SimplicialComplex::from_simplices(std::move(out), k.labels());
}

BistellarMove inverse_move(const BistellarMove& m, int d) { return {m.beta, m.alpha, d - m.type}; }

SimplicialComplex star_vertex(const SimplicialComplex& k, Simplex facet, VertexId fresh, std::string label) {
  if (!k.has_facet(facet)) throw PreconditionError("star_vertex: not a facet");
  if (fresh >= kMaxVertices || k.vertex_set().contains(fresh)) {
    throw PreconditionError("star_vertex: vertex id is not fresh");
  }
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (f != facet) out.push_back(f);
  }
  facet.for_each([&](int v) { out.push_back(facet.without(v).with(fresh)); });
  LabelMap labels = k.labels();
  labels[fresh] = label.empty() ? std::to_string(fresh) : std::move(label);
  return SimplicialComplex::from_simplices(std::move(out), labels);
}

std::vector<BistellarMove> degree_raising_moves(const SimplicialComplex& k, VertexId u) {
  if (k.dim() != 3) throw PreconditionError("degree_raising_moves: dimension must be 3");
  if (!k.vertex_set().contains(u)) throw PreconditionError("degree_raising_moves: vertex not in complex");
  std::vector<BistellarMove> out;
  for (Simplex f : k.facets()) {
    if (!f.contains(u)) continue;
    auto r = check_removable(k, f.without(u));
    if (r.removable && r.move->beta.contains(u)) out.push_back(*r.move);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

BistellarMove raise_min_degree(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  if (k.dim() != 3 || n > 9 || !is_combinatorial_3_manifold(k)) {
    throw PreconditionError("raise_min_degree: need a combinatorial 3-manifold on at most 9 vertices");
  }
  int min_deg = n;
  for (int v : k.vertex_set().vertices()) min_deg = std::min(min_deg, degree(k, Simplex::vertex(v)));
  if (min_deg > n - 2) throw PreconditionError("raise_min_degree: already neighbourly");
  std::optional<BistellarMove> best;
  for (int v : k.vertex_set().vertices()) {
    if (degree(k, Simplex::vertex(v)) != min_deg) continue;
    for (const auto& m : degree_raising_moves(k, static_cast<VertexId>(v))) {
      if (!best || lex_less(m, *best)) best = m;
    }
  }
  if (!best) throw InternalContradiction("raise_min_degree: no degree-raising 1-move exists");
  return *best;
}

Reduction neighbourly_reduction(const SimplicialComplex& k) {
  if (k.dim() != 3 || k.vertex_count() != 9 || !is_combinatorial_3_manifold(k)) {
    throw PreconditionError("neighbourly_reduction: need a 9-vertex combinatorial 3-manifold");
  }
  Reduction r{k, {}};
  while (!is_neighbourly(r.result)) {
    const auto m = raise_min_degree(r.result);
    r.result = apply_move(r.result, m);
    r.moves.push_back(m);
    if (r.moves.size() > 36) throw InternalContradiction("neighbourly_reduction: no progress");
  }
  return r;
}

FlipSearch flip_reachable(const SimplicialComplex& k, const SimplicialComplex& l, int move_budget,
                          std::size_t state_cap) {
  if (move_budget <= 0 || state_cap == 0) throw PreconditionError("flip_reachable: budget and cap must be positive");
  if (k.dim() != l.dim()) throw PreconditionError("flip_reachable: dimensions differ");
  FlipSearch out;
  const int d = k.dim();

  struct Node {
    SimplicialComplex cx;
    int parent;
    BistellarMove move;
  };
  struct Side {
    std::vector<Node> nodes;
    std::map<std::vector<std::uint8_t>, int> seen;
    std::vector<int> frontier;
    int depth = 0;
  };
  Side fwd, bwd;
  auto seed = [](Side& s, const SimplicialComplex& c) {
    s.nodes.push_back({c, -1, {}});
    s.seen.emplace(canonical_form(c).bytes, 0);
    s.frontier = {0};
  };
  seed(fwd, k);
  seed(bwd, l);
  out.states = 2;
  if (fwd.seen.begin()->first == bwd.seen.begin()->first) {
    out.found = true;
    return out;
  }

  auto chain = [](const Side& s, int idx) {
    std::vector<BistellarMove> moves;
    for (; s.nodes[static_cast<std::size_t>(idx)].parent >= 0; idx = s.nodes[static_cast<std::size_t>(idx)].parent) {
      moves.push_back(s.nodes[static_cast<std::size_t>(idx)].move);
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };
  auto finish = [&](int fi, int bi) {
    out.found = true;
    out.path = chain(fwd, fi);
    const auto& xf = fwd.nodes[static_cast<std::size_t>(fi)].cx;
    const auto& xb = bwd.nodes[static_cast<std::size_t>(bi)].cx;
    const auto phi = *are_isomorphic(xb, xf).witness;
    auto back = chain(bwd, bi);
    for (auto it = back.rbegin(); it != back.rend(); ++it) out.path.push_back(map_move(inverse_move(*it, d), phi));
  };

  while (fwd.depth + bwd.depth < move_budget && !fwd.frontier.empty() && !bwd.frontier.empty()) {
    const bool forward = fwd.frontier.size() <= bwd.frontier.size();
    Side& me = forward ? fwd : bwd;
    const Side& other = forward ? bwd : fwd;
    std::vector<int> next;
    for (int idx : me.frontier) {
      const SimplicialComplex cur = me.nodes[static_cast<std::size_t>(idx)].cx;
      for (const auto& m : proper_moves_unchecked(cur)) {
        auto child = apply_move(cur, m);
        auto bytes = canonical_form(child).bytes;
        if (me.seen.count(bytes)) continue;
        const int id = static_cast<int>(me.nodes.size());
        me.nodes.push_back({std::move(child), idx, m});
        ++out.states;
        if (auto hit = other.seen.find(bytes); hit != other.seen.end()) {
          if (forward) {
            finish(id, hit->second);
          } else {
            finish(hit->second, id);
          }
          return out;
        }
        me.seen.emplace(std::move(bytes), id);
        next.push_back(id);
        if (out.states >= state_cap) return out;
      }
    }
    me.frontier = std::move(next);
    ++me.depth;
  }
  return out;
}

SimplicialComplex random_proper_walk(const SimplicialComplex& k, int count, std::mt19937_64& rng,
                                     std::vector<BistellarMove>* moves) {
  SimplicialComplex cur = k;
  for (int t = 0; t < count; ++t) {
    const auto options = proper_moves_unchecked(cur);
    if (options.empty()) break;
    const auto& m = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    cur = apply_move(cur, m);
    if (moves) moves->push_back(m);
  }
  return cur;
}

namespace {

SimplicialComplex star_random_facet(const SimplicialComplex& k, std::mt19937_64& rng) {
  const auto& fs = k.facets();
  const Simplex f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
  const auto fresh = static_cast<VertexId>(k.vertex_set().max_vertex() + 1);
  return star_vertex(k, f, fresh, std::to_string(fresh + 1));
}

}  // namespace

SimplicialComplex random_sphere3(int n, int extra_proper, std::mt19937_64& rng) {
  if (n < 5 || n > kMaxVertices) throw PreconditionError("random_sphere3: n must be in [5, 16]");
  SimplicialComplex k = standard_sphere(3);
  std::bernoulli_distribution coin(0.5);
  while (k.vertex_count() < n) {
    if (coin(rng)) {
      k = star_random_facet(k, rng);
    } else {
      k = random_proper_walk(k, 1, rng);
    }
  }
  return random_proper_walk(k, extra_proper, rng);
}

SimplicialComplex stacked_sphere3(int n, std::mt19937_64& rng) {
  if (n < 5 || n > kMaxVertices) throw PreconditionError("stacked_sphere3: n must be in [5, 16]");
  SimplicialComplex k = standard_sphere(3);
  while (k.vertex_count() < n) k = star_random_facet(k, rng);
  return k;
}

}  // namespace smallcx
