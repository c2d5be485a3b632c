#include "smallcx/permutation.hpp"

#include <deque>

#include "smallcx/errors.hpp"

namespace smallcx {

Permutation::Permutation() {
  for (int i = 0; i < kMaxVertices; ++i) image_[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
}

Permutation::Permutation(const std::array<VertexId, kMaxVertices>& images) : image_(images) {
  Simplex seen;
  for (auto v : image_) {
    if (v >= kMaxVertices || seen.contains(v)) throw PreconditionError("Permutation: not a bijection");
    seen = seen.with(v);
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  Permutation p;
  Simplex used;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int a = cycle[i];
      const int b = cycle[(i + 1) % cycle.size()];
      if (a < 0 || a >= kMaxVertices || used.contains(a)) {
        throw PreconditionError("Permutation::from_cycles: repeated or out-of-range point");
      }
      used = used.with(a);
      p.image_[static_cast<std::size_t>(a)] = static_cast<VertexId>(b);
    }
  }
  return p;
}

Simplex Permutation::operator()(Simplex s) const {
  Simplex out;
  s.for_each([&](int v) { out = out.with(image_[static_cast<std::size_t>(v)]); });
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < kMaxVertices; ++i) {
    if (image_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  for (int i = 0; i < kMaxVertices; ++i) inv.image_[image_[static_cast<std::size_t>(i)]] = static_cast<VertexId>(i);
  return inv;
}

Simplex Permutation::support() const {
  Simplex s;
  for (int i = 0; i < kMaxVertices; ++i) {
    if (image_[static_cast<std::size_t>(i)] != i) s = s.with(i);
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation c;
  for (std::size_t i = 0; i < kMaxVertices; ++i) c.image_[i] = a.image_[b.image_[i]];
  return c;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  Simplex done;
  for (int start = 0; start < kMaxVertices; ++start) {
    if (done.contains(start) || p(start) == start) continue;
    out += '(';
    int v = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(v);
      done = done.with(v);
      v = p(v);
      first = false;
    } while (v != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators, int degree)
    : degree_(degree) {
  if (degree < 0 || degree > kMaxVertices) throw PreconditionError("PermutationGroup: bad degree");
  for (auto& g : generators) {
    if (!(g.support() - Simplex::range(degree)).empty()) {
      throw PreconditionError("PermutationGroup: generator moves a point outside the domain");
    }
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  build_chain();
}

void PermutationGroup::recompute_orbit(Level& level) const {
  level.orbit = Simplex::vertex(level.base);
  level.transversal[static_cast<std::size_t>(level.base)] = Permutation();
  std::deque<int> queue{level.base};
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (const auto& s : level.gens) {
      const int r = s(q);
      if (!level.orbit.contains(r)) {
        level.orbit = level.orbit.with(r);
        level.transversal[static_cast<std::size_t>(r)] = s * level.transversal[static_cast<std::size_t>(q)];
        queue.push_back(r);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < chain_.size(); ++l) {
    const int p = g(chain_[l].base);
    if (!chain_[l].orbit.contains(p)) return {g, l};
    g = chain_[l].transversal[static_cast<std::size_t>(p)].inverse() * g;
  }
  return {g, chain_.size()};
}

void PermutationGroup::build_chain() {
  chain_.clear();
  auto fixes_prefix = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l) {
      if (g(chain_[l].base) != chain_[l].base) return false;
    }
    return true;
  };
  for (const auto& g : generators_) {
    if (fixes_prefix(g, chain_.size())) {
      Level level;
      level.base = g.support().min_vertex();
      chain_.push_back(level);
    }
  }
  for (std::size_t l = 0; l < chain_.size(); ++l) {
    for (const auto& g : generators_) {
      if (fixes_prefix(g, l)) chain_[l].gens.push_back(g);
    }
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain_.size()) - 1;
  while (i >= 0) {
    auto& level = chain_[static_cast<std::size_t>(i)];
    recompute_orbit(level);
    bool restarted = false;
    for (int p = 0; !restarted && p < kMaxVertices; ++p) {
      if (!level.orbit.contains(p)) continue;
      for (std::size_t gi = 0; !restarted && gi < level.gens.size(); ++gi) {
        const Permutation s = level.gens[gi];
        const Permutation h =
            level.transversal[static_cast<std::size_t>(s(p))].inverse() * s * level.transversal[static_cast<std::size_t>(p)];
        auto [residue, j] = sift(h, static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == chain_.size()) {
          Level fresh;
          fresh.base = residue.support().min_vertex();
          chain_.push_back(fresh);
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          chain_[l].gens.push_back(residue);
          if (l != j) recompute_orbit(chain_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  order_ = 1;
  for (const auto& level : chain_) order_ *= static_cast<std::uint64_t>(level.orbit.size());
}

bool PermutationGroup::contains(const Permutation& p) const {
  auto [residue, j] = sift(p, 0);
  return j == chain_.size() && residue.is_identity();
}

Simplex PermutationGroup::orbit(int point) const {
  Simplex orbit = Simplex::vertex(point);
  std::deque<int> queue{point};
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      if (!orbit.contains(g(q))) {
        orbit = orbit.with(g(q));
        queue.push_back(g(q));
      }
    }
  }
  return orbit;
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t limit) const {
  if (order_ > limit) throw PreconditionError("PermutationGroup::elements: group too large");
  std::vector<Permutation> out{Permutation()};
  // g = u_0 * u_1 * ... * u_{k-1}; build from the bottom of the chain up.
  for (auto level = chain_.rbegin(); level != chain_.rend(); ++level) {
    std::vector<Permutation> next;
    next.reserve(out.size() * static_cast<std::size_t>(level->orbit.size()));
    level->orbit.for_each([&](int p) {
      for (const auto& rest : out) next.push_back(level->transversal[static_cast<std::size_t>(p)] * rest);
    });
    out = std::move(next);
  }
  return out;
}

bool PermutationGroup::is_abelian() const {
  for (const auto& a : generators_) {
    for (const auto& b : generators_) {
      if (a * b != b * a) return false;
    }
  }
  return true;
}

bool PermutationGroup::is_transitive_on(Simplex points) const {
  if (points.empty()) return true;
  return orbit(points.min_vertex()).contains(points);
}

}  // namespace smallcx
