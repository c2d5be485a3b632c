#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

std::set<std::vector<int>> all_faces(const Facets& facets) {
  std::set<std::vector<int>> out;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (m & (1u << i)) s.push_back(f[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

std::vector<long long> f_vector(const Facets& facets) {
  std::vector<long long> f;
  for (const auto& s : all_faces(facets)) {
    if (f.size() < s.size()) f.resize(s.size(), 0);
    ++f[s.size() - 1];
  }
  return f;
}

namespace {

std::set<std::vector<int>> normalized(const Facets& facets, const std::vector<int>& perm) {
  std::set<std::vector<int>> out;
  for (const auto& f : facets) {
    std::vector<int> g;
    for (int v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    out.insert(g);
  }
  return out;
}

}  // namespace

std::uint64_t automorphism_count(const Facets& facets, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = normalized(facets, perm);
  std::uint64_t count = 0;
  do {
    if (normalized(facets, perm) == target) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool isomorphic(const Facets& a, const Facets& b, int n) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = normalized(b, perm);
  do {
    if (normalized(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int rational_rank(Matrix m) {
  if (m.empty()) return 0;
  std::vector<std::vector<double>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r; i < rows; ++i) {
      if (std::fabs(a[i][c]) > std::fabs(a[piv][c])) piv = i;
    }
    if (std::fabs(a[piv][c]) < 1e-9) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const double k = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= k * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

int rank_mod_p(Matrix m, long long p) {
  if (m.empty()) return 0;
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const long long k = m[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - k * m[r][j]) % p + p) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> maximal_independent_sets(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j : adj[static_cast<std::size_t>(i)]) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (int v = 0; v < n; ++v) {
        if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
        bool blocked = false;
        for (int u : cur) blocked = blocked || a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (!blocked) return;
      }
      out.push_back(cur);
      return;
    }
    bool free = true;
    for (int u : cur) free = free && !a[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
    if (free) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

namespace {

// Least relabeled, sorted facet list over all n! vertex permutations.
Facets brute_canonical(const Facets& facets, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Facets best;
  do {
    Facets img;
    for (const auto& f : facets) {
      std::vector<int> g;
      for (int v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(g.begin(), g.end());
      img.push_back(g);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::size_t two_sphere_classes_by_flips(int n) {
  if (n == 4) return 1;
  // Double pyramid over the (n-2)-cycle 0..n-3 with apexes n-2, n-1.
  Facets start;
  for (int i = 0; i < n - 2; ++i) {
    const int j = (i + 1) % (n - 2);
    for (int apex : {n - 2, n - 1}) {
      std::vector<int> f{i, j, apex};
      std::sort(f.begin(), f.end());
      start.push_back(f);
    }
  }
  std::set<Facets> seen{brute_canonical(start, n)};
  std::vector<Facets> queue{start};
  while (!queue.empty()) {
    const Facets cur = queue.back();
    queue.pop_back();
    std::set<std::pair<int, int>> edges;
    for (const auto& f : cur) {
      edges.insert({f[0], f[1]});
      edges.insert({f[0], f[2]});
      edges.insert({f[1], f[2]});
    }
    for (auto [a, b] : edges) {
      std::vector<int> opposite;
      Facets rest;
      for (const auto& f : cur) {
        const bool has = std::find(f.begin(), f.end(), a) != f.end() && std::find(f.begin(), f.end(), b) != f.end();
        if (!has) {
          rest.push_back(f);
          continue;
        }
        for (int v : f) {
          if (v != a && v != b) opposite.push_back(v);
        }
      }
      const int c = std::min(opposite[0], opposite[1]), d = std::max(opposite[0], opposite[1]);
      if (edges.count({c, d})) continue;
      for (int apex : {a, b}) {
        std::vector<int> f{c, d, apex};
        std::sort(f.begin(), f.end());
        rest.push_back(f);
      }
      if (seen.insert(brute_canonical(rest, n)).second) queue.push_back(rest);
    }
  }
  return seen.size();
}

}  // namespace oracle
