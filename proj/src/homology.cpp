#include "smallcx/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "smallcx/errors.hpp"

namespace smallcx {

using boost::multiprecision::cpp_int;

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int i) {
  if (i < 1 || i > k.dim()) throw PreconditionError("boundary_matrix: index out of range");
  BoundaryMatrix b;
  const auto rows = k.faces_of_dim(i - 1);
  const auto cols = k.faces_of_dim(i);
  b.rows.assign(rows.begin(), rows.end());
  b.cols.assign(cols.begin(), cols.end());
  b.entries.assign(b.rows.size(), std::vector<long long>(b.cols.size(), 0));
  for (std::size_t c = 0; c < b.cols.size(); ++c) {
    int sign = 1;
    b.cols[c].for_each([&](int v) {
      const Simplex face = b.cols[c].without(v);
      const auto r = static_cast<std::size_t>(std::lower_bound(b.rows.begin(), b.rows.end(), face) - b.rows.begin());
      b.entries[r][c] = sign;
      sign = -sign;
    });
  }
  return b;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  IntMatrix out(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm out;
  if (input.empty() || input[0].empty()) return out;
  const std::size_t rows = input.size();
  const std::size_t cols = input[0].size();
  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = input[i][j];
  }
  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest non-zero entry of the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const cpp_int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const cpp_int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block; if not, fold a row in
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) {
        diag.push_back(abs(m[t][t]));
        break;
      }
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    if (diag.size() <= t) break;
  }
  for (const auto& d : diag) {
    if (d > std::numeric_limits<long long>::max()) throw InternalContradiction("smith_normal_form: factor overflow");
    out.invariant_factors.push_back(static_cast<long long>(d));
  }
  out.rank = static_cast<int>(diag.size());
  return out;
}

HomologyProfile homology(const SimplicialComplex& k) {
  if (k.dim() > 3) throw PreconditionError("homology: dimension above 3");
  HomologyProfile h;
  if (k.empty()) return h;
  const int d = k.dim();
  std::vector<SmithForm> snf(static_cast<std::size_t>(d + 2));  // snf[i] for boundary i
  for (int i = 1; i <= d; ++i) snf[static_cast<std::size_t>(i)] = smith_normal_form(boundary_matrix(k, i).entries);
  for (int i = 0; i <= d; ++i) {
    const long long f = static_cast<long long>(k.faces_of_dim(i).size());
    const int down = snf[static_cast<std::size_t>(i)].rank;
    const int up = snf[static_cast<std::size_t>(i + 1)].rank;
    h.betti.push_back(static_cast<int>(f - down - up));
    std::vector<long long> tors;
    for (auto x : snf[static_cast<std::size_t>(i + 1)].invariant_factors) {
      if (x > 1) tors.push_back(x);
    }
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

HomologyProfile sphere_homology(int d) {
  HomologyProfile h;
  for (int i = 0; i <= d; ++i) {
    h.betti.push_back(i == 0 || i == d ? 1 : 0);
    h.torsion.emplace_back();
  }
  if (d == 0) h.betti[0] = 2;
  return h;
}

std::string HomologyProfile::format() const {
  std::string out;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) out += "  ";
    out += "H" + std::to_string(i) + "=";
    std::vector<std::string> parts;
    if (betti[i] == 1) parts.push_back("Z");
    if (betti[i] > 1) parts.push_back("Z^" + std::to_string(betti[i]));
    for (auto t : torsion[i]) parts.push_back("Z/" + std::to_string(t));
    if (parts.empty()) parts.push_back("0");
    for (std::size_t p = 0; p < parts.size(); ++p) out += (p ? "+" : "") + parts[p];
  }
  return out;
}

}  // namespace smallcx
