#include "smallcx/simplex.hpp"

#include <algorithm>

namespace smallcx {

bool lex_less(Simplex a, Simplex b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string to_string(Simplex s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::vector<Simplex> subsets_of_size(Simplex from, int k) {
  std::vector<Simplex> out;
  if (k < 0 || k > from.size()) return out;
  const auto verts = from.vertices();
  const int n = static_cast<int>(verts.size());
  // Gosper's hack over positions, then map positions to vertices.
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  for (unsigned pos = (1u << k) - 1u; pos < (1u << n);) {
    Simplex::Mask m = 0;
    for (int i = 0; i < n; ++i) {
      if ((pos >> i) & 1u) m = static_cast<Simplex::Mask>(m | (1u << verts[static_cast<std::size_t>(i)]));
    }
    out.emplace_back(m);
    const unsigned c = pos & -pos;
    const unsigned r = pos + c;
    pos = (((r ^ pos) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace smallcx
