#include "smallcx/constructions.hpp"

#include <charconv>
#include <sstream>

#include "smallcx/errors.hpp"

namespace smallcx {

namespace {

SimplicialComplex with_numeric_labels(std::vector<Simplex> facets, int n) {
  LabelMap labels;
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  return SimplicialComplex::from_simplices(std::move(facets), labels);
}

// "x12 x23" -> {{"x","1","2"},{"x","2","3"}}: one character per label.
SimplicialComplex compact(const std::string& text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    std::vector<std::string> f;
    for (char c : word) f.emplace_back(1, c);
    facets.push_back(std::move(f));
  }
  return from_facets(facets);
}

int parse_suffix(const std::string& name, std::size_t prefix_len) {
  int value = -1;
  const char* first = name.data() + prefix_len;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw PreconditionError("unknown complex name: " + name);
  }
  return value;
}

}  // namespace

SimplicialComplex standard_sphere(int d) {
  if (d < 0 || d > 13) throw PreconditionError("standard_sphere: d must be in [0, 13]");
  return with_numeric_labels(subsets_of_size(Simplex::range(d + 2), d + 1), d + 2);
}

SimplicialComplex cycle(int n) {
  if (n < 3 || n > kMaxVertices) throw PreconditionError("cycle: n must be in [3, 16]");
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Simplex{i, (i + 1) % n});
  return with_numeric_labels(std::move(edges), n);
}

SimplicialComplex walkup_complex(int d) {
  const int n = 2 * d + 3;
  if (d < 2 || n > kMaxVertices) throw PreconditionError("walkup_complex: need d >= 2 and 2d+3 <= 16");
  std::vector<Simplex> facets;
  for (int start = 0; start < n; ++start) {
    Simplex path;
    for (int j = 0; j < d + 2; ++j) path = path.with((start + j) % n);
    for (int j = 1; j <= d; ++j) facets.push_back(path.without((start + j) % n));
  }
  return with_numeric_labels(std::move(facets), n);
}

SimplicialComplex cyclic_sphere_c37() {
  constexpr int n = 7;
  std::vector<Simplex> facets;
  for (Simplex s : subsets_of_size(Simplex::range(n), 4)) {
    // walk each maximal run of consecutive vertices and check its parity
    bool even = true;
    for (int v = 0; v < n; ++v) {
      if (!s.contains(v) || s.contains((v + n - 1) % n)) continue;
      int run = 0;
      for (int w = v; s.contains(w % n) && run < n; ++w) ++run;
      if (run % 2 != 0) even = false;
    }
    if (even) facets.push_back(s);
  }
  return with_numeric_labels(std::move(facets), n);
}

SimplicialComplex connected_sum_remark1() {
  const SimplicialComplex c = cyclic_sphere_c37();
  const Simplex glued{0, 1, 2, 3};
  // second copy: 1..4 fixed, 5,6,7 (ids 4,5,6) -> 5',6',7' (ids 7,8,9)
  const std::array<VertexId, 7> shift{0, 1, 2, 3, 7, 8, 9};
  std::vector<Simplex> facets;
  for (Simplex f : c.facets()) {
    if (f == glued) continue;
    facets.push_back(f);
    Simplex g;
    f.for_each([&](int v) { g = g.with(shift[static_cast<std::size_t>(v)]); });
    facets.push_back(g);
  }
  LabelMap labels;
  for (int i = 0; i < 7; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  for (int i = 0; i < 3; ++i) labels[static_cast<std::size_t>(7 + i)] = std::to_string(5 + i) + "'";
  return SimplicialComplex::from_simplices(std::move(facets), labels);
}

std::vector<CatalogEntry> sphere_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"S1", compact("abc abd acd bcd"), "standard 2-sphere on a,b,c,d"});
  out.push_back({"S2", compact("xab xbc xac yab ybc yac"), "join of S0(x,y) with the 3-cycle a,b,c"});
  out.push_back({"S3", compact("x12 x23 x34 xy1 y12 y23 y34 xy4"),
                 "one-point suspension of the 5-cycle x,1,2,3,4 at x with new vertex y"});
  out.push_back({"S4",
                 from_facets(std::vector<std::vector<std::string>>{
                     {"x1", "x2", "x3"}, {"x1", "x2", "y3"}, {"x1", "y2", "x3"}, {"x1", "y2", "y3"},
                     {"y1", "x2", "x3"}, {"y1", "x2", "y3"}, {"y1", "y2", "x3"}, {"y1", "y2", "y3"}}),
                 "octahedron, join of S0(x1,y1), S0(x2,y2), S0(x3,y3)"});
  out.push_back({"S5", compact("x12 x23 x34 x45 x15 y12 y23 y34 y45 y15"),
                 "join of S0(x,y) with the 5-cycle 1..5"});
  out.push_back({"S6", compact("x12 x23 x34 x45 xy1 y12 y23 y34 y45 xy5"),
                 "one-point suspension of the 6-cycle x,1,..,5 at x with new vertex y"});
  out.push_back({"S7", compact("123 12x 135 156 16x 23x 345 34x 45x 56x"), "7-vertex 2-sphere"});
  out.push_back({"S8", compact("126 12x 16x 235 23x 256 345 34x 45x 56x"), "7-vertex 2-sphere"});
  out.push_back({"S9", compact("126 12x 135 13x 156 234 23x 246 345 456"), "7-vertex 2-sphere"});
  out.push_back({"calS", compact("567 568 578 124 134 234 278 238 167 127 138 168"),
                 "S3-type sphere with a vertex starred into each of two disjoint triangles"});
  out.push_back({"calT", compact("567 568 578 124 134 234 178 268 128 367 137 236"),
                 "octahedron with a vertex starred into each of two disjoint triangles"});
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names{"k39", "k27", "c37", "remark1"};
  for (const auto& e : sphere_catalog()) names.push_back(e.name);
  names.insert(names.end(), {"sphere<d>", "cycle<n>", "walkup<d>"});
  return names;
}

SimplicialComplex lookup_complex(const std::string& name) {
  if (name == "k39") return walkup_complex(3);
  if (name == "k27") return walkup_complex(2);
  if (name == "c37") return cyclic_sphere_c37();
  if (name == "remark1") return connected_sum_remark1();
  for (auto& e : sphere_catalog()) {
    if (e.name == name) return e.complex;
  }
  if (name.rfind("sphere", 0) == 0) return standard_sphere(parse_suffix(name, 6));
  if (name.rfind("cycle", 0) == 0) return cycle(parse_suffix(name, 5));
  if (name.rfind("walkup", 0) == 0) return walkup_complex(parse_suffix(name, 6));
  throw PreconditionError("unknown complex name: " + name);
}

}  // namespace smallcx
