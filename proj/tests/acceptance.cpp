// Acceptance driver: one line per criterion, with a pinned wall-clock limit
// for each. Exit status is 0 only if every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "smallcx/bistellar.hpp"
#include "smallcx/constructions.hpp"
#include "smallcx/enumeration.hpp"
#include "smallcx/homology.hpp"
#include "smallcx/isomorphism.hpp"
#include "smallcx/lemma.hpp"
#include "smallcx/parallel.hpp"
#include "smallcx/recognition.hpp"

using nlohmann::json;
using namespace smallcx;

namespace {

struct Finding {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Finding()> run;
  bool stretch = false;
};

std::string g_cli;
int g_threads = 1;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  CliRun r;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json cli_json(const std::string& args, int& status) {
  const auto r = cli("--json " + args);
  status = r.status;
  return json::parse(r.out, nullptr, false);
}

int min_degree(const SimplicialComplex& k) {
  int m = 1 << 20;
  for (int v : k.vertex_set().vertices()) m = std::min(m, degree(k, Simplex::vertex(v)));
  return m;
}

// 1. f-vector and Euler characteristic through the CLI.
Finding c1() {
  int st = 0;
  const auto j = cli_json("info k39", st);
  const auto txt = cli("info k39");
  const bool ok = st == 0 && j.is_object() && j["result"]["f_vector"] == json({9, 36, 54, 27}) &&
                  j["result"]["euler_characteristic"] == 0 &&
                  txt.out.find("f-vector: (9, 36, 54, 27)") != std::string::npos &&
                  txt.out.find("euler characteristic: 0") != std::string::npos;
  return {ok, "f=" + (j.is_object() ? j["result"]["f_vector"].dump() : "?") + " exit=" + std::to_string(st)};
}

// 2. No 2-moves, and edge {1,5} blocked because the would-be new edge exists.
Finding c2() {
  int st1 = 0, st2 = 0;
  const auto list = cli_json("moves list --type 2 --complex k39", st1);
  const auto chk = cli_json("moves check --complex k39 --face 1,5", st2);
  const bool empty = st1 == 0 && list.is_object() && list["result"]["moves"].empty();
  const bool blocked = st2 == 0 && chk.is_object() && chk["result"]["removable"] == false &&
                       chk["result"]["reason"] == "β is a face";
  return {empty && blocked, std::string("2-moves ") + (empty ? "none" : "present") +
                                "; {1,5}: " + (chk.is_object() ? chk["result"]["reason"].get<std::string>() : "?")};
}

// 3. Degree-3 edges of K39 form the listed 9-cycle, one Aut-orbit; |Aut| = 18.
Finding c3() {
  const auto k = walkup_complex(3);
  std::set<Simplex> expected;
  const int cyc[] = {1, 5, 9, 4, 8, 3, 7, 2, 6};
  for (int i = 0; i < 9; ++i) {
    expected.insert(k.simplex_of({std::to_string(cyc[i]), std::to_string(cyc[(i + 1) % 9])}));
  }
  std::set<Simplex> deg3;
  for (Simplex e : faces(k, 1)) {
    if (degree(k, e) == 3) deg3.insert(e);
  }
  const auto g = automorphism_group(k);
  std::set<Simplex> orbit{*expected.begin()};
  for (bool grew = true; grew;) {
    grew = false;
    for (Simplex e : std::set<Simplex>(orbit)) {
      for (const auto& p : g.generators()) grew |= orbit.insert(p(e)).second;
    }
  }
  const bool ok = deg3 == expected && orbit == expected && g.order() == 18;
  return {ok, "degree-3 edges " + std::to_string(deg3.size()) + ", orbit " + std::to_string(orbit.size()) +
                  ", |Aut| " + std::to_string(g.order())};
}

// 4. alpha on every enumerated 2-sphere with 5..8 vertices, before and after
// 50 random flips each.
Finding c4() {
  const std::map<int, int> want{{5, 3}, {6, 12}, {7, 25}, {8, 42}};
  std::mt19937_64 rng(20240601);
  std::size_t spheres = 0;
  for (const auto& [k, a] : want) {
    if (alpha_formula(k) != a) return {false, "closed form disagrees at k=" + std::to_string(k)};
    for (const auto& e : enumerate_two_spheres(k).entries) {
      ++spheres;
      auto x = e.complex;
      if (alpha(x) != a) return {false, "alpha mismatch at k=" + std::to_string(k)};
      for (int f = 0; f < 50; ++f) {
        x = random_proper_walk(x, 1, rng);
        if (alpha(x) != a) return {false, "alpha changed under a flip at k=" + std::to_string(k)};
      }
    }
  }
  return {true, std::to_string(spheres) + " spheres, alpha 3/12/25/42"};
}

// 5. Coclique census against the listed cases.
Finding c5() {
  bool ok = true;
  std::ostringstream d;
  for (const char* s : {"S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9"}) {
    const auto r = check_reference_cases(s, g_threads);
    d << s << ":";
    for (int size : r.compared_sizes) d << " " << r.computed_orbits.at(size) << "/" << r.expected_orbits.at(size);
    for (const auto& m : r.matches) {
      if (m.duplicate_of) d << " (" << m.label << "=" << *m.duplicate_of << ")";
    }
    d << (r.pass ? "" : " FAIL") << "; ";
    ok &= r.pass;
  }
  const auto s2 = coclique_census(lookup_complex("S2"));
  std::size_t raw = 0;
  for (const auto& [size, l] : s2.by_size) raw += l.size();
  ok &= raw == 1;
  d << "S2 maximal cocliques " << raw;
  return {ok, d.str()};
}

// 6. Automorphism orders of the labelled spheres.
Finding c6() {
  const std::map<std::string, std::uint64_t> want{{"S3", 4}, {"S5", 20}, {"S6", 4}, {"S7", 6}, {"S8", 2}, {"S9", 6}};
  bool ok = true;
  std::string d;
  for (const auto& [name, order] : want) {
    const auto got = automorphism_group(lookup_complex(name)).order();
    ok &= got == order;
    d += name + "=" + std::to_string(got) + " ";
  }
  return {ok, d};
}

// 7. Complement, disjoint-facet and good-vertex checks through the CLI.
Finding c7() {
  bool ok = true;
  std::string d;
  for (const char* v : {"lemma4.1", "lemma4.2", "lemma4.5"}) {
    int st = 0;
    const auto j = cli_json(std::string("verify ") + v + " --complex k39", st);
    const bool pass = st == 0 && j.is_object() && j["ok"] == true && j["result"]["pass"] == true;
    ok &= pass;
    d += std::string(v) + (pass ? " ok " : " FAIL ");
  }
  return {ok, d};
}

// 8. Facet edge-degree sums: 29 with a disjoint facet, 28 without.
Finding c8() {
  const auto k = walkup_complex(3);
  const auto l = facet_degree_ledger(k);
  int with = 0, without = 0;
  bool ok = l.entries.size() == 27;
  for (const auto& e : l.entries) {
    const bool has = e.disjoint_partner.has_value();
    ok &= e.degree_sum == (has ? 29 : 28);
    (has ? with : without)++;
  }
  ok &= l.dichotomy_holds && l.count_identity_holds;
  return {ok, std::to_string(with) + " facets at 29, " + std::to_string(without) + " at 28"};
}

// 9. Homology and the Euler-Poincare identity.
Finding c9() {
  bool ok = homology(walkup_complex(3)).format() == "H0=Z  H1=Z  H2=Z/2  H3=0";
  ok &= homology(cyclic_sphere_c37()) == sphere_homology(3);
  ok &= homology(connected_sum_remark1()) == sphere_homology(3);
  std::size_t checked = 0;
  for (const auto& name : catalog_names()) {
    if (name.find('<') != std::string::npos) continue;
    const auto k = lookup_complex(name);
    const auto h = homology(k);
    long long chi = 0;
    for (std::size_t i = 0; i < h.betti.size(); ++i) chi += (i % 2 ? -1 : 1) * h.betti[i];
    ok &= chi == k.f_vector().euler_characteristic();
    ++checked;
  }
  return {ok, "Euler-Poincare on " + std::to_string(checked) + " catalog complexes"};
}

// 10. Random 9-vertex 3-spheres reduce to neighbourly by exactly 36 - f1
// one-moves, never lowering a vertex degree.
Finding c10() {
  std::mt19937_64 rng(9090);
  int worst = 0;
  for (int t = 0; t < 200; ++t) {
    const auto k = random_sphere3(9, static_cast<int>(rng() % 30), rng);
    const auto f1 = k.f_vector().counts[1];
    const auto r = neighbourly_reduction(k);
    if (static_cast<long long>(r.moves.size()) != 36 - f1 || r.moves.size() > 10) {
      return {false, "sample " + std::to_string(t) + ": " + std::to_string(r.moves.size()) + " moves, f1 " +
                         std::to_string(f1)};
    }
    auto cur = k;
    for (const auto& m : r.moves) {
      if (m.type != 1) return {false, "non-1-move in sample " + std::to_string(t)};
      const auto next = apply_move(cur, m);
      for (int v : cur.vertex_set().vertices()) {
        if (degree(next, Simplex::vertex(v)) < degree(cur, Simplex::vertex(v))) {
          return {false, "degree decrease in sample " + std::to_string(t)};
        }
      }
      cur = next;
    }
    if (!(cur == r.result) || !is_neighbourly(cur) || !is_combinatorial_3_manifold(cur)) {
      return {false, "replay mismatch in sample " + std::to_string(t)};
    }
    worst = std::max(worst, static_cast<int>(r.moves.size()));
  }
  return {true, "200 samples, at most " + std::to_string(worst) + " moves"};
}

// 11. The 10-vertex connected sum: a certified sphere where vertex 6 has
// minimum degree and no 1-move adds an edge at it.
Finding c11() {
  const auto m = connected_sum_remark1();
  const auto six = m.vertex_of("6");
  const bool manifold = is_combinatorial_3_manifold(m).value;
  const bool sphere = certify_sphere_via_complement(m).certified;
  const int dmin = min_degree(m);
  const int d6 = degree(m, Simplex::vertex(six));
  // Exhaustive: every removable triangle, keep those whose new edge meets 6.
  std::size_t moves = 0, raising = 0;
  for (const auto& mv : removable_faces(m, 1)) {
    ++moves;
    if (mv.beta.contains(six)) ++raising;
  }
  const bool ok = manifold && sphere && dmin == 6 && d6 == 6 && raising == 0 &&
                  degree_raising_moves(m, six).empty();
  return {ok, "min degree " + std::to_string(dmin) + ", 1-moves " + std::to_string(moves) + ", raising deg(6) " +
                  std::to_string(raising)};
}

// 12. 2-sphere census for 4..7 vertices equals the labelled catalog.
Finding c12() {
  const std::map<int, std::size_t> want{{4, 1}, {5, 1}, {6, 2}, {7, 5}};
  std::set<CanonicalForm> census, catalog;
  std::string d;
  bool ok = true;
  for (const auto& [n, c] : want) {
    const auto r = enumerate_two_spheres(n);
    ok &= r.entries.size() == c;
    d += std::to_string(r.entries.size()) + " ";
    for (const auto& e : r.entries) census.insert(e.form);
  }
  for (const auto& e : sphere_catalog()) {
    if (e.complex.vertex_count() <= 7) catalog.insert(canonical_form(e.complex));
  }
  ok &= census == catalog && catalog.size() == 9;
  return {ok, "counts " + d + "; catalog forms matched " + std::to_string(catalog.size())};
}

// 13. Exactly one neighbourly non-sphere on 9 vertices, and it is K39.
Finding c13() {
  EnumerationOptions opt;
  opt.threads = g_threads;
  const auto r = enumerate_neighbourly_9_manifolds(opt);
  const auto k39 = canonical_form(walkup_complex(3));
  int non_spheres = 0;
  bool is_k39 = false;
  for (const auto& e : r.entries) {
    if (e.cls == "sphere") continue;
    ++non_spheres;
    is_k39 = e.form == k39 && e.cls == "non-sphere";
  }
  std::string d = std::to_string(r.entries.size()) + " classes:";
  for (const auto& [cls, c] : r.counts) d += " " + cls + "=" + std::to_string(c);
  return {non_spheres == 1 && is_k39, d};
}

// 14. Full census: 1297 classes, one non-sphere; each member reduces to a
// neighbourly complex within 10 one-moves.
Finding c14() {
  EnumerationOptions opt;
  opt.threads = g_threads;
  const auto r = enumerate_all_9_manifolds(opt);
  const auto k39 = canonical_form(walkup_complex(3));
  int non_spheres = 0;
  bool is_k39 = false;
  std::size_t worst = 0;
  for (const auto& e : r.entries) {
    if (e.cls != "sphere") {
      ++non_spheres;
      is_k39 = e.form == k39;
    }
    const auto red = neighbourly_reduction(e.complex);
    worst = std::max(worst, red.moves.size());
  }
  std::string d = std::to_string(r.entries.size()) + " classes:";
  for (const auto& [cls, c] : r.counts) d += " " + cls + "=" + std::to_string(c);
  d += ", longest reduction " + std::to_string(worst);
  return {r.entries.size() == 1297 && non_spheres == 1 && is_k39 && worst <= 10, d};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  bool stretch = false;
  g_threads = default_threads();
  app.add_option("--cli", g_cli, "Path to the smallcx binary")->required();
  app.add_option("--only", only, "Run only these criteria");
  app.add_flag("--stretch", stretch, "Include the hours-scale criterion");
  app.add_option("--threads", g_threads);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "f-vector and Euler characteristic of K39", 1, c1},
      {2, "no 2-moves on K39; {1,5} blocked", 1, c2},
      {3, "degree-3 edges and |Aut(K39)|", 5, c3},
      {4, "alpha invariant on 2-spheres", 30, c4},
      {5, "coclique census vs listed cases", 60, c5},
      {6, "automorphism orders of labelled spheres", 10, c6},
      {7, "facet complements, disjoint pairs, good vertices", 30, c7},
      {8, "facet edge-degree sums 28/29", 1, c8},
      {9, "homology and Euler-Poincare", 5, c9},
      {10, "neighbourly reduction of 200 random spheres", 120, c10},
      {11, "connected-sum negative control", 10, c11},
      {12, "2-sphere census", 60, c12},
      {13, "unique neighbourly non-sphere", 1800, c13},
      {14, "full 9-vertex census", 6 * 3600, c14, true},
  };

  int failures = 0;
  for (const auto& c : all) {
    const bool selected = only.empty() ? (!c.stretch || stretch) : std::ranges::count(only, c.id) > 0;
    if (!selected) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Finding v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d %s  %-48s %8.2fs / %.0fs  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), secs,
                c.limit_seconds, v.detail.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
