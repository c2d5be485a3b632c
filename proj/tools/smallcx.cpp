// Command-line front end. Every command builds a JSON result; text output is
// rendered from the same values.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "smallcx/bistellar.hpp"
#include "smallcx/constructions.hpp"
#include "smallcx/enumeration.hpp"
#include "smallcx/errors.hpp"
#include "smallcx/homology.hpp"
#include "smallcx/io.hpp"
#include "smallcx/isomorphism.hpp"
#include "smallcx/lemma.hpp"
#include "smallcx/parallel.hpp"
#include "smallcx/recognition.hpp"

using nlohmann::json;
using namespace smallcx;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Outcome {
  int code = kPass;
  json result = json::object();
  std::string text;
};

// ---------------------------------------------------------------------------
// Input and formatting helpers

SimplicialComplex load(const std::string& arg) {
  if (arg.empty()) throw PreconditionError("missing complex argument");
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    try {
      return lookup_complex(arg);
    } catch (const PreconditionError&) {
    }
    std::ifstream in(arg);
    if (!in) throw PreconditionError("not a catalog name or readable file: " + arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const json j = json::parse(text);
    if (!j.contains("facets") && j.contains("result") && j["result"].contains("facets")) {
      return parse_facet_json(json{{"facets", j["result"]["facets"]}}.dump());
    }
  }
  return parse_facets_auto(text);
}

json labels_of(const SimplicialComplex& k, Simplex s) {
  json out = json::array();
  s.for_each([&](int v) { out.push_back(k.label(v)); });
  return out;
}

json facets_json(const SimplicialComplex& k) {
  json out = json::array();
  for (Simplex f : k.facets()) out.push_back(labels_of(k, f));
  return out;
}

json family_json(const SimplicialComplex& k, const Family& f) {
  json out = json::array();
  for (Simplex s : f) out.push_back(labels_of(k, s));
  return out;
}

std::string family_text(const SimplicialComplex& k, const Family& f) {
  std::string out;
  for (Simplex s : f) out += (out.empty() ? "" : " ") + k.format(s);
  return out;
}

Simplex parse_face(const SimplicialComplex& k, const std::string& text) {
  std::vector<std::string> labels;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) labels.push_back(part);
  }
  if (labels.empty()) throw PreconditionError("empty face: '" + text + "'");
  return k.simplex_of(labels);
}

json move_json(const SimplicialComplex& k, const BistellarMove& m) {
  return {{"alpha", labels_of(k, m.alpha)}, {"beta", labels_of(k, m.beta)}, {"type", m.type}};
}

std::string fvector_text(const std::vector<long long>& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + std::to_string(f[i]);
  return out + ")";
}

std::string cycles_in_labels(const SimplicialComplex& k, const Permutation& p) {
  std::string out;
  Simplex seen;
  for (int v : k.vertex_set().vertices()) {
    if (seen.contains(v) || p(v) == v) continue;
    out += "(";
    for (int u = v; !seen.contains(u); u = p(u)) {
      if (u != v) out += ",";
      out += k.label(u);
      seen = seen.with(u);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_gen(const Globals& g, const std::string& name, int random_n, int extra, bool stacked) {
  Outcome o;
  SimplicialComplex k;
  if (random_n > 0) {
    std::mt19937_64 rng(g.seed);
    k = stacked ? stacked_sphere3(random_n, rng) : random_sphere3(random_n, extra, rng);
    o.result["generator"] = stacked ? "stacked_sphere3" : "random_sphere3";
    o.result["vertices"] = random_n;
    o.text = "# seed " + std::to_string(g.seed) + "\n";
  } else {
    k = load(name);
    o.result["name"] = name;
  }
  o.result["facets"] = facets_json(k);
  o.text += write_facet_text(k);
  return o;
}

Outcome cmd_info(const SimplicialComplex& k) {
  Outcome o;
  const auto f = k.f_vector();
  o.result["vertices"] = k.vertex_count();
  o.result["dim"] = k.dim();
  o.result["facet_count"] = k.facets().size();
  o.result["f_vector"] = f.counts;
  o.result["euler_characteristic"] = f.euler_characteristic();
  std::ostringstream t;
  t << "vertices: " << k.vertex_count() << "\ndim: " << k.dim() << "\nf-vector: " << fvector_text(f.counts)
    << "\neuler characteristic: " << f.euler_characteristic() << "\n";
  if (k.dim() >= 1) {
    json hist = json::object();
    t << "edge degrees:";
    for (const auto& [deg, count] : edge_degree_histogram(k)) {
      hist[std::to_string(deg)] = count;
      t << " " << deg << ":" << count;
    }
    t << "\n";
    o.result["edge_degrees"] = hist;
  }
  o.text = t.str();
  return o;
}

Outcome cmd_check(const SimplicialComplex& k) {
  Outcome o;
  const auto r = recognize(k);
  const std::vector<std::pair<const char*, bool>> fields{
      {"pure", r.is_pure},          {"pseudomanifold", r.is_pseudomanifold}, {"closed_surface", r.is_closed_surface},
      {"two_sphere", r.is_two_sphere}, {"three_manifold", r.is_three_manifold}, {"neighbourly", r.is_neighbourly}};
  std::ostringstream t;
  for (const auto& [name, value] : fields) {
    o.result[name] = value;
    t << name << ": " << yes_no(value) << "\n";
  }
  json wit = json::array();
  for (const auto& w : r.witnesses) {
    wit.push_back({{"property", w.property}, {"face", labels_of(k, w.face)}});
    t << "witness " << w.property << ": " << k.format(w.face) << "\n";
  }
  o.result["witnesses"] = wit;
  if (k.dim() == 3 && r.is_pseudomanifold) {
    json sing = json::array();
    t << "singular vertices:";
    for (auto v : singular_vertices(k)) {
      sing.push_back(k.label(v));
      t << " " << k.label(v);
    }
    t << "\n";
    o.result["singular_vertices"] = sing;
  }
  o.text = t.str();
  return o;
}

Outcome cmd_link(const SimplicialComplex& k, const std::string& face) {
  Outcome o;
  const Simplex s = parse_face(k, face);
  const auto lk = link(k, s);
  o.result["face"] = labels_of(k, s);
  o.result["facets"] = facets_json(lk);
  o.text = write_facet_text(lk);
  return o;
}

Outcome cmd_moves_list(const SimplicialComplex& k, int type) {
  Outcome o;
  json list = json::array();
  const int lo = type > 0 ? type : 1;
  const int hi = type > 0 ? type : k.dim();
  for (int i = lo; i <= hi; ++i) {
    for (const auto& m : removable_faces(k, i)) {
      list.push_back(move_json(k, m));
      o.text += describe(k, m) + "\n";
    }
  }
  o.result["moves"] = list;
  if (list.empty()) o.text = "no moves\n";
  return o;
}

Outcome cmd_moves_check(const SimplicialComplex& k, const std::string& face) {
  Outcome o;
  const Simplex s = parse_face(k, face);
  const auto r = check_removable(k, s);
  o.result["face"] = labels_of(k, s);
  o.result["removable"] = r.removable;
  o.result["reason"] = r.reason;
  if (r.move) o.result["move"] = move_json(k, *r.move);
  o.text = k.format(s) + ": " + (r.removable ? "removable (" + describe(k, *r.move) + ")" : "not removable: " + r.reason) +
           "\n";
  return o;
}

Outcome cmd_moves_apply(const SimplicialComplex& k, const std::string& a, const std::string& b, int type) {
  Outcome o;
  const BistellarMove m{parse_face(k, a), parse_face(k, b), type};
  const auto out = apply_move(k, m);
  o.result["move"] = move_json(k, m);
  o.result["facets"] = facets_json(out);
  o.text = write_facet_text(out);
  return o;
}

Outcome cmd_reduce(const SimplicialComplex& k) {
  Outcome o;
  const auto r = neighbourly_reduction(k);
  json moves = json::array();
  std::ostringstream t;
  for (const auto& m : r.moves) moves.push_back(move_json(r.result, m));
  o.result["f1_before"] = k.f_vector().counts[1];
  o.result["move_count"] = r.moves.size();
  o.result["moves"] = moves;
  o.result["facets"] = facets_json(r.result);
  t << "# f1 " << k.f_vector().counts[1] << ", " << r.moves.size() << " one-moves\n";
  for (const auto& m : r.moves) t << "# " << describe(r.result, m) << "\n";
  o.text = t.str() + write_facet_text(r.result);
  return o;
}

Outcome cmd_iso(const SimplicialComplex& a, const SimplicialComplex& b) {
  Outcome o;
  const auto r = are_isomorphic(a, b);
  o.result["isomorphic"] = r.isomorphic;
  o.result["canonical_a"] = canonical_form(a).digest();
  o.result["canonical_b"] = canonical_form(b).digest();
  o.text = std::string("isomorphic: ") + yes_no(r.isomorphic) + "\n";
  if (r.witness) {
    json map = json::object();
    o.text += "map:";
    for (int v : a.vertex_set().vertices()) {
      const int w = (*r.witness)[static_cast<std::size_t>(v)];
      map[a.label(v)] = b.label(w);
      o.text += " " + a.label(v) + "->" + b.label(w);
    }
    o.text += "\n";
    o.result["map"] = map;
  }
  return o;
}

Outcome cmd_aut(const SimplicialComplex& k) {
  Outcome o;
  const auto g = automorphism_group(k);
  json gens = json::array();
  std::string text = "order: " + std::to_string(g.order()) + "\n";
  for (const auto& p : g.generators()) {
    gens.push_back(cycles_in_labels(k, p));
    text += "generator: " + cycles_in_labels(k, p) + "\n";
  }
  o.result["order"] = g.order();
  o.result["generators"] = gens;
  o.result["vertex_transitive"] = g.is_transitive_on(k.vertex_set());
  o.result["description"] = describe_group(g);
  text += std::string("vertex-transitive: ") + yes_no(g.is_transitive_on(k.vertex_set())) + "\n";
  text += "description: " + describe_group(g) + "\n";
  o.text = text;
  return o;
}

Outcome cmd_homology(const SimplicialComplex& k) {
  Outcome o;
  const auto h = homology(k);
  o.result["betti"] = h.betti;
  o.result["torsion"] = h.torsion;
  o.result["text"] = h.format();
  o.text = h.format() + "\n";
  return o;
}

Outcome cmd_alpha(int k, const std::string& complex) {
  Outcome o;
  if (!complex.empty()) {
    const auto x = load(complex);
    k = x.vertex_count();
    o.result["alpha"] = alpha(x);
  }
  o.result["k"] = k;
  o.result["formula"] = alpha_formula(k);
  o.text = "k=" + std::to_string(k) + " (k-2)(2k-9)=" + std::to_string(alpha_formula(k));
  if (o.result.contains("alpha")) {
    o.text += " alpha=" + std::to_string(o.result["alpha"].get<int>());
    if (o.result["alpha"].get<long long>() != alpha_formula(k)) o.code = kFail;
  }
  o.text += "\n";
  return o;
}

Outcome cmd_verify_cocliques(const Globals& g, const std::string& sphere) {
  Outcome o;
  const auto r = check_reference_cases(sphere, g.threads);
  const auto x = lookup_complex(sphere);
  std::ostringstream t;
  t << "sphere " << sphere << ": |Aut| = " << r.census.group_order << "\n";
  if (r.generators_match) t << "listed generators generate Aut: " << yes_no(*r.generators_match) << "\n";
  if (r.node_list_matches) t << "listed nodes match the graph: " << yes_no(*r.node_list_matches) << "\n";
  json counts = json::array();
  for (int s : r.compared_sizes) {
    const int want = r.expected_orbits.at(s), got = r.computed_orbits.at(s);
    counts.push_back({{"size", s}, {"expected", want}, {"computed", got}});
    t << "size " << s << ": expected " << want << " orbits, computed " << got << (want == got ? "" : "  MISMATCH")
      << "\n";
  }
  json cases = json::array();
  for (const auto& m : r.matches) {
    json c{{"label", m.label},       {"size", m.size},         {"independent", m.independent},
           {"maximal", m.maximal},   {"admissible", m.admissible}};
    c["orbit"] = m.orbit ? json(*m.orbit) : json(nullptr);
    c["duplicate_of"] = m.duplicate_of ? json(*m.duplicate_of) : json(nullptr);
    cases.push_back(c);
    t << m.label << ": ";
    if (!m.admissible) {
      t << "not an admissible maximal coclique\n";
    } else if (m.duplicate_of) {
      t << "same orbit as " << *m.duplicate_of << "\n";
    } else {
      t << "orbit " << m.size << "." << (m.orbit ? std::to_string(*m.orbit) : "?") << "\n";
    }
  }
  json unmatched = json::array();
  for (auto [size, idx] : r.unmatched_orbits) {
    const auto& rep = r.census.admissible_orbits.at(size)[idx].representative;
    unmatched.push_back({{"size", size}, {"representative", family_json(x, rep)}});
    t << "orbit " << size << "." << idx << " has no listed case: " << family_text(x, rep) << "\n";
  }
  json raw = json::object(), adm = json::object();
  for (const auto& [s, l] : r.census.orbit_reps) raw[std::to_string(s)] = l.size();
  for (const auto& [s, l] : r.census.admissible_orbits) adm[std::to_string(s)] = l.size();
  o.result = {{"sphere", sphere},
              {"group_order", r.census.group_order},
              {"counts", counts},
              {"cases", cases},
              {"unmatched_orbits", unmatched},
              {"maximal_orbits_by_size", raw},
              {"admissible_orbits_by_size", adm},
              {"pass", r.pass}};
  if (r.generators_match) o.result["generators_match"] = *r.generators_match;
  if (r.node_list_matches) o.result["node_list_matches"] = *r.node_list_matches;
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  o.code = r.pass ? kPass : kFail;
  return o;
}

Outcome cmd_verify_complements(const SimplicialComplex& k) {
  Outcome o;
  const auto r = verify_complement_dichotomy(k);
  json entries = json::array();
  std::ostringstream t;
  for (const auto& e : r.entries) {
    entries.push_back({{"facet", labels_of(k, e.facet)},
                       {"f_vector", e.f_vector},
                       {"euler_characteristic", e.euler},
                       {"collapsible", e.collapsible},
                       {"ok", e.ok}});
    t << k.format(e.facet) << " complement " << fvector_text(e.f_vector) << " chi=" << e.euler
      << " collapsible=" << yes_no(e.collapsible) << (e.ok ? "" : "  FAIL") << "\n";
  }
  o.result = {{"entries", entries}, {"pass", r.pass}};
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  o.code = r.pass ? kPass : kFail;
  return o;
}

Outcome cmd_verify_disjoint_links(const SimplicialComplex& k) {
  Outcome o;
  const auto r = verify_disjoint_facet_links(k);
  json entries = json::array();
  std::ostringstream t;
  for (const auto& e : r.entries) {
    entries.push_back({{"pair", {labels_of(k, e.first), labels_of(k, e.second)}},
                       {"leftover", k.label(e.leftover)},
                       {"side", labels_of(k, e.side)},
                       {"ok", e.ok}});
    t << "pair " << k.format(e.first) << " " << k.format(e.second) << ", x=" << k.label(e.leftover) << ", lk(x) on "
      << k.format(e.side) << ": " << (e.ok ? "3-cycle + isolated vertex" : "VIOLATION") << "\n";
  }
  o.result = {{"entries", entries}, {"pass", r.pass}};
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  o.code = r.pass ? kPass : kFail;
  return o;
}

Outcome cmd_verify_good_links(const SimplicialComplex& k) {
  Outcome o;
  const auto r = verify_good_vertex_links(k);
  json good = json::array();
  std::ostringstream t;
  for (std::size_t i = 0; i < r.good.size(); ++i) {
    const auto& gv = r.good[i];
    json parts = json::array();
    for (const auto& [a, b] : gv.partitions) parts.push_back({labels_of(k, a), labels_of(k, b)});
    good.push_back({{"vertex", k.label(gv.vertex)},
                    {"partitions", parts},
                    {"link_is_calS", static_cast<bool>(r.link_is_cal_s[i])},
                    {"link_is_calT", static_cast<bool>(r.link_is_cal_t[i])}});
    t << "good vertex " << k.label(gv.vertex) << ": link ~ calS " << yes_no(r.link_is_cal_s[i]) << ", ~ calT "
      << yes_no(r.link_is_cal_t[i]) << "\n";
  }
  o.result = {{"good_vertices", good},
              {"partition_count", r.partition_count},
              {"disjoint_facet_pairs", r.disjoint_pairs},
              {"pass", r.pass}};
  t << "partitions " << r.partition_count << ", disjoint facet pairs " << r.disjoint_pairs << "\n"
    << (r.pass ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  o.code = r.pass ? kPass : kFail;
  return o;
}

Outcome cmd_verify_eq1(const SimplicialComplex& k) {
  Outcome o;
  const auto l = facet_degree_ledger(k);
  const auto sys = all_twenty_eight_system();
  json entries = json::array();
  std::ostringstream t;
  for (const auto& e : l.entries) {
    json j{{"facet", labels_of(k, e.facet)}, {"degree_sum", e.degree_sum}, {"disjoint_facets", e.disjoint_facets}};
    j["disjoint_partner"] = e.disjoint_partner ? labels_of(k, *e.disjoint_partner) : json(nullptr);
    entries.push_back(j);
    t << k.format(e.facet) << " sum=" << e.degree_sum;
    if (e.disjoint_partner) t << " partner=" << k.format(*e.disjoint_partner);
    t << "\n";
  }
  json eps = json::object();
  t << "edge degrees:";
  for (const auto& [d, c] : l.edge_degrees) {
    eps[std::to_string(d)] = c;
    t << " " << d << ":" << c;
  }
  t << "\nsum of counts " << l.edge_total << ", weighted sum " << l.weighted_total << "\n";
  t << "if no facets were disjoint: facet types";
  for (const auto& ty : sys.facet_types) {
    t << " [";
    for (std::size_t i = 0; i < ty.size(); ++i) t << (i ? "," : "") << ty[i];
    t << "]";
  }
  t << ", (e3, e4, e5) = (" << sys.e3 << ", " << sys.e4 << ", " << sys.e5 << ")\n";
  const bool pass = l.dichotomy_holds && l.count_identity_holds && l.edge_total == 36 && l.weighted_total == 162;
  o.result = {{"entries", entries},
              {"edge_degrees", eps},
              {"edge_total", l.edge_total},
              {"weighted_total", l.weighted_total},
              {"count_identity_holds", l.count_identity_holds},
              {"dichotomy_holds", l.dichotomy_holds},
              {"all_28_system", {{"facet_types", sys.facet_types}, {"e3", sys.e3}, {"e4", sys.e4}, {"e5", sys.e5}}},
              {"pass", pass}};
  t << (pass ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  o.code = pass ? kPass : kFail;
  return o;
}

Outcome cmd_enumerate(const Globals& g, const std::string& what, int n, bool full, const std::string& out_path) {
  Outcome o;
  EnumerationOptions opt;
  opt.threads = g.threads;
  CensusResult r;
  if (what == "spheres2") {
    r = enumerate_two_spheres(n, opt);
  } else if (full) {
    r = enumerate_all_9_manifolds(opt);
  } else {
    r = enumerate_neighbourly_9_manifolds(opt);
  }
  json counts = json::object();
  std::ostringstream t;
  t << "classes: " << r.entries.size() << "\n";
  for (const auto& [cls, c] : r.counts) {
    counts[cls] = c;
    t << cls << ": " << c << "\n";
  }
  json list = json::array();
  for (const auto& e : r.entries) {
    list.push_back({{"digest", e.form.digest()}, {"class", e.cls}, {"f_vector", e.complex.f_vector().counts}});
  }
  t << "search nodes " << r.nodes << ", complete complexes " << r.leaves << ", isomorph rejections "
    << r.isomorph_rejections << "\n";
  if (what == "neighbourly9") {
    const auto k39 = canonical_form(walkup_complex(3));
    for (const auto& e : r.entries) {
      if (e.cls == "non-sphere") t << "non-sphere " << e.form.digest() << (e.form == k39 ? " = K39" : " != K39") << "\n";
    }
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw PreconditionError("cannot write " + out_path);
    for (const auto& e : r.entries) out << "# " << e.form.digest() << " " << e.cls << "\n" << write_facet_text(e.complex) << "\n";
    o.result["out"] = out_path;
  }
  o.result["total"] = r.entries.size();
  o.result["counts"] = counts;
  o.result["complexes"] = list;
  o.result["stats"] = {{"nodes", r.nodes},
                       {"leaves", r.leaves},
                       {"isomorph_rejections", r.isomorph_rejections},
                       {"seconds", r.seconds}};
  o.text = t.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smallcx: exact computations on small simplicial complexes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  Globals g;
  g.threads = default_threads();
  app.add_flag("--json", g.json, "Print a JSON report instead of text");
  app.add_option("--seed", g.seed, "Seed for random generation (echoed in output)");
  app.add_option("--threads", g.threads, "Worker threads (default: SMALLCX_THREADS or 1)")->check(CLI::PositiveNumber);

  std::function<Outcome()> run;
  std::string command;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
    sub->callback([&run, &command, name = std::move(name), fn = std::move(fn)] {
      command = name;
      run = fn;
    });
  };

  std::string cx, cx2, face, alpha_s, beta_s, sphere_name, out_path;
  int type = 0, random_n = 0, extra = 0, alpha_k = 0, census_n = 0;
  bool stacked = false, full = false;

  auto* gen = app.add_subcommand("gen", "Print a complex as facet text");
  gen->add_option("name", cx, "Catalog name, file, or - for stdin");
  gen->add_option("--random-sphere3", random_n, "Random 3-sphere on N vertices (uses --seed)");
  gen->add_option("--extra", extra, "Extra random proper moves for --random-sphere3");
  gen->add_flag("--stacked", stacked, "Stacked sphere instead (0-moves only)");
  bind(gen, "gen", [&] { return cmd_gen(g, cx, random_n, extra, stacked); });

  auto* info = app.add_subcommand("info", "Vertex count, dimension, f-vector, Euler characteristic");
  info->add_option("complex", cx)->required();
  bind(info, "info", [&] { return cmd_info(load(cx)); });

  auto* check = app.add_subcommand("check", "Recognition predicates with witnesses");
  check->add_option("complex", cx)->required();
  bind(check, "check", [&] { return cmd_check(load(cx)); });

  auto* lk = app.add_subcommand("link", "Link of a face");
  lk->add_option("complex", cx)->required();
  lk->add_option("--face", face, "Comma-separated labels, e.g. 1,5")->required();
  bind(lk, "link", [&] { return cmd_link(load(cx), face); });

  auto* moves = app.add_subcommand("moves", "Bistellar moves");
  moves->require_subcommand(1);
  auto* mlist = moves->add_subcommand("list", "Removable faces of a pseudomanifold");
  mlist->add_option("input", cx, "Complex (alternative to --complex)");
  mlist->add_option("--complex", cx2);
  mlist->add_option("--type", type, "Only moves of this type");
  bind(mlist, "moves list", [&] { return cmd_moves_list(load(cx2.empty() ? cx : cx2), type); });
  auto* mcheck = moves->add_subcommand("check", "Why a face is or is not removable");
  mcheck->add_option("input", cx, "Complex (alternative to --complex)");
  mcheck->add_option("--complex", cx2);
  mcheck->add_option("--face", face)->required();
  bind(mcheck, "moves check", [&] { return cmd_moves_check(load(cx2.empty() ? cx : cx2), face); });
  auto* mapply = moves->add_subcommand("apply", "Apply one move and print the result");
  mapply->add_option("input", cx, "Complex (alternative to --complex)");
  mapply->add_option("--complex", cx2);
  mapply->add_option("--alpha", alpha_s)->required();
  mapply->add_option("--beta", beta_s)->required();
  mapply->add_option("--type", type)->required();
  bind(mapply, "moves apply", [&] { return cmd_moves_apply(load(cx2.empty() ? cx : cx2), alpha_s, beta_s, type); });

  auto* reduce = app.add_subcommand("reduce", "Reduce a 9-vertex 3-manifold to a neighbourly one by 1-moves");
  reduce->add_option("complex", cx)->required();
  bind(reduce, "reduce", [&] { return cmd_reduce(load(cx)); });

  auto* iso = app.add_subcommand("iso", "Isomorphism test with witness");
  iso->add_option("a", cx)->required();
  iso->add_option("b", cx2)->required();
  bind(iso, "iso", [&] { return cmd_iso(load(cx), load(cx2)); });

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("complex", cx)->required();
  bind(aut, "aut", [&] { return cmd_aut(load(cx)); });

  auto* hom = app.add_subcommand("homology", "Integral homology");
  hom->add_option("complex", cx)->required();
  bind(hom, "homology", [&] { return cmd_homology(load(cx)); });

  auto* alp = app.add_subcommand("alpha", "Candidate-graph size (k-2)(2k-9)");
  alp->add_option("--k", alpha_k, "Vertex count");
  alp->add_option("--complex", cx, "A 2-sphere to count directly");
  bind(alp, "alpha", [&] {
    if (alpha_k == 0 && cx.empty()) throw PreconditionError("alpha: give --k or --complex");
    return cmd_alpha(alpha_k, cx);
  });

  auto* verify = app.add_subcommand("verify", "Check a stated result on a concrete complex");
  verify->require_subcommand(1);
  auto* v31 = verify->add_subcommand("lemma3.1", "Coclique census against the listed cases");
  v31->add_option("--sphere", sphere_name, "S2..S9")->required();
  bind(v31, "verify lemma3.1", [&] { return cmd_verify_cocliques(g, sphere_name); });
  auto* v41 = verify->add_subcommand("lemma4.1", "Facet complements: f-vectors, Euler characteristic, collapsing");
  v41->add_option("--complex", cx)->required();
  bind(v41, "verify lemma4.1", [&] { return cmd_verify_complements(load(cx)); });
  auto* v42 = verify->add_subcommand("lemma4.2", "Links across disjoint facet pairs");
  v42->add_option("--complex", cx)->required();
  bind(v42, "verify lemma4.2", [&] { return cmd_verify_disjoint_links(load(cx)); });
  auto* v45 = verify->add_subcommand("lemma4.5", "Links of good vertices");
  v45->add_option("--complex", cx)->required();
  bind(v45, "verify lemma4.5", [&] { return cmd_verify_good_links(load(cx)); });
  auto* veq = verify->add_subcommand("eq1", "Facet edge-degree sums");
  veq->add_option("--complex", cx)->required();
  bind(veq, "verify eq1", [&] { return cmd_verify_eq1(load(cx)); });

  auto* en = app.add_subcommand("enumerate", "Census up to isomorphism");
  en->require_subcommand(1);
  auto* es = en->add_subcommand("spheres2", "2-spheres on n vertices");
  es->add_option("--n", census_n)->required()->check(CLI::Range(4, 8));
  es->add_option("--out", out_path, "Write canonical facet lists here");
  bind(es, "enumerate spheres2", [&] { return cmd_enumerate(g, "spheres2", census_n, false, out_path); });
  auto* en9 = en->add_subcommand("neighbourly9", "Neighbourly 9-vertex 3-manifolds");
  en9->add_flag("--full", full, "All 9-vertex 3-manifolds instead (long run)");
  en9->add_option("--out", out_path, "Write canonical facet lists here");
  bind(en9, "enumerate neighbourly9", [&] { return cmd_enumerate(g, "neighbourly9", 0, full, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  Outcome o;
  std::string error;
  try {
    o = run();
  } catch (const PreconditionError& e) {
    o.code = kUsage;
    error = e.what();
  } catch (const ParseError& e) {
    o.code = kUsage;
    error = std::string("parse error: ") + e.what();
  } catch (const json::exception& e) {
    o.code = kUsage;
    error = std::string("parse error: ") + e.what();
  } catch (const InternalContradiction& e) {
    o.code = kFail;
    error = std::string("internal contradiction: ") + e.what();
  }

  if (g.json) {
    json env{{"command", command}, {"seed", g.seed}, {"exit_code", o.code}, {"ok", o.code == kPass}};
    env["result"] = error.empty() ? o.result : json::object();
    if (!error.empty()) env["error"] = error;
    std::cout << env.dump(2) << "\n";
  } else {
    std::cout << o.text;
    if (!error.empty()) std::cerr << "error: " << error << "\n";
  }
  return o.code;
}
