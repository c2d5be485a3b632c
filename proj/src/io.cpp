#include "smallcx/io.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "smallcx/errors.hpp"

namespace smallcx {

namespace {

std::vector<std::string> facet_lines(const SimplicialComplex& k) {
  std::vector<std::string> lines;
  lines.reserve(k.facets().size());
  for (Simplex f : k.facets()) {
    std::string line;
    f.for_each([&](int v) {
      if (!line.empty()) line += ' ';
      line += k.label(v);
    });
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace

SimplicialComplex read_facet_text(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> facet{std::istream_iterator<std::string>(tokens), {}};
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError("facet list: no facets found");
  try {
    return from_facets(facets);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("facet list: ") + e.what());
  }
}

SimplicialComplex parse_facet_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_facet_text(in);
}

std::string write_facet_text(const SimplicialComplex& k) {
  std::string out;
  for (const auto& line : facet_lines(k)) {
    out += line;
    out += '\n';
  }
  return out;
}

SimplicialComplex parse_facet_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("facet JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array()) {
    throw ParseError("facet JSON: expected an object with a \"facets\" array");
  }
  std::vector<std::vector<std::string>> facets;
  for (const auto& row : doc["facets"]) {
    if (!row.is_array()) throw ParseError("facet JSON: every facet must be an array");
    auto& facet = facets.emplace_back();
    for (const auto& v : row) {
      if (v.is_string()) {
        facet.push_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        facet.push_back(std::to_string(v.get<long long>()));
      } else {
        throw ParseError("facet JSON: vertex labels must be strings or integers");
      }
    }
  }
  if (facets.empty()) throw ParseError("facet JSON: no facets");
  try {
    return from_facets(facets);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("facet JSON: ") + e.what());
  }
}

std::string write_facet_json(const SimplicialComplex& k) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& line : facet_lines(k)) {
    std::istringstream tokens(line);
    rows.push_back(std::vector<std::string>{std::istream_iterator<std::string>(tokens), {}});
  }
  nlohmann::json doc;
  doc["facets"] = std::move(rows);
  return doc.dump() + "\n";
}

SimplicialComplex parse_facets_auto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_facet_json(text);
  return parse_facet_text(text);
}

}  // namespace smallcx
