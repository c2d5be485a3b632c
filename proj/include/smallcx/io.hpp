#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "smallcx/complex.hpp"

namespace smallcx {

/// Facet-list text: one facet per line, labels separated by single spaces,
/// '#' starts a comment line, blank lines ignored.
SimplicialComplex read_facet_text(std::istream& in);
SimplicialComplex parse_facet_text(std::string_view text);

/// Inverse of read_facet_text. Vertices within a line follow id order and
/// the lines themselves are sorted as strings, so output is deterministic.
std::string write_facet_text(const SimplicialComplex& k);

/// {"facets": [["1","2","4","5"], ...]}; numeric labels may be JSON numbers.
SimplicialComplex parse_facet_json(std::string_view text);
std::string write_facet_json(const SimplicialComplex& k);

/// Picks the format from content: a leading '{' means JSON.
SimplicialComplex parse_facets_auto(std::string_view text);

}  // namespace smallcx
