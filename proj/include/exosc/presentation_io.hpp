#pragma once

#include <iosfwd>
#include <string>

#include "exosc/cyclotomic.hpp"
#include "exosc/freealg.hpp"

namespace exosc {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Plain-text presentation format, one declaration or relation per line:
//
//   # comment
//   generator a degree -1 star astar nilpotent 3
//   generator astar degree 1 star a
//   generator qN star qNinv
//   relation a astar = astar a + 1/2 zeta(12,1) qN qN
//   relation qN qNinv = 1
//
// Coefficients are products of rationals and zeta(m,j) literals; generator
// declaration order is the generator order used for rewriting.
Presentation<Cyclotomic> parse_presentation(std::istream& in);
Presentation<Cyclotomic> parse_presentation_file(const std::string& path);
Presentation<Cyclotomic> parse_presentation_string(const std::string& text);

std::string presentation_str(const Presentation<Cyclotomic>& p);

}  // namespace exosc
