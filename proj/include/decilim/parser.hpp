#ifndef DECILIM_PARSER_HPP
#define DECILIM_PARSER_HPP

#include <optional>
#include <string>

#include "decilim/laurent.hpp"

namespace decilim {

// Text grammar: signed integer coefficients, optional '*', '^' exponents
// (possibly negative), variables x,y,z for d <= 3 or x1..xd.
// Examples: "x^2-x-1", "5+x+x^-1+y+y^-1", "-605*x^15*y^5".
LaurentPoly parse_poly(const std::string& text, std::optional<int> dim_hint = std::nullopt);

// Canonical printer; parse(print(f)) == f. Terms in descending graded-lex order.
std::string print_poly(const LaurentPoly& f);

// {"d":2,"terms":[{"e":[1,0],"c":"-605"}]} with coefficients as decimal strings.
std::string poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const std::string& json_text);

} // namespace decilim

#endif
