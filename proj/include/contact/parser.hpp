#ifndef CONTACT_PARSER_HPP
#define CONTACT_PARSER_HPP

#include <string>
#include <variant>

#include "contact/errors.hpp"
#include "contact/poly.hpp"
#include "contact/realpoly.hpp"

namespace contact {

// Result of parsing germ text: holomorphic when no conjugated variable
// occurs, a real polynomial otherwise.
using ParsedGerm = std::variant<Poly, RealPoly>;

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | 'i' | var | '(' expr ')'
//   rational := int ('/' uint)?
//   var      := 'z' uint | 'zb' uint
// Whitespace is insignificant; 'zbk' is the conjugate of 'zk'. A leading
// sign on an expression is accepted as a convenience.
ParsedGerm parse_poly(const std::string& text, std::size_t n);

// same parser, demanding a holomorphic result
Poly parse_holomorphic(const std::string& text, std::size_t n);

// same parser, coercing holomorphic input and checking the reality invariant
RealPoly parse_real_germ(const std::string& text, std::size_t n);

// univariate polynomial in the curve parameter 't' with Gaussian rational
// coefficients; used for curve-jet files
Poly parse_jet_component(const std::string& text);

std::string to_string(const Poly& p);
std::string to_string(const RealPoly& p);

}  // namespace contact

#endif
