// Text grammar and JSON forms for polynomials, plus the curve input file
// format:
//
//   vars: x0 x1 x2
//   F1 = x0^3 + x1^3 + x2^3
//
// Polynomial grammar: terms joined by + and -, each term a '*'-joined product
// of rational literals (a or a/b) and powers x3^2 / y1. Whitespace is free.
// Parse failures throw ParseError with 1-based line and column.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mhess/poly.hpp"

namespace mhess {

// Canonical rendering: grevlex-descending terms, " + "/" - " joiners,
// coefficient omitted when it is ±1 on a non-constant monomial.
std::string poly_to_string(const Poly& p);

// `line0` offsets reported line numbers when the text is embedded in a file.
Poly parse_poly(const std::string& text, int nx, int ny, int line0 = 1);

struct ParsedInput {
    int nx = 0;                    // declared variable count (r+1)
    std::vector<Poly> forms;       // in file order, x-only layout
    std::vector<std::string> names;
};

ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, int nx, int ny);

}  // namespace mhess
