#ifndef FACTCERT_PARSE_HPP
#define FACTCERT_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "factcert/int_poly.hpp"

namespace factcert {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Grammar: integer coefficients with optional sign, variable 'x', '^' with a
// nonnegative exponent (<= 10^6), optional '*', '+'/'-' separators,
// whitespace ignored. Repeated monomials of equal degree are summed. The
// UTF-8 minus sign is accepted as '-'.
IntPoly parse_poly(std::string_view text);

// Canonical text: descending degree, " + "/" - " separators, no "+ -",
// coefficient 1 omitted except on the constant term. Reparsing the output
// yields an equal polynomial.
std::string format_poly(const IntPoly& f);

}  // namespace factcert

#endif
