#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "hc/symbol.hpp"

namespace hc {

/// Syntax error with the 0-based offset into the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an expression over the variable z into a normalized rational
/// Symbol. Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := 'z' | number | number 'i' | 'i' | '(' expr (',' expr)? ')'
/// Numbers are decimal with optional exponent; "1.5+2i" and "(1.5,2)" both
/// denote the same complex literal. `bindings` maps extra single-letter
/// identifiers (the region scan uses 'l') to constant values.
///
/// Throws ParseError for syntax problems and std::invalid_argument when the
/// resulting denominator vanishes on the closed disk.
Symbol parse_symbol(const std::string& text, double eps_boundary = 1e-9,
                    const std::map<char, cx>& bindings = {});

} // namespace hc
