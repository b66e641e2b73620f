#ifndef KEMAE_PARSE_HPP
#define KEMAE_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "kemae/polynomial.hpp"

namespace kemae {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

/// Parses an exact polynomial expression over the named variables.
/// Grammar: rationals "a" or "a/b", variable names, +, -, *, ^ with
/// non-negative integer exponents, parentheses. '*' is optional before a
/// variable or '(' ("2x1", "1/3 x1^2 x2"). '/' divides by a nonzero
/// rational constant only. Whitespace-insensitive; round-trips with
/// to_string().
Polynomial parse_expression(const std::string& text, const std::vector<std::string>& vars);

}  // namespace kemae

#endif
