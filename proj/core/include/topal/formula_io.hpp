#ifndef TOPAL_FORMULA_IO_HPP_
#define TOPAL_FORMULA_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "topal/formula.hpp"

namespace topal {

/// Parses the ASCII concrete syntax
///
///   f ::= ident | ~f | f & f | f | f | f -> f | f <-> f
///       | K_i f | Khat_i f | int(f) | [f] f | <f> f | box f | dia f
///       | false | (f)
///
/// Unary prefixes bind tightest, then &, |, -> (right-assoc) and <-> (right-assoc).
/// Abbreviations are desugared into primitives. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Prints with abbreviations restored where the primitive shape allows it.
/// parse_formula(to_string(f)) == f for every formula.
std::string to_string(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Whether `name` is usable as a proposition or agent id (nonempty,
/// alphanumeric, not a keyword).
bool is_valid_identifier(std::string_view name);

}  // namespace topal

#endif  // TOPAL_FORMULA_IO_HPP_
