#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "evolab/polynomial.hpp"

namespace evolab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at offset " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/// Parses the entry grammar:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' posint)*
///   primary := literal | symbol | '(' expr ')'
///   literal := digits ['/' digits] ['i'] | 'i'
/// Whitespace-insensitive. 'i' is the imaginary unit, never a variable.
/// When `allowed_symbols` is non-null, any other symbol raises ParseError.
Polynomial parse_entry(const std::string& s,
                       const std::set<std::string>* allowed_symbols = nullptr);

/// Parses a constant entry; rejects anything with variables.
GaussianRational parse_gaussian(const std::string& s);

} // namespace evolab
