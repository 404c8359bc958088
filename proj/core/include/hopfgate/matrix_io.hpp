#pragma once

#include "hopfgate/matrix.hpp"

#include <string>
#include <variant>

namespace hopfgate {

/// JSON matrix file: {"rows": R, "cols": C, "entries": [[...strings...]]}.
/// Entries are either all numeric (decimals, "p/q" rationals) or all sign
/// symbols ("+", "-", "0"); the two modes never mix within one file.
struct MatrixFile {
    std::variant<RationalMatrix, SignPattern> content;

    bool is_numeric() const { return std::holds_alternative<RationalMatrix>(content); }
    const RationalMatrix& matrix() const;
    const SignPattern& pattern() const;
    /// Numeric files as-is; sign patterns via the unit member.
    RationalMatrix as_matrix() const;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

MatrixFile parse_matrix_json(const std::string& text);
MatrixFile load_matrix_file(const std::string& path);

std::string matrix_to_json(const RationalMatrix& m);
std::string pattern_to_json(const SignPattern& p);

} // namespace hopfgate
