#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <lndkit/polynomial.hpp>

namespace lnd {

// Syntax error or unknown identifier; `position` is a 0-based offset into the
// parsed text (or the line number for script-level errors, see `line`).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t position, std::size_t line = 0);

    std::size_t position() const { return position_; }
    std::size_t line() const { return line_; }

private:
    std::size_t position_;
    std::size_t line_;
};

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer ['/' integer] | identifier | '(' expr ')'
// Identifiers resolve to variables of `vars` first, then to `lets`.
MultiPoly parse(std::string_view text, const VarSet &vars, const Bindings &lets = {});

// Line-oriented input shared by the derivation and map file formats:
//
//   # comment
//   vars x y z              (optional, must come first; default x y z)
//   let f = x*z - y^2       (expanded immediately, visible to later lines)
//   <lhs> = <expr>
//
// The caller interprets <lhs> (e.g. "dy" or "y'").
struct Script {
    struct Assignment {
        std::string lhs;
        std::string rhs;
        std::size_t line;
    };

    VarSet vars{"x", "y", "z"};
    Bindings lets;
    std::vector<Assignment> assignments;

    MultiPoly expand(const Assignment &a) const;
};

Script parse_script(std::string_view text);

} // namespace lnd
