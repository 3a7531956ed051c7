#pragma once

#include <string_view>
#include <vector>

#include "qlax/diffpoly.hpp"
#include "qlax/psdo.hpp"
#include "qlax/rational.hpp"

namespace qlax {

/// Syntax tree of the operator DSL:
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' nat)? | '-' factor
///   atom     := rational | 'u' ('_' nat)? | 'd' | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// `d` is the derivative d/dx, `u_k` the k-th x-derivative of u, and `*` is
/// operator composition (noncommutative).
struct Expr {
    enum class Kind { Number, Jet, D, Add, Sub, Mul, Neg, Pow };

    Kind kind = Kind::Number;
    Rational number;      // Number
    int index = 0;        // Jet: jet index; Pow: exponent
    std::vector<Expr> args;
    int line = 1;
    int column = 1;
};

/// Throws SyntaxError / UnboundIdentifier with 1-based line and column.
Expr parse_expr(std::string_view text);

PsdoSymbol elaborate_psdo(const Expr& e);
/// Same tree read in the commutative jet ring; `d` is an unknown identifier here.
DiffPoly elaborate_diffpoly(const Expr& e);

inline PsdoSymbol parse_operator(std::string_view text) { return elaborate_psdo(parse_expr(text)); }

} // namespace qlax
