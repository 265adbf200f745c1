#pragma once

// Text forms shared by the CLI and the reports.
//
// Monomials: `e`, `q^2p^3`, `qp`, `b1 b2 a2 a1`, `b1a1`, `zero`, `s3`, `g5@7`.
// Letters juxtaposed are multiplied, so `pq` reads as `e` and `a1 b2` as `zero`.
//
// Algebra specs: `bc`, `bc:omega_n=4`, `bc:subset(e,qp):N=688`, `bc:geom=3/2`,
// `cu2:mu_n=5`, `cu2:subset(e,b1a1,b2a2):N=86`, `chain`, `chain:geom=2`,
// `cyclic:7`, `cyclic:7:omega_n=3`.  `cu2` is the quotient (#) algebra;
// `cu2full` keeps the zero as a basis element.
//
// Expressions: sums, differences and products (`*` or juxtaposition) of
// rational literals, monomial letters and parenthesised expressions, with
// `^k` powers, e.g. `1*e + -1/4*q^1p^0 + 1/4*q^2p^1` or `(e - qp)^2`.

#include "semialg/l1.hpp"

#include <string>
#include <string_view>

namespace semialg {

Element parse_monomial(const Engine& engine, std::string_view text);

ContextPtr parse_algebra_spec(std::string_view text);

AlgebraElement parse_expression(const ContextPtr& ctx, std::string_view text);

/// `c*monomial + ...` in monomial order, `0` for the zero element.
std::string format_element(const AlgebraElement& f);

/// Inverse of parse_algebra_spec for the contexts it produces.
std::string describe(const AlgebraContext& ctx);

}  // namespace semialg
