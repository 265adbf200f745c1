#pragma once

// Combinatorial recognition of idempotents in the chain algebra and in
// (l1(I(Cu2)), #), enumeration of all of them up to a support bound, and the
// exact identity checks behind equivalence and orthogonality.

#include "semialg/l1.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace semialg {

/// Coefficients in {-1, 0, 1} and every partial sum f(s_0) + ... + f(s_m) in {0, 1}.
bool chain_idempotent_check(const AlgebraElement& f);

/// Coefficients in {-1, 0, 1} and, for every b-word x, the sum of f(yy*) over
/// strict prefixes y of x lies in {0, 1}.  Needs a Cu2 quotient context and
/// support inside I(Cu2).
bool cu2_idempotent_check(const AlgebraElement& f);

inline constexpr std::uint64_t chain_enumeration_cap = 8;
inline constexpr std::uint64_t cu2_enumeration_cap = 3;

/// Every idempotent of the chain algebra supported on s_0..s_bound, or of the
/// Cu2 quotient supported on projections xx* with |x| <= bound.  Ordered
/// lexicographically by sign vector (0 before the nonzero sign) over the
/// support positions in enumeration order.
std::vector<AlgebraElement> enumerate_idempotents(const ContextPtr& ctx, std::uint64_t bound);

/// p = ab, q = ba exactly, with p and q idempotent.
bool check_equivalence_witness(const AlgebraElement& p, const AlgebraElement& q, const AlgebraElement& a,
                               const AlgebraElement& b);

/// pq = 0 = qp exactly.
bool check_orthogonal(const AlgebraElement& p, const AlgebraElement& q);

/// For a monomial idempotent c*delta_s with c = 1 and s = q^k p^k or x x*,
/// returns (a, b) with ab = p and ba = 1: (delta_{q^k}, delta_{p^k}) or (delta_x, delta_{x*}).
std::optional<std::pair<AlgebraElement, AlgebraElement>> monomial_equivalence_to_unit(const AlgebraElement& p);

}  // namespace semialg
