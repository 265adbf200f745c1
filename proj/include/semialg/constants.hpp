#pragma once

// Brackets for the finiteness constants
//   C_DI  = inf ||a|| ||b||            over ab = 1 != ba,
//   C'_DI = inf ||p||                  over idempotents p ~ 1, p != 1,
//   C_PI  = inf ||a|| ||b|| ||c|| ||d|| over ab = 1 = cd, ad = 0 = cb,
//   C'_PI = inf ||p|| ||q||            over orthogonal idempotents p ~ 1 ~ q.
// Upper bounds come from explicit witnesses that are re-verified exactly;
// lower bounds from closed forms whose hypotheses are read off the weight.

#include "semialg/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semialg {

enum class ConstantKind { c_di, c_di_prime, c_pi, c_pi_prime };

std::string to_string(ConstantKind k);

struct LowerBound {
    RationalInterval value;
    std::string provenance;
    /// False when the bound rests on a finite scan of a table weight.
    bool global = true;
};

struct UpperBound {
    Rational value;
    std::vector<AlgebraElement> witnesses;
};

struct BoundReport {
    ConstantKind constant = ConstantKind::c_di;
    std::optional<LowerBound> lower;
    std::optional<UpperBound> upper;

    /// lower.lo <= upper whenever both sides are present.
    bool consistent() const;
};

/// inf of the weight over s != e (and s != zero in a quotient algebra).
struct InfimumOffUnit {
    Rational value;
    bool global = true;
};

InfimumOffUnit inf_off_unit(const AlgebraContext& ctx, std::uint64_t horizon = 8);

/// ab = 1 and ba != 1; upper = ||a|| ||b||.
BoundReport cdi_upper_witness(const AlgebraElement& a, const AlgebraElement& b);

/// p idempotent, p ~ 1 via (a, b) with ab = p and ba = 1, p != 1.  When no
/// witness is supplied one is built for monomial idempotents.
/// Bracket [(1/2) inf_{s != e} w(s), ||p||].
BoundReport cdi_prime_bounds(const AlgebraElement& p,
                             const std::optional<std::pair<AlgebraElement, AlgebraElement>>& witness = std::nullopt,
                             std::uint64_t horizon = 8);

struct CubeRootBound {
    LowerBound bound;
    /// The level N with w >= N off the relevant idempotent set.
    Rational level;
};

/// (N/86)^(1/3) for l1(BC, w) with w >= 1 and w >= N off BC_I.
CubeRootBound cdi_lower_offchain(const AlgebraContext& ctx);

/// ab = 1 = cd, ad = 0 = cb; upper = ||a|| ||b|| ||c|| ||d||.  Verifies that
/// p = ba and q = dc are orthogonal idempotents equivalent to 1.
BoundReport cpi_upper_witness(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c,
                              const AlgebraElement& d);

/// Bracket [(1/4)(inf_{s != e} w(s))^2, ||p|| ||q||] for orthogonal idempotents p ~ 1 ~ q.
BoundReport cpi_prime_bounds(const AlgebraElement& p, const AlgebraElement& q,
                             const std::optional<std::pair<AlgebraElement, AlgebraElement>>& witness_p = std::nullopt,
                             const std::optional<std::pair<AlgebraElement, AlgebraElement>>& witness_q = std::nullopt,
                             std::uint64_t horizon = 8);

/// (N/86)^(1/3) for the Cu2 quotient with mu >= 1 and mu >= N off I(Cu2).
CubeRootBound cpi_lower_offidem(const AlgebraContext& ctx);

/// C_DI <= C_PI read on computed brackets: the DI lower bound and DI upper
/// bound may not exceed the PI upper bound.
bool di_le_pi(const BoundReport& di, const BoundReport& pi);

/// max(||ab - 1||, 1 - ||ba - 1||) for ||a||, ||b|| <= n.
Rational phi_n_value(const AlgebraElement& a, const AlgebraElement& b, std::uint64_t n);

struct PhiRescale {
    AlgebraElement a;
    AlgebraElement b;
    Rational value;
    Rational bound;  // eps (2n + eps)
};

/// Scales a DI witness with ||a|| = ||b|| <= n + eps by n/(n + eps).
PhiRescale phi_rescale_witness(const AlgebraElement& a, const AlgebraElement& b, std::uint64_t n, const Rational& eps);

struct NearWitness {
    AlgebraElement a;  // u^{-1} a with u = ab
    InverseResult inverse;
    Rational residual;  // ||a' b - 1||
};

/// Corrects a near pair (||ab - 1|| < 1) to a' = (ab)^{-1} a through the Neumann series.
NearWitness correct_near_pair(const AlgebraElement& a, const AlgebraElement& b, const Rational& tol);

}  // namespace semialg
