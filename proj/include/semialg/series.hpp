#pragma once

// Certified power-series constructions: Neumann inversion, the projection of
// an almost-idempotent onto a nearby idempotent, and explicit similarity
// witnesses between close idempotents.  The series collapse to closed forms
// when the relevant element m satisfies m^2 = 0 or m^2 = c m; otherwise they
// are truncated with rational tail bounds from binom(2n, n) <= 4^n.

#include "semialg/l1.hpp"

#include <map>
#include <string>
#include <vector>

namespace semialg {

struct RationalInterval {
    Rational lo;
    Rational hi;

    static RationalInterval point(const Rational& x) { return {x, x}; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Enclosure of x^(1/k) for x >= 0 with width <= 2^-precision; a point when x is a perfect k-th power.
RationalInterval root_enclosure(const Rational& x, unsigned k, unsigned precision = 64);

/// Enclosure of (M + 1/2)((1 - 4t)^(-1/2) - 1) for 0 <= t < 1/4.
RationalInterval f_M_eval(const Rational& M, const Rational& t, unsigned precision = 64);

enum class CertificateKind { exact, truncated };

struct BoundCheck {
    std::string claim;
    bool holds = false;
};

struct Certificate {
    CertificateKind kind = CertificateKind::exact;
    /// Quantities that vanish on the exact path (||p^2 - p||, ||uv - 1||, tail bounds).
    std::map<std::string, Rational> residuals;
    /// Other recomputable values (distances, norms) referenced by the bound checks.
    std::map<std::string, Rational> measurements;
    std::vector<BoundCheck> bounds_checked;
    std::size_t series_terms = 0;

    bool all_bounds_hold() const;
};

struct InverseResult {
    AlgebraElement inverse;
    Certificate certificate;
};

/// Inverse of u by the Neumann series in x = 1 - u; requires ||x|| < 1.
InverseResult neumann_inverse(const AlgebraElement& u, const Rational& tol);

struct ProjectionResult {
    AlgebraElement idempotent;
    Certificate certificate;
};

/// Idempotent close to a, p = (a - 1/2) s + 1/2 with s = sum binom(2n,n)(a - a^2)^n.
/// Requires nu = ||a^2 - a|| < 1/4.
ProjectionResult idempotent_projection(const AlgebraElement& a, const Rational& tol);

struct SimilarityWitness {
    AlgebraElement a;
    AlgebraElement b;
    Certificate certificate;
};

/// For idempotents with ||p - q|| < 1 returns a, b with ab = p and ba = q.
SimilarityWitness zemanek_witness(const AlgebraElement& p, const AlgebraElement& q, const Rational& tol);

}  // namespace semialg
