#pragma once

// Invertibility in l1(Z/mZ) by an exact circulant solve, the discrete Fourier
// transform as a floating-point cross-check, and Wiener-lemma invertibility
// of finitely supported elements of l1(Z) with a radial nudge toward the
// invertibles.

#include "semialg/l1.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semialg {

/// Exact inverse of f in l1(Z/mZ), or nullopt when the circulant system is singular.
std::optional<AlgebraElement> cyclic_invert(const AlgebraElement& f);

/// f^(k) = sum_j f(j) exp(-2 pi i j k / m), summed in ascending j.
std::vector<std::complex<double>> cyclic_dft(const AlgebraElement& f);

/// Finitely supported element of l1(Z); symbol sum_n f(n) z^n.
struct LaurentElement {
    std::map<std::int64_t, Rational> coeffs;

    static LaurentElement from(std::map<std::int64_t, Rational> c);
    bool is_zero() const { return coeffs.empty(); }
    Rational norm() const;
    std::complex<double> symbol(std::complex<double> z) const;

    bool operator==(const LaurentElement&) const = default;
};

LaurentElement operator*(const LaurentElement& f, const LaurentElement& g);
LaurentElement operator-(const LaurentElement& f, const LaurentElement& g);
std::string to_string(const LaurentElement& f);

enum class LaurentVerdict { invertible, not_invertible, uncertain };

std::string to_string(LaurentVerdict v);

inline constexpr double default_circle_band = 1e-7;

struct CircleRootReport {
    std::vector<std::complex<double>> roots;
    std::size_t inside = 0;   // radius < 1 - tol
    std::size_t on_band = 0;  // |radius - 1| <= tol
    std::size_t outside = 0;  // radius > 1 + tol
    /// Degree of gcd(P, z^deg P(1/z)) over Q; every unit-circle root of P is a root of it.
    std::size_t reciprocal_gcd_degree = 0;
    LaurentVerdict verdict = LaurentVerdict::uncertain;
};

/// Roots of P(z) = z^{-min support} f(z).  A trivial reciprocal gcd certifies
/// invertibility exactly; a root of the gcd inside the band gives
/// not_invertible; any other root in the band leaves the verdict uncertain.
CircleRootReport laurent_circle_roots(const LaurentElement& f, double tol = default_circle_band);

/// 1 / min |f(z)| over `points` equally spaced points of the unit circle;
/// a lower estimate of the l1 norm of the inverse (infinite if f vanishes on the grid).
double inverse_norm_estimate(const LaurentElement& f, std::size_t points = 1024);

struct NudgeResult {
    LaurentElement g;
    Rational distance;
    Rational rho;
    std::size_t steps = 0;
    CircleRootReport roots;
    double inverse_norm_lower = 0;
};

inline constexpr std::size_t nudge_max_steps = 40;

class NudgeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// g(n) = f(n) rho^n with rho = 1 - min(eps, 1/2) 2^-k for the first k in
/// 0..40 making g certifiably invertible with ||f - g|| <= eps.
NudgeResult sr1_nudge(const LaurentElement& f, const Rational& eps, double tol = default_circle_band);

}  // namespace semialg
