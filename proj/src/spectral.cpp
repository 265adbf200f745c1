#include "semialg/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace semialg {

namespace {

/// Dense polynomial over Q, coefficients from degree 0 upward, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b)
{
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

void make_monic(Poly& p)
{
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
}

Poly poly_gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b);
        Poly r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) make_monic(a);
    return a;
}

std::vector<std::complex<double>> poly_roots(const Poly& p)
{
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(p.size()) - 1;
    if (n <= 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = to_double(p.back());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        companion(0, i) = -to_double(p[static_cast<std::size_t>(n - 1 - i)]) / lead;
        if (i + 1 < n) companion(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> roots;
    const auto& ev = solver.eigenvalues();
    for (std::ptrdiff_t i = 0; i < n; ++i) roots.push_back(ev(i));
    std::sort(roots.begin(), roots.end(), [](auto x, auto y) {
        return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : std::arg(x) < std::arg(y);
    });
    return roots;
}

bool near_circle(std::complex<double> z, double tol)
{
    return std::abs(std::abs(z) - 1.0) <= tol;
}

Integer lcm_of_denominators(const AlgebraElement& f)
{
    Integer l = 1;
    for (const auto& [s, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

}  // namespace

std::optional<AlgebraElement> cyclic_invert(const AlgebraElement& f)
{
    const Engine& engine = f.context()->engine;
    if (engine.kind != EngineKind::cyclic) throw EngineMismatch("cyclic_invert needs a cyclic group algebra");
    const std::size_t m = engine.modulus;
    if (f.is_zero()) return std::nullopt;

    // (f * g)(k) = sum_i f(k - i) g(i): the circulant A[k][i] = L f(k - i)
    // with L clearing denominators, augmented by the right-hand side e_0.
    const Integer scale = lcm_of_denominators(f);
    std::vector<Integer> column(m, 0);
    for (const auto& [s, c] : f.terms()) {
        Rational scaled = c * scale;
        column[std::get<Cyclic>(s).residue] = scaled.get_num();
    }
    std::vector<std::vector<Integer>> a(m, std::vector<Integer>(m + 1, 0));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) a[k][i] = column[(k + m - i) % m];
    }
    a[0][m] = 1;

    // Fraction-free (Bareiss) elimination; every division is exact.
    Integer previous = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = k;
        while (pivot < m && a[pivot][k] == 0) ++pivot;
        if (pivot == m) return std::nullopt;
        std::swap(a[k], a[pivot]);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j <= m; ++j) {
                mpz_ptr target = a[i][j].get_mpz_t();
                mpz_mul(target, target, a[k][k].get_mpz_t());
                mpz_submul(target, a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
                mpz_divexact(target, target, previous.get_mpz_t());
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }

    std::vector<Rational> x(m);
    for (std::size_t i = m; i-- > 0;) {
        Rational acc(a[i][m]);
        for (std::size_t j = i + 1; j < m; ++j) acc -= Rational(a[i][j]) * x[j];
        x[i] = acc / Rational(a[i][i]);
    }
    AlgebraElement::Terms terms;
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i] != 0) terms.emplace(make_cyclic(i, m), x[i] * scale);
    }
    AlgebraElement g(f.context(), std::move(terms));
    if (f * g != AlgebraElement::unit(f.context())) throw CertificateError("circulant solve does not invert f");
    return g;
}

std::vector<std::complex<double>> cyclic_dft(const AlgebraElement& f)
{
    const Engine& engine = f.context()->engine;
    if (engine.kind != EngineKind::cyclic) throw EngineMismatch("cyclic_dft needs a cyclic group algebra");
    const std::uint64_t m = engine.modulus;
    std::vector<std::complex<double>> out(m);
    for (std::uint64_t k = 0; k < m; ++k) {
        std::complex<double> acc = 0;
        for (const auto& [s, c] : f.terms()) {
            const std::uint64_t j = std::get<Cyclic>(s).residue;
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % m) / static_cast<double>(m);
            acc += to_double(c) * std::polar(1.0, angle);
        }
        out[k] = acc;
    }
    return out;
}

LaurentElement LaurentElement::from(std::map<std::int64_t, Rational> c)
{
    std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
    return LaurentElement{std::move(c)};
}

Rational LaurentElement::norm() const
{
    Rational total = 0;
    for (const auto& [n, c] : coeffs) total += abs(c);
    return total;
}

std::complex<double> LaurentElement::symbol(std::complex<double> z) const
{
    std::complex<double> acc = 0;
    for (const auto& [n, c] : coeffs) acc += to_double(c) * std::pow(z, static_cast<int>(n));
    return acc;
}

LaurentElement operator*(const LaurentElement& f, const LaurentElement& g)
{
    std::map<std::int64_t, Rational> out;
    for (const auto& [n, a] : f.coeffs) {
        for (const auto& [k, b] : g.coeffs) out[n + k] += a * b;
    }
    return LaurentElement::from(std::move(out));
}

LaurentElement operator-(const LaurentElement& f, const LaurentElement& g)
{
    std::map<std::int64_t, Rational> out = f.coeffs;
    for (const auto& [k, b] : g.coeffs) out[k] -= b;
    return LaurentElement::from(std::move(out));
}

std::string to_string(const LaurentElement& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : f.coeffs) {
        os << (first ? "" : " + ") << to_string(c) << "*z^" << n;
        first = false;
    }
    return os.str();
}

std::string to_string(LaurentVerdict v)
{
    switch (v) {
    case LaurentVerdict::invertible: return "invertible";
    case LaurentVerdict::not_invertible: return "not-invertible";
    case LaurentVerdict::uncertain: return "uncertain";
    }
    return "?";
}

CircleRootReport laurent_circle_roots(const LaurentElement& f, double tol)
{
    if (f.is_zero()) throw PreconditionError("laurent_circle_roots needs a nonzero element");
    const std::int64_t low = f.coeffs.begin()->first;
    const std::int64_t high = f.coeffs.rbegin()->first;
    Poly p(static_cast<std::size_t>(high - low + 1), 0);
    for (const auto& [n, c] : f.coeffs) p[static_cast<std::size_t>(n - low)] = c;

    CircleRootReport r;
    r.roots = poly_roots(p);
    for (const auto& z : r.roots) {
        const double radius = std::abs(z);
        if (radius < 1.0 - tol) {
            ++r.inside;
        } else if (radius > 1.0 + tol) {
            ++r.outside;
        } else {
            ++r.on_band;
        }
    }
    // Real coefficients: a root z with |z| = 1 has 1/z = conj(z) as a root,
    // so it is a common root of P and its reversal.
    const Poly g = poly_gcd(p, Poly(p.rbegin(), p.rend()));
    r.reciprocal_gcd_degree = g.empty() ? 0 : g.size() - 1;
    if (r.reciprocal_gcd_degree == 0) {
        r.verdict = LaurentVerdict::invertible;
    } else {
        const auto common = poly_roots(g);
        if (std::any_of(common.begin(), common.end(), [&](auto z) { return near_circle(z, tol); })) {
            r.verdict = LaurentVerdict::not_invertible;
        } else if (r.on_band == 0) {
            r.verdict = LaurentVerdict::invertible;
        } else {
            r.verdict = LaurentVerdict::uncertain;
        }
    }
    return r;
}

double inverse_norm_estimate(const LaurentElement& f, std::size_t points)
{
    double least = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(points);
        least = std::min(least, std::abs(f.symbol(std::polar(1.0, theta))));
    }
    return least == 0 ? std::numeric_limits<double>::infinity() : 1.0 / least;
}

NudgeResult sr1_nudge(const LaurentElement& f, const Rational& eps, double tol)
{
    if (eps <= 0) throw PreconditionError("eps must be positive");
    NudgeResult out;
    if (f.is_zero()) {
        out.g = LaurentElement::from({{0, eps}});
        out.distance = eps;
        out.rho = 1;
    } else {
        CircleRootReport base = laurent_circle_roots(f, tol);
        if (base.verdict == LaurentVerdict::invertible) {
            out.g = f;
            out.distance = 0;
            out.rho = 1;
        } else {
            const Rational step = std::min(eps, Rational(1, 2));
            bool found = false;
            for (std::size_t k = 0; k <= nudge_max_steps && !found; ++k) {
                const Rational rho = 1 - step / Rational(Integer(1) << k);
                std::map<std::int64_t, Rational> c;
                Rational distance = 0;
                for (const auto& [n, v] : f.coeffs) {
                    const Rational factor = pow(rho, n);
                    c.emplace(n, v * factor);
                    distance += abs(v) * abs(factor - 1);
                }
                out.steps = k + 1;
                if (distance > eps) continue;
                LaurentElement g = LaurentElement::from(std::move(c));
                CircleRootReport roots = laurent_circle_roots(g, tol);
                if (roots.verdict != LaurentVerdict::invertible) continue;
                out.g = std::move(g);
                out.distance = distance;
                out.rho = rho;
                out.roots = std::move(roots);
                found = true;
            }
            if (!found) throw NudgeFailure("no admissible rho within " + std::to_string(nudge_max_steps) + " steps");
            out.inverse_norm_lower = inverse_norm_estimate(out.g);
            return out;
        }
    }
    out.roots = laurent_circle_roots(out.g, tol);
    out.inverse_norm_lower = inverse_norm_estimate(out.g);
    return out;
}

}  // namespace semialg
