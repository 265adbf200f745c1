#include "semialg/series.hpp"

#include <algorithm>

namespace semialg {

namespace {

Rational two_to_minus(unsigned bits)
{
    return Rational(Integer(1), Integer(1) << bits);
}

/// Smallest N with ratio^(N+1) / (1 - ratio) <= tol, for 0 < ratio < 1.
std::uint64_t geometric_cutoff(const Rational& ratio, const Rational& tol)
{
    if (ratio == 0) return 0;
    Rational scale = 1 / (1 - ratio);
    Rational tail = ratio * scale;
    std::uint64_t n = 0;
    while (tail > tol) {
        tail *= ratio;
        ++n;
    }
    return n;
}

Rational geometric_tail(const Rational& ratio, std::uint64_t n)
{
    return pow(ratio, static_cast<std::int64_t>(n + 1)) / (1 - ratio);
}

Integer central_binomial(std::uint64_t n)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r;
}

void require_positive_tol(const Rational& tol)
{
    if (tol <= 0) throw PreconditionError("tolerance must be positive");
}

}  // namespace

bool Certificate::all_bounds_hold() const
{
    return std::all_of(bounds_checked.begin(), bounds_checked.end(), [](const BoundCheck& b) { return b.holds; });
}

RationalInterval root_enclosure(const Rational& x, unsigned k, unsigned precision)
{
    if (k == 0) throw PreconditionError("root of order zero");
    if (x < 0) throw PreconditionError("root_enclosure needs a nonnegative argument");
    Rational exact;
    if (exact_root(x, k, exact)) return RationalInterval::point(exact);

    Rational lo = 0;
    Rational hi = x > 1 ? x : Rational(1);
    const Rational target = two_to_minus(precision);
    // Dyadic bisection keeps the endpoints small: lo^k < x < hi^k throughout.
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        if (pow(mid, k) < x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

RationalInterval f_M_eval(const Rational& M, const Rational& t, unsigned precision)
{
    if (M < 0) throw PreconditionError("f_M needs M >= 0");
    if (t < 0 || t >= Rational(1, 4)) throw PreconditionError("f_M is defined on [0, 1/4)");
    const Rational scale = M + Rational(1, 2);
    const Rational y = 1 - 4 * t;
    Rational root;
    if (exact_root(y, 2, root)) return RationalInterval::point(scale * (1 / root - 1));

    const Rational target = two_to_minus(precision);
    for (unsigned extra = 8;; extra += 16) {
        RationalInterval r = root_enclosure(y, 2, precision + extra);
        if (r.lo <= 0) continue;
        RationalInterval out{scale * (1 / r.hi - 1), scale * (1 / r.lo - 1)};
        if (out.width() <= target) return out;
    }
}

InverseResult neumann_inverse(const AlgebraElement& u, const Rational& tol)
{
    require_positive_tol(tol);
    const ContextPtr& ctx = u.context();
    const AlgebraElement one = AlgebraElement::unit(ctx);
    const AlgebraElement x = one - u;
    const Rational r = norm(x);
    if (r >= 1) throw PreconditionError("neumann_inverse needs ||1 - u|| < 1, got " + to_string(r));

    Certificate cert;
    AlgebraElement v = one;
    const AlgebraElement x2 = x * x;
    if (x.is_zero()) {
        cert.series_terms = 1;
    } else if (x2.is_zero()) {
        v = one + x;
        cert.series_terms = 2;
    } else if (auto c = square_ratio(x, x2)) {
        // x^n = c^(n-1) x, so the series sums to 1 + x / (1 - c).
        v = one + x * Rational(1 / (1 - *c));
    } else {
        const std::uint64_t cutoff = geometric_cutoff(r, tol);
        AlgebraElement term = one;
        cert.kind = CertificateKind::truncated;
        for (std::uint64_t n = 1; n <= cutoff; ++n) {
            term = term * x;
            if (term.is_zero()) {
                cert.kind = CertificateKind::exact;
                break;
            }
            v += term;
            cert.series_terms = n + 1;
        }
        if (cert.kind == CertificateKind::truncated) cert.residuals["tail_bound"] = geometric_tail(r, cutoff);
    }

    const Rational left = norm(u * v - one);
    const Rational right = norm(v * u - one);
    cert.residuals["||uv-1||"] = left;
    cert.residuals["||vu-1||"] = right;
    cert.measurements["||1-u||"] = r;
    if (cert.kind == CertificateKind::exact && (left != 0 || right != 0)) {
        throw CertificateError("neumann_inverse: closed form is not an inverse");
    }
    cert.bounds_checked.push_back({"||uv-1|| <= tol", left <= tol});
    cert.bounds_checked.push_back({"||vu-1|| <= tol", right <= tol});
    return {std::move(v), std::move(cert)};
}

ProjectionResult idempotent_projection(const AlgebraElement& a, const Rational& tol)
{
    require_positive_tol(tol);
    const ContextPtr& ctx = a.context();
    const AlgebraElement one = AlgebraElement::unit(ctx);
    const AlgebraElement m = a - a * a;
    const Rational nu = norm(m);
    if (nu >= Rational(1, 4)) throw PreconditionError("idempotent_projection needs ||a^2 - a|| < 1/4, got " + to_string(nu));

    Certificate cert;
    AlgebraElement s = one;
    bool use_series = false;
    if (!m.is_zero()) {
        const AlgebraElement m2 = m * m;
        Rational root;
        if (m2.is_zero()) {
            s = one + 2 * m;
        } else if (auto c = square_ratio(m, m2); c && exact_root(1 - 4 * *c, 2, root)) {
            // m^n = c^(n-1) m and sum binom(2n,n) c^n = (1 - 4c)^(-1/2).
            s = one + m * Rational((1 / root - 1) / *c);
        } else {
            use_series = true;
        }
    }
    if (use_series) {
        const Rational ratio = 4 * nu;
        const std::uint64_t cutoff = geometric_cutoff(ratio, tol);
        AlgebraElement term = one;
        cert.kind = CertificateKind::truncated;
        for (std::uint64_t n = 1; n <= cutoff; ++n) {
            term = term * m;
            if (term.is_zero()) {
                cert.kind = CertificateKind::exact;
                break;
            }
            s += Rational(central_binomial(n)) * term;
            cert.series_terms = n + 1;
        }
        if (cert.kind == CertificateKind::truncated) cert.residuals["series_tail"] = geometric_tail(ratio, cutoff);
    }

    AlgebraElement p = (a * s - Rational(1, 2) * s).plus_unit(Rational(1, 2));
    const Rational residual = norm(p * p - p);
    if (cert.kind == CertificateKind::exact && residual != 0) {
        throw CertificateError("idempotent_projection: closed form is not idempotent");
    }
    cert.residuals["||p^2-p||"] = residual;

    const Rational a_norm = norm(a);
    const Rational distance = norm(p - a);
    const RationalInterval bound = f_M_eval(a_norm, nu);
    cert.measurements["nu"] = nu;
    cert.measurements["||a||"] = a_norm;
    cert.measurements["||p-a||"] = distance;
    cert.measurements["f_||a||(nu).hi"] = bound.hi;
    cert.bounds_checked.push_back({"||p^2-p|| <= tol", residual <= tol});
    cert.bounds_checked.push_back({"||p-a|| <= f_||a||(nu) + tol", distance <= bound.hi + tol});
    return {std::move(p), std::move(cert)};
}

SimilarityWitness zemanek_witness(const AlgebraElement& p, const AlgebraElement& q, const Rational& tol)
{
    require_positive_tol(tol);
    if (!is_idempotent(p) || !is_idempotent(q)) throw PreconditionError("zemanek_witness needs idempotent inputs");
    const ContextPtr& ctx = p.context();
    const AlgebraElement one = AlgebraElement::unit(ctx);
    const AlgebraElement diff = p - q;
    const Rational dist = norm(diff);
    if (dist >= 1) throw PreconditionError("zemanek_witness needs ||p - q|| < 1, got " + to_string(dist));

    const AlgebraElement x = diff * diff;
    const Rational nu = norm(x);
    Certificate cert;
    AlgebraElement d = one;
    bool use_series = false;
    if (!x.is_zero()) {
        const AlgebraElement x2 = x * x;
        Rational root;
        if (x2.is_zero()) {
            d = one + Rational(1, 2) * x;
        } else if (auto c = square_ratio(x, x2); c && exact_root(1 - *c, 2, root)) {
            d = one + x * Rational((1 / root - 1) / *c);
        } else {
            use_series = true;
        }
    }
    const Rational p_norm = norm(p);
    const Rational q_norm = norm(q);
    if (use_series) {
        // ab - p = p(c^2 - 1)p and ba - q = (c^2 - 1)q; a tail tau in d gives
        // ||c^2 - 1|| <= (2 tau / (1 - nu) + tau^2)(1 + nu).
        const Rational scale = std::max(Rational(p_norm * p_norm), q_norm) * (1 + nu) * (2 / (1 - nu) + 1);
        const Rational tail_tol = std::min(Rational(1), Rational(tol / scale));
        const std::uint64_t cutoff = geometric_cutoff(nu, tail_tol);
        AlgebraElement term = one;
        cert.kind = CertificateKind::truncated;
        for (std::uint64_t n = 1; n <= cutoff; ++n) {
            term = term * x;
            if (term.is_zero()) {
                cert.kind = CertificateKind::exact;
                break;
            }
            Rational coeff(central_binomial(n), Integer(1) << (2 * n));
            coeff.canonicalize();
            d += coeff * term;
            cert.series_terms = n + 1;
        }
        if (cert.kind == CertificateKind::truncated) cert.residuals["series_tail"] = geometric_tail(nu, cutoff);
    }

    const AlgebraElement c = d * (p + q).plus_unit(-1);
    AlgebraElement a = p * c;
    AlgebraElement b = c * p;
    const Rational left = norm(a * b - p);
    const Rational right = norm(b * a - q);
    if (cert.kind == CertificateKind::exact && (left != 0 || right != 0)) {
        throw CertificateError("zemanek_witness: closed-form witnesses fail ab = p, ba = q");
    }
    cert.residuals["||ab-p||"] = left;
    cert.residuals["||ba-q||"] = right;

    const Rational product = norm(a) * norm(b);
    const Rational reflection = norm((2 * p).plus_unit(-1));
    const Rational product_bound = p_norm * p_norm * (reflection + dist) * (reflection + dist) / (1 - dist * dist);
    cert.measurements["||p-q||"] = dist;
    cert.measurements["||a||*||b||"] = product;
    cert.measurements["norm_product_bound"] = product_bound;
    cert.bounds_checked.push_back({"||a|| ||b|| <= ||p||^2 (||2p-1|| + ||p-q||)^2 / (1 - ||p-q||^2)", product <= product_bound});
    if (cert.kind == CertificateKind::truncated) {
        cert.bounds_checked.push_back({"||ab-p|| <= tol", left <= tol});
        cert.bounds_checked.push_back({"||ba-q|| <= tol", right <= tol});
    }
    return {std::move(a), std::move(b), std::move(cert)};
}

}  // namespace semialg
