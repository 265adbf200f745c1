#include "semialg/constants.hpp"

#include "semialg/idempotents.hpp"

#include <algorithm>

namespace semialg {

namespace {

using Witness = std::pair<AlgebraElement, AlgebraElement>;

void require_same_context(std::initializer_list<const AlgebraElement*> elems)
{
    const AlgebraContext& first = *(*elems.begin())->context();
    for (const auto* f : elems) {
        if (!(*f->context() == first)) throw ContextMismatch("witnesses live in different algebras");
    }
}

/// Validates p as an idempotent ~ 1 with p != 0, 1 and returns its witness.
Witness unit_equivalence(const AlgebraElement& p, const std::optional<Witness>& supplied)
{
    const AlgebraElement one = AlgebraElement::unit(p.context());
    if (!is_idempotent(p)) throw PreconditionError("witness is not an idempotent");
    if (p.is_zero()) throw PreconditionError("witness idempotent is zero");
    if (p == one) throw PreconditionError("witness idempotent equals the unit");
    std::optional<Witness> w = supplied ? supplied : monomial_equivalence_to_unit(p);
    if (!w) throw PreconditionError("no equivalence witness supplied and p is not a monomial idempotent");
    if (!check_equivalence_witness(p, one, w->first, w->second)) {
        throw PreconditionError("equivalence witness fails ab = p, ba = 1");
    }
    // Any idempotent p != 0, 1 has ||p|| >= 1 and ||1 - p|| >= 1.
    if (norm(p) < 1 || norm(one - p) < 1) throw CertificateError("idempotent with norm below 1");
    return *w;
}

Rational level_off(const AlgebraContext& ctx, const std::function<bool(const Element&)>& allowed, const char* what)
{
    const Weight& w = ctx.weight;
    if (!w.bounded_below_by_one()) throw PreconditionError("the cube-root bound needs a weight >= 1");
    switch (w.kind()) {
    case WeightKind::constant_off_subset: {
        const bool inside = std::all_of(w.subset().begin(), w.subset().end(), allowed);
        return inside ? w.level() : Rational(1);
    }
    case WeightKind::geometric: return w.lambda();
    case WeightKind::table: break;
    }
    throw PreconditionError(std::string("cannot certify a lower level off ") + what + " for a table weight");
}

LowerBound cube_root_bound(const Rational& level, const char* provenance)
{
    return {root_enclosure(level / 86, 3), provenance, true};
}

}  // namespace

std::string to_string(ConstantKind k)
{
    switch (k) {
    case ConstantKind::c_di: return "C_DI";
    case ConstantKind::c_di_prime: return "C'_DI";
    case ConstantKind::c_pi: return "C_PI";
    case ConstantKind::c_pi_prime: return "C'_PI";
    }
    return "?";
}

bool BoundReport::consistent() const
{
    if (!lower || !upper) return true;
    return lower->value.lo <= upper->value;
}

InfimumOffUnit inf_off_unit(const AlgebraContext& ctx, std::uint64_t horizon)
{
    const Weight& w = ctx.weight;
    const bool zero_counts = ctx.engine.has_zero() && !ctx.quotient_zero;
    const bool finite = ctx.engine.kind == EngineKind::cyclic;
    if (finite && ctx.engine.modulus == 1) throw PreconditionError("the trivial group has no element besides e");
    switch (w.kind()) {
    case WeightKind::constant_off_subset: {
        std::size_t counted = 0;
        for (const auto& s : w.subset()) {
            if (is_identity(s) || (is_zero(s) && !zero_counts)) continue;
            ++counted;
        }
        std::optional<Rational> best;
        if (counted > 0) best = Rational(1);
        const bool complement = !finite || w.subset().size() < ctx.engine.modulus;
        if (complement) best = best ? std::min(*best, w.level()) : w.level();
        return {*best, true};
    }
    case WeightKind::geometric:
        // Every engine has letters of length 1; in the full Cu2 algebra the zero has length 0.
        return {zero_counts ? Rational(1) : w.lambda(), true};
    case WeightKind::table: break;
    }
    std::optional<Rational> best;
    for (const auto& s : enumerate_elements(ctx.engine, horizon, zero_counts)) {
        if (is_identity(s)) continue;
        Rational v = is_zero(s) ? w.zero_value() : w(s);
        if (!best || v < *best) best = v;
    }
    if (!best) throw PreconditionError("no element besides e within the scan horizon");
    return {*best, false};
}

BoundReport cdi_upper_witness(const AlgebraElement& a, const AlgebraElement& b)
{
    require_same_context({&a, &b});
    const AlgebraElement one = AlgebraElement::unit(a.context());
    if (a * b != one) throw PreconditionError("C_DI witness fails ab = 1");
    const AlgebraElement ba = b * a;
    if (ba == one) throw PreconditionError("C_DI witness has ba = 1");
    if (norm(ba - one) < 1) throw CertificateError("ba != 1 but ||ba - 1|| < 1");
    BoundReport r;
    r.constant = ConstantKind::c_di;
    r.upper = UpperBound{norm(a) * norm(b), {a, b}};
    return r;
}

BoundReport cdi_prime_bounds(const AlgebraElement& p, const std::optional<Witness>& witness, std::uint64_t horizon)
{
    Witness w = unit_equivalence(p, witness);
    const InfimumOffUnit inf = inf_off_unit(*p.context(), horizon);
    BoundReport r;
    r.constant = ConstantKind::c_di_prime;
    r.lower = LowerBound{RationalInterval::point(inf.value / 2), "idempotent norm >= (1/2) inf_{s != e} w(s)", inf.global};
    r.upper = UpperBound{norm(p), {p, std::move(w.first), std::move(w.second)}};
    return r;
}

CubeRootBound cdi_lower_offchain(const AlgebraContext& ctx)
{
    if (ctx.engine.kind != EngineKind::bicyclic) throw PreconditionError("the off-BC_I bound is for the bicyclic monoid");
    auto in_bci = [](const Element& s) {
        const auto& b = std::get<Bicyclic>(s);
        return b.alpha == b.beta;
    };
    Rational level = level_off(ctx, in_bci, "BC_I");
    return {cube_root_bound(level, "C_DI >= (N/86)^(1/3) for w >= N off BC_I"), level};
}

BoundReport cpi_upper_witness(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c,
                              const AlgebraElement& d)
{
    require_same_context({&a, &b, &c, &d});
    const AlgebraElement one = AlgebraElement::unit(a.context());
    if (a * b != one) throw PreconditionError("C_PI witness fails ab = 1");
    if (c * d != one) throw PreconditionError("C_PI witness fails cd = 1");
    if (!(a * d).is_zero()) throw PreconditionError("C_PI witness fails ad = 0");
    if (!(c * b).is_zero()) throw PreconditionError("C_PI witness fails cb = 0");
    const AlgebraElement p = b * a;
    const AlgebraElement q = d * c;
    if (!check_equivalence_witness(p, one, b, a) || !check_equivalence_witness(q, one, d, c) || !check_orthogonal(p, q)) {
        throw CertificateError("derived idempotents ba, dc are not orthogonal and equivalent to 1");
    }
    BoundReport r;
    r.constant = ConstantKind::c_pi;
    r.upper = UpperBound{norm(a) * norm(b) * norm(c) * norm(d), {a, b, c, d}};
    return r;
}

BoundReport cpi_prime_bounds(const AlgebraElement& p, const AlgebraElement& q, const std::optional<Witness>& witness_p,
                             const std::optional<Witness>& witness_q, std::uint64_t horizon)
{
    require_same_context({&p, &q});
    Witness wp = unit_equivalence(p, witness_p);
    Witness wq = unit_equivalence(q, witness_q);
    if (!check_orthogonal(p, q)) throw PreconditionError("C'_PI witnesses are not orthogonal");
    const InfimumOffUnit inf = inf_off_unit(*p.context(), horizon);
    BoundReport r;
    r.constant = ConstantKind::c_pi_prime;
    r.lower = LowerBound{RationalInterval::point(inf.value * inf.value / 4),
                         "product of two idempotent norm bounds (1/2) inf_{s != e} w(s)", inf.global};
    r.upper = UpperBound{norm(p) * norm(q), {p, q, std::move(wp.first), std::move(wp.second), std::move(wq.first),
                                             std::move(wq.second)}};
    return r;
}

CubeRootBound cpi_lower_offidem(const AlgebraContext& ctx)
{
    if (ctx.engine.kind != EngineKind::cu2 || !ctx.quotient_zero) {
        throw PreconditionError("the off-I(Cu2) bound is for the Cu2 quotient algebra");
    }
    auto in_idem = [](const Element& s) { return is_zero(s) || is_idempotent_element(s); };
    Rational level = level_off(ctx, in_idem, "I(Cu2)");
    return {cube_root_bound(level, "C_PI >= (N/86)^(1/3) for mu >= N off I(Cu2)"), level};
}

bool di_le_pi(const BoundReport& di, const BoundReport& pi)
{
    if (!pi.upper) return true;
    const Rational& cap = pi.upper->value;
    if (di.lower && di.lower->value.lo > cap) return false;
    if (di.upper && di.upper->value > cap) return false;
    return true;
}

Rational phi_n_value(const AlgebraElement& a, const AlgebraElement& b, std::uint64_t n)
{
    require_same_context({&a, &b});
    if (norm(a) > n || norm(b) > n) throw PreconditionError("phi_n needs ||a||, ||b|| <= n");
    const Rational left = norm((a * b).plus_unit(-1));
    const Rational right = 1 - norm((b * a).plus_unit(-1));
    return std::max(left, right);
}

PhiRescale phi_rescale_witness(const AlgebraElement& a, const AlgebraElement& b, std::uint64_t n, const Rational& eps)
{
    require_same_context({&a, &b});
    if (eps <= 0) throw PreconditionError("eps must be positive");
    if (n == 0) throw PreconditionError("n must be positive");
    const AlgebraElement one = AlgebraElement::unit(a.context());
    if (a * b != one) throw PreconditionError("rescaling needs ab = 1");
    if (b * a == one) throw PreconditionError("rescaling needs ba != 1");
    const Rational na = norm(a);
    if (na != norm(b) || na > n + eps) throw PreconditionError("rescaling needs ||a|| = ||b|| <= n + eps");
    const Rational scale = Rational(n) / (n + eps);
    PhiRescale r{scale * a, scale * b, 0, eps * (2 * n + eps)};
    r.value = phi_n_value(r.a, r.b, n);
    if (r.value > r.bound) throw CertificateError("rescaled pair exceeds eps(2n + eps)");
    return r;
}

NearWitness correct_near_pair(const AlgebraElement& a, const AlgebraElement& b, const Rational& tol)
{
    require_same_context({&a, &b});
    InverseResult inv = neumann_inverse(a * b, tol);
    AlgebraElement corrected = inv.inverse * a;
    Rational residual = norm((corrected * b).plus_unit(-1));
    return {std::move(corrected), std::move(inv), std::move(residual)};
}

}  // namespace semialg
