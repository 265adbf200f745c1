#include "semialg/scenarios.hpp"

#include "semialg/constants.hpp"
#include "semialg/idempotents.hpp"
#include "semialg/literal.hpp"
#include "semialg/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

namespace semialg {

namespace {

using Body = std::function<std::pair<std::string, bool>()>;

class Recorder {
public:
    explicit Recorder(ScenarioReport& report) : report_(report) {}

    void check(std::string name, std::string claimed, std::string anchor, const Body& body)
    {
        std::pair<std::string, bool> outcome;
        try {
            outcome = body();
        } catch (const std::exception& ex) {
            throw ScenarioAborted("check '" + name + "' aborted: " + ex.what());
        }
        report_.checks.push_back({std::move(name), std::move(claimed), std::move(anchor), std::move(outcome.first), outcome.second});
    }

private:
    ScenarioReport& report_;
};

std::string approx(const Rational& r)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
    return buf;
}

std::string show(const Rational& r)
{
    return to_string(r);
}

std::string show(const RationalInterval& r)
{
    return r.is_point() ? to_string(r.lo) : "[" + approx(r.lo) + ", " + approx(r.hi) + "]";
}

std::string bracket(const BoundReport& r)
{
    std::string lo = r.lower ? show(r.lower->value) : "-";
    std::string hi = r.upper ? show(r.upper->value) : "-";
    return "[" + lo + ", " + hi + "]";
}

Rational n3(std::uint64_t n)
{
    return Rational(Integer(n) * Integer(n) * Integer(n));
}

/// Rungs 1..n_max, or the single rung --n.
std::vector<std::uint64_t> rungs(const ScenarioParams& p, std::uint64_t default_max, ScenarioReport& report)
{
    if (p.n) {
        if (*p.n == 0) throw PreconditionError("--n must be at least 1");
        report.params["n"] = std::to_string(*p.n);
        return {*p.n};
    }
    const std::uint64_t n_max = p.n_max.value_or(default_max);
    if (n_max == 0) throw PreconditionError("--n-max must be at least 1");
    report.params["n_max"] = std::to_string(n_max);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(n);
    return out;
}

std::vector<Rational> eps_values(const ScenarioParams& p, ScenarioReport& report)
{
    std::vector<Rational> out;
    if (p.eps) {
        if (*p.eps <= 0) throw PreconditionError("--eps must be positive");
        out.push_back(*p.eps);
    } else {
        out = {Rational(1, 10), Rational(1, 100)};
    }
    std::string listed;
    for (const auto& e : out) listed += (listed.empty() ? "" : ",") + to_string(e);
    report.params["eps"] = listed;
    return out;
}

Element bc(std::uint64_t a, std::uint64_t b)
{
    return Bicyclic{a, b};
}

Cu2 cu2_letter(char kind, std::uint8_t i)
{
    Cu2 s;
    (kind == 'a' ? s.aword : s.bword).push_back(i);
    return s;
}

// ---------------------------------------------------------------------------

void df_ladder(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    for (std::uint64_t n : rungs(params, 64, report)) {
        const ContextPtr ctx = make_context(Engine::bicyclic(), Weight::omega_n(Engine::bicyclic(), n));
        const auto one = AlgebraElement::unit(ctx);
        const auto dq = AlgebraElement::delta(ctx, bc(1, 0));
        const auto dp = AlgebraElement::delta(ctx, bc(0, 1));
        const auto h = dq * dp;
        const std::string tag = "n=" + std::to_string(n) + ": ";
        const char* anchor_eq = "DF ladder: h = delta_q * delta_p is an idempotent equivalent to 1";
        rec.check(tag + "h ~ 1", "h = ab, ba = 1 with a = delta_q, b = delta_p", anchor_eq, [&] {
            return std::pair{"h = " + format_element(h), check_equivalence_witness(h, one, dq, dp)};
        });
        rec.check(tag + "h != 1", "h != delta_e and ||h - 1|| >= 1", "idempotent p != 1 has ||1 - p|| >= 1", [&] {
            const Rational d = norm(h - one);
            return std::pair{"||h - 1|| = " + show(d), h != one && d >= 1};
        });
        rec.check(tag + "||h|| = n", std::to_string(n), "omega_n(s) = n off e", [&] {
            const Rational v = norm(h);
            return std::pair{show(v), v == n};
        });
        rec.check(tag + "C'_DI bracket", "[" + show((Rational(n) / 2)) + ", " + std::to_string(n) + "]",
                  "idempotent norm bound (1/2) inf w off e, witness h", [&] {
                      const BoundReport r = cdi_prime_bounds(h);
                      const bool ok = r.lower && r.upper && r.lower->value.is_point() &&
                                      r.lower->value.lo == (Rational(n) / 2) && r.upper->value == n && r.consistent();
                      return std::pair{bracket(r), ok};
                  });
    }
}

void di_gap(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    for (std::uint64_t n : rungs(params, 4, report)) {
        const Rational level = 86 * n3(n);
        const Engine engine = Engine::bicyclic();
        const ContextPtr ctx = make_context(engine, Weight::constant_off_subset(engine, level, {bc(1, 1)}));
        const std::string tag = "n=" + std::to_string(n) + ": ";
        rec.check(tag + "gap weight is submultiplicative", "pass for word length <= 6",
                  "X = {e, qp} is a sub-semigroup, weight 1 on X and N off X", [&] {
                      const WeightCheckResult wc = weight_check(ctx->weight, engine, 6);
                      return std::pair{std::to_string(wc.pairs_checked) + " pairs, " + (wc.pass ? "pass" : "fail"), wc.pass};
                  });
        rec.check(tag + "C'_DI upper = 1", "1", "gap weight: C'_DI = 1 via the idempotent qp", [&] {
            const BoundReport r = cdi_prime_bounds(AlgebraElement::delta(ctx, bc(1, 1)));
            return std::pair{bracket(r), r.upper->value == 1 && r.consistent()};
        });
        rec.check(tag + "C_DI cube-root lower = n", std::to_string(n), "C_DI >= (N/86)^(1/3), N = 86 n^3", [&] {
            const CubeRootBound b = cdi_lower_offchain(*ctx);
            const bool ok = b.level == level && b.bound.value.is_point() && b.bound.value.lo == n;
            return std::pair{"N = " + show(b.level) + ", bound = " + show(b.bound.value), ok};
        });
        rec.check(tag + "C_DI bracket consistent", "lower <= ||delta_p|| ||delta_q||", "C_DI bracket", [&] {
            BoundReport r = cdi_upper_witness(AlgebraElement::delta(ctx, bc(0, 1)), AlgebraElement::delta(ctx, bc(1, 0)));
            r.lower = cdi_lower_offchain(*ctx).bound;
            return std::pair{bracket(r), r.consistent()};
        });
    }
}

struct CuntzWitnesses {
    AlgebraElement a1, b1, a2, b2;
};

CuntzWitnesses cuntz(const ContextPtr& ctx)
{
    return {AlgebraElement::delta(ctx, cu2_letter('a', 1)), AlgebraElement::delta(ctx, cu2_letter('b', 1)),
            AlgebraElement::delta(ctx, cu2_letter('a', 2)), AlgebraElement::delta(ctx, cu2_letter('b', 2))};
}

void pi_ladder(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    for (std::uint64_t n : rungs(params, 64, report)) {
        const Engine engine = Engine::cu2();
        const ContextPtr ctx = make_context(engine, Weight::omega_n(engine, n), true);
        const CuntzWitnesses w = cuntz(ctx);
        const AlgebraElement p = w.b1 * w.a1;
        const AlgebraElement q = w.b2 * w.a2;
        const Rational nn(Integer(n) * Integer(n));
        const std::string tag = "n=" + std::to_string(n) + ": ";
        rec.check(tag + "four-witness identities, C_PI upper = n^4", show(nn * nn),
                  "a1 b1 = 1 = a2 b2, a1 b2 = 0 = a2 b1 in the # algebra with mu_n", [&] {
                      const BoundReport r = cpi_upper_witness(w.a1, w.b1, w.a2, w.b2);
                      return std::pair{show(r.upper->value), r.upper->value == nn * nn};
                  });
        rec.check(tag + "p = b1a1 and q = b2a2 orthogonal", "pq = 0 = qp", "orthogonal idempotents b1a1, b2a2", [&] {
            return std::pair{"p#q = " + format_element(p * q), check_orthogonal(p, q)};
        });
        rec.check(tag + "C'_PI bracket", "[" + show(nn / 4) + ", " + show(nn) + "]",
                  "C'_PI >= (1/4)(inf mu off e)^2, witness ||p|| ||q||", [&] {
                      const BoundReport r = cpi_prime_bounds(p, q);
                      const bool ok = r.lower->value.is_point() && r.lower->value.lo == nn / 4 && r.upper->value == nn &&
                                      r.consistent();
                      return std::pair{bracket(r), ok};
                  });
        rec.check(tag + "C_DI <= C_PI", "DI bracket below the PI upper bound", "C_DI <= C_PI", [&] {
            BoundReport di = cdi_upper_witness(w.a1, w.b1);
            di.lower = cdi_prime_bounds(p).lower;
            BoundReport pi = cpi_upper_witness(w.a1, w.b1, w.a2, w.b2);
            pi.lower = cpi_lower_offidem(*ctx).bound;
            const bool ok = di_le_pi(di, pi) && di.consistent() && pi.consistent();
            return std::pair{"DI " + bracket(di) + ", PI " + bracket(pi), ok};
        });
    }
}

void pi_gap(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    for (std::uint64_t n : rungs(params, 4, report)) {
        const Rational level = 86 * n3(n);
        const Engine engine = Engine::cu2();
        const std::vector<Element> gens{Cu2::make_zero(), Cu2::projection({1}), Cu2::projection({2})};
        const ContextPtr ctx = make_context(engine, Weight::constant_off_subset(engine, level, gens), true);
        const CuntzWitnesses w = cuntz(ctx);
        const AlgebraElement p = w.b1 * w.a1;
        const AlgebraElement q = w.b2 * w.a2;
        const std::string tag = "n=" + std::to_string(n) + ": ";
        rec.check(tag + "gap quasi-weight is submultiplicative", "pass for word length <= 4",
                  "X = {e, zero, b1a1, b2a2} is a sub-semigroup", [&] {
                      const WeightCheckResult wc = weight_check(ctx->weight, engine, 4);
                      return std::pair{std::to_string(wc.pairs_checked) + " pairs, " + (wc.pass ? "pass" : "fail"), wc.pass};
                  });
        rec.check(tag + "C'_PI upper = 1", "1", "gap quasi-weight: C'_PI = 1 via b1a1, b2a2", [&] {
            const BoundReport r = cpi_prime_bounds(p, q);
            return std::pair{bracket(r), r.upper->value == 1 && r.consistent()};
        });
        rec.check(tag + "C_PI cube-root lower = n", std::to_string(n), "C_PI >= (N/86)^(1/3), N = 86 n^3", [&] {
            const CubeRootBound b = cpi_lower_offidem(*ctx);
            const bool ok = b.level == level && b.bound.value.is_point() && b.bound.value.lo == n;
            return std::pair{"N = " + show(b.level) + ", bound = " + show(b.bound.value), ok};
        });
        rec.check(tag + "C_PI bracket consistent", "lower <= four-witness upper", "C_PI bracket", [&] {
            BoundReport r = cpi_upper_witness(w.a1, w.b1, w.a2, w.b2);
            r.lower = cpi_lower_offidem(*ctx).bound;
            return std::pair{bracket(r), r.consistent()};
        });
    }
}

void renorm_growth(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const Rational lambda = params.lambda.value_or(2);
    const std::uint64_t alpha = params.alpha.value_or(2);
    const std::uint64_t beta = params.beta.value_or(1);
    const std::uint64_t n_max = params.n_max.value_or(64);
    if (lambda < 1) throw PreconditionError("--lambda must be >= 1");
    if (alpha <= beta) throw PreconditionError("renorm-growth needs alpha > beta");
    if (n_max == 0) throw PreconditionError("--n-max must be at least 1");
    report.params["lambda"] = to_string(lambda);
    report.params["alpha"] = std::to_string(alpha);
    report.params["beta"] = std::to_string(beta);
    report.params["n_max"] = std::to_string(n_max);

    const ContextPtr ctx = make_context(Engine::bicyclic(), Weight::geometric(lambda));
    const Bicyclic s{alpha, beta};
    const AlgebraElement ds = AlgebraElement::delta(ctx, s);
    AlgebraElement acc = ds;
    std::vector<Rational> norms;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (n > 1) acc = acc * ds;
        const auto exponent = static_cast<std::int64_t>(n * alpha) - static_cast<std::int64_t>((n - 2) * beta);
        const Rational expected = n == 1 ? pow(lambda, static_cast<std::int64_t>(alpha + beta)) : pow(lambda, exponent);
        rec.check("n=" + std::to_string(n) + ": ||delta_{s^n}||", "lambda^(n alpha - (n-2) beta) = " + approx(expected),
                  "s^n = q^(n alpha - (n-1) beta) p^beta under lambda^length", [&] {
                      const Rational v = norm(acc);
                      norms.push_back(v);
                      const bool ok = acc == AlgebraElement::delta(ctx, bc_power(s, n)) && v == expected;
                      return std::pair{approx(v) + " (" + to_string(bc_power(s, n)) + ")", ok};
                  });
    }
    const Rational rate = pow(lambda, static_cast<std::int64_t>(alpha - beta));
    rec.check("per-step growth rate", "lambda^(alpha - beta) = " + show(rate),
              "growth lower bound ||delta_s||_0 >= lambda^(alpha - beta)", [&] {
                  bool ok = true;
                  for (std::size_t i = 1; i < norms.size(); ++i) ok = ok && norms[i] / norms[i - 1] == rate;
                  return std::pair{show(rate) + " over " + std::to_string(norms.size() > 0 ? norms.size() - 1 : 0) + " steps", ok};
              });
}

std::string sign_key(const std::vector<int>& signs)
{
    std::string k;
    for (int s : signs) k += s == 0 ? '0' : (s > 0 ? '+' : '-');
    return k;
}

template <typename MakeTerm>
std::pair<std::set<std::string>, std::string> brute_force(const ContextPtr& ctx, std::size_t positions, MakeTerm make_term,
                                                          const std::function<bool(const AlgebraElement&)>& characterised,
                                                          std::size_t& disagreements, bool& norms_ok)
{
    std::set<std::string> oracle;
    std::vector<int> signs(positions, -1);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < positions; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        AlgebraElement::Terms terms;
        for (std::size_t i = 0; i < positions; ++i) {
            signs[i] = static_cast<int>(c % 3) - 1;
            c /= 3;
            if (signs[i] != 0) terms.emplace(make_term(i), signs[i]);
        }
        const AlgebraElement f(ctx, std::move(terms));
        const bool idem = is_idempotent(f);
        if (idem != characterised(f)) ++disagreements;
        if (idem) {
            oracle.insert(sign_key(signs));
            if (!f.is_zero() && norm(f) < 1) norms_ok = false;
        }
    }
    return {oracle, std::to_string(total)};
}

template <typename Position>
std::set<std::string> enumeration_keys(const std::vector<AlgebraElement>& all, std::size_t positions, Position position)
{
    std::set<std::string> keys;
    for (const auto& f : all) {
        std::vector<int> signs(positions, 0);
        for (const auto& [s, c] : f.terms()) signs[position(s)] = c > 0 ? 1 : -1;
        keys.insert(sign_key(signs));
    }
    return keys;
}

void lemma_six(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const std::uint64_t k = params.k.value_or(8);
    if (k > 10) throw PreconditionError("--k is capped at 10 (3^k patterns)");
    report.params["k"] = std::to_string(k);
    const ContextPtr ctx = make_context(Engine::chain(), Weight::trivial());
    std::size_t disagreements = 0;
    bool norms_ok = true;
    auto [oracle, total] = brute_force(
        ctx, k, [](std::size_t i) { return Element(Chain{i}); }, chain_idempotent_check, disagreements, norms_ok);
    const std::string expected = std::to_string(std::uint64_t{1} << k);
    rec.check("characterisation = conv oracle", "identical verdicts on all 3^k patterns",
              "chain idempotents: coefficients in {-1,0,1}, partial sums in {0,1}", [&] {
                  return std::pair{total + " patterns, " + std::to_string(disagreements) + " disagreements", disagreements == 0};
              });
    rec.check("idempotent count", expected, "each partial sum admits two next coefficients", [&] {
        return std::pair{std::to_string(oracle.size()), std::to_string(oracle.size()) == expected};
    });
    rec.check("nonzero idempotents have norm >= 1", "||f|| >= 1", "nonzero idempotent norm", [&] {
        return std::pair{norms_ok ? "all >= 1" : "violation", norms_ok};
    });
    if (k >= 1) {
        rec.check("enumeration = oracle set", expected + " elements", "admissible sign patterns", [&] {
            auto keys = enumeration_keys(enumerate_idempotents(ctx, k - 1), k,
                                         [](const Element& s) { return std::get<Chain>(s).index; });
            return std::pair{std::to_string(keys.size()) + " enumerated", keys == oracle};
        });
    }
}

std::vector<std::vector<std::uint8_t>> words_up_to(std::uint64_t depth)
{
    std::vector<std::vector<std::uint8_t>> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == depth) continue;
        for (std::uint8_t letter : {1, 2}) {
            auto w = out[i];
            w.push_back(letter);
            out.push_back(std::move(w));
        }
    }
    return out;
}

void cu2_idem(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const std::uint64_t depth = params.depth.value_or(2);
    if (depth > 2) throw PreconditionError("--depth is capped at 2 (3^7 patterns)");
    report.params["depth"] = std::to_string(depth);
    const ContextPtr ctx = make_context(Engine::cu2(), Weight::trivial(), true);
    const auto words = words_up_to(depth);
    std::map<Element, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(Cu2::projection(words[i]), i);
    std::size_t disagreements = 0;
    bool norms_ok = true;
    auto [oracle, total] = brute_force(
        ctx, words.size(), [&](std::size_t i) { return Element(Cu2::projection(words[i])); }, cu2_idempotent_check,
        disagreements, norms_ok);
    const std::string expected = std::to_string(std::uint64_t{1} << words.size());
    rec.check("characterisation = conv oracle", "identical verdicts on all 3^" + std::to_string(words.size()) + " patterns",
              "# idempotents: coefficients in {-1,0,1}, strict-prefix sums in {0,1}", [&] {
                  return std::pair{total + " patterns, " + std::to_string(disagreements) + " disagreements", disagreements == 0};
              });
    rec.check("idempotent count", expected, "each prefix-tree node admits two coefficients", [&] {
        return std::pair{std::to_string(oracle.size()), std::to_string(oracle.size()) == expected};
    });
    rec.check("nonzero idempotents have norm >= 1", "||f|| >= 1", "nonzero idempotent norm", [&] {
        return std::pair{norms_ok ? "all >= 1" : "violation", norms_ok};
    });
    rec.check("enumeration = oracle set", expected + " elements", "admissible sign patterns", [&] {
        auto keys = enumeration_keys(enumerate_idempotents(ctx, depth), words.size(),
                                     [&](const Element& s) { return index.at(s); });
        return std::pair{std::to_string(keys.size()) + " enumerated", keys == oracle};
    });
}

std::pair<std::string, bool> witness_outcome(const AlgebraElement& p, const AlgebraElement& q, const SimilarityWitness& w,
                                             bool require_exact)
{
    const bool exact = w.certificate.kind == CertificateKind::exact;
    const bool ok = (!require_exact || exact) && w.a * w.b == p && w.b * w.a == q;
    return {std::string(exact ? "exact" : "truncated") + ", ab = p: " + (w.a * w.b == p ? "yes" : "no") +
                ", ba = q: " + (w.b * w.a == q ? "yes" : "no"),
            ok};
}

std::pair<std::string, bool> bound_outcome(const SimilarityWitness& w)
{
    const auto& m = w.certificate.measurements;
    const Rational& product = m.at("||a||*||b||");
    const Rational& bound = m.at("norm_product_bound");
    return {show(product) + " <= " + show(bound), product <= bound && w.certificate.all_bounds_hold()};
}

void zemanek_suite(const ScenarioParams&, ScenarioReport&, Recorder& rec)
{
    const ContextPtr ctx = make_context(Engine::bicyclic(), Weight::trivial());
    const Rational tol(1, 1000000000);
    const AlgebraElement one = AlgebraElement::unit(ctx);
    const AlgebraElement p = AlgebraElement::delta(ctx, bc(1, 1));
    const AlgebraElement r = AlgebraElement::delta(ctx, bc(1, 0)) - AlgebraElement::delta(ctx, bc(2, 1));
    const char* anchor_sim = "close idempotents are similar: a = pc, b = cp";
    const char* anchor_bound = "||a|| ||b|| <= ||p||^2 (||2p-1|| + ||p-q||)^2 / (1 - ||p-q||^2)";

    auto family = [&](const Rational& t) { return p - t * r; };
    for (const Rational& t : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
        const AlgebraElement q = family(t);
        const std::string tag = "t=" + show(t) + ": ";
        rec.check(tag + "q idempotent, ||p-q|| = 2t", show(2 * t), "nilpotent perturbation q = p - t(delta_q - delta_{q^2p})",
                  [&] {
                      const Rational d = norm(p - q);
                      return std::pair{show(d), is_idempotent(q) && d == 2 * t};
                  });
        const SimilarityWitness w = zemanek_witness(p, q, tol);
        rec.check(tag + "exact witnesses", "ab = p, ba = q exactly", anchor_sim, [&] { return witness_outcome(p, q, w, true); });
        rec.check(tag + "norm bound", "exact rational inequality", anchor_bound, [&] { return bound_outcome(w); });
    }

    const AlgebraElement w2 = AlgebraElement::delta(ctx, bc(0, 1)) - AlgebraElement::delta(ctx, bc(1, 2));
    const std::vector<std::pair<std::string, AlgebraElement>> nilpotents{{"delta_q - delta_{q^2p}", r},
                                                                         {"delta_p - delta_{qp^2}", w2}};
    for (const auto& [label, w] : nilpotents) {
        for (const Rational& t : {Rational(1, 8), Rational(1, 5)}) {
            const AlgebraElement q = (one + t * w) * p * (one - t * w);
            const std::string tag = "generated q = (1+tw)p(1-tw), w = " + label + ", t=" + show(t) + ": ";
            rec.check(tag + "witnesses", "ab = p, ba = q", anchor_sim, [&] {
                if (!(w * w).is_zero() || !is_idempotent(q) || norm(p - q) >= 1) {
                    return std::pair{std::string("pair outside the hypotheses"), false};
                }
                return witness_outcome(p, q, zemanek_witness(p, q, tol), false);
            });
            rec.check(tag + "norm bound", "exact rational inequality", anchor_bound,
                      [&] { return bound_outcome(zemanek_witness(p, q, tol)); });
        }
    }

    rec.check("transitivity of similarity", "p = (ac)(db), r = (db)(ac)", "composition of similarity witnesses", [&] {
        const AlgebraElement q1 = family(Rational(1, 4));
        const AlgebraElement q2 = family(Rational(1, 3));
        const SimilarityWitness first = zemanek_witness(p, q1, tol);
        const SimilarityWitness second = zemanek_witness(q1, q2, tol);
        const AlgebraElement ac = first.a * second.a;
        const AlgebraElement db = second.b * first.b;
        const bool ok = ac * db == p && db * ac == q2;
        return std::pair{std::string(ok ? "p = (ac)(db) and r = (db)(ac)" : "composition fails"), ok};
    });
}

// ---------------------------------------------------------------------------

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    std::int64_t between(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
    Rational small_rational()
    {
        Rational r(between(-8, 8), between(1, 8));
        r.canonicalize();
        return r;
    }
    template <typename T>
    const T& pick(const std::vector<T>& v)
    {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 rng_;
};

struct ProjectionInput {
    std::string label;
    AlgebraElement p;
    std::vector<Element> perturbation_support;
};

ProjectionInput projection_input(std::uint64_t trial, Draw& draw)
{
    switch (trial % 4) {
    case 0: {
        const Engine engine = Engine::bicyclic();
        const bool weighted = draw.below(2) == 1;
        const ContextPtr ctx = make_context(engine, weighted ? Weight::omega_n(engine, 2) : Weight::trivial());
        const auto one = AlgebraElement::unit(ctx);
        const auto h = AlgebraElement::delta(ctx, bc(1, 1));
        const auto h2 = AlgebraElement::delta(ctx, bc(2, 2));
        const auto r = AlgebraElement::delta(ctx, bc(1, 0)) - AlgebraElement::delta(ctx, bc(2, 1));
        const std::vector<AlgebraElement> pool{one, h, one - h, h2, h - h2, h - Rational(1, 4) * r};
        return {weighted ? "bc:omega_n=2" : "bc", draw.pick(pool), {bc(0, 0), bc(1, 0), bc(0, 1), bc(1, 1), bc(2, 2)}};
    }
    case 1: {
        const ContextPtr ctx = make_context(Engine::chain(), Weight::trivial());
        std::vector<Element> support;
        for (std::uint64_t i = 0; i <= 4; ++i) support.emplace_back(Chain{i});
        return {"chain", draw.pick(enumerate_idempotents(ctx, 3)), support};
    }
    case 2: {
        const ContextPtr ctx = make_context(Engine::cu2(), Weight::trivial(), true);
        std::vector<Element> support;
        for (const auto& w : words_up_to(2)) support.emplace_back(Cu2::projection(w));
        return {"cu2", draw.pick(enumerate_idempotents(ctx, 1)), support};
    }
    default: {
        const std::uint64_t m = 3 + draw.below(5);
        const ContextPtr ctx = make_context(Engine::cyclic(m), Weight::trivial());
        const auto one = AlgebraElement::unit(ctx);
        AlgebraElement mean(ctx);
        std::vector<Element> support;
        for (std::uint64_t j = 0; j < m; ++j) {
            mean += AlgebraElement::delta(ctx, make_cyclic(j, m), Rational(1, static_cast<long>(m)));
            support.emplace_back(make_cyclic(j, m));
        }
        std::vector<AlgebraElement> pool{one, mean, one - mean};
        if (m % 2 == 0) {
            const auto half = AlgebraElement::delta(ctx, make_cyclic(m / 2, m));
            pool.push_back(Rational(1, 2) * (one + half));
            pool.push_back(Rational(1, 2) * (one - half));
        }
        return {"cyclic:" + std::to_string(m), draw.pick(pool), support};
    }
    }
}

void projection_suite(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const std::uint64_t trials = params.trials.value_or(200);
    report.params["trials"] = std::to_string(trials);
    const Rational tol(1, 1000000000);
    const Rational slack(1, 100000000);
    Draw draw(params.seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        ProjectionInput in = projection_input(i, draw);
        const ContextPtr& ctx = in.p.context();
        AlgebraElement r(ctx);
        const std::uint64_t terms = 1 + draw.below(3);
        for (std::uint64_t j = 0; j < terms; ++j) r += AlgebraElement::delta(ctx, draw.pick(in.perturbation_support), draw.small_rational());
        Rational t(1, 8);
        AlgebraElement a = in.p + t * r;
        for (int halvings = 0; norm(a * a - a) >= Rational(1, 16) && halvings < 64; ++halvings) {
            t /= 2;
            a = in.p + t * r;
        }
        rec.check("trial " + std::to_string(i) + " (" + in.label + ")",
                  "||p^2 - p|| <= 1e-8 and ||p - a|| <= f_||a||(nu) + 1e-8", "almost-idempotent a has a nearby idempotent", [&] {
                      const ProjectionResult res = idempotent_projection(a, tol);
                      const Certificate& c = res.certificate;
                      const Rational& residual = c.residuals.at("||p^2-p||");
                      const bool exact = c.kind == CertificateKind::exact;
                      const Rational& dist = c.measurements.at("||p-a||");
                      const Rational& f_hi = c.measurements.at("f_||a||(nu).hi");
                      const bool ok = (exact ? residual == 0 : residual <= slack) && dist <= f_hi + slack &&
                                      commutator(res.idempotent, a).is_zero() && c.all_bounds_hold();
                      return std::pair{std::string(exact ? "exact" : "truncated N=" + std::to_string(c.series_terms - 1)) +
                                           ", nu=" + approx(c.measurements.at("nu")) + ", residual=" + approx(residual) +
                                           ", ||p-a||=" + approx(dist) + ", f=" + approx(f_hi),
                                       ok};
                  });
    }
    rec.check("exact path on a = (11/10) delta_qp", "p = delta_qp exactly", "series collapses when m^2 = c m", [&] {
        const ContextPtr ctx = make_context(Engine::bicyclic(), Weight::trivial());
        const AlgebraElement h = AlgebraElement::delta(ctx, bc(1, 1));
        const ProjectionResult res = idempotent_projection(Rational(11, 10) * h, tol);
        const bool ok = res.certificate.kind == CertificateKind::exact && res.idempotent == h;
        return std::pair{format_element(res.idempotent), ok};
    });
}

void phi_sentence(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const std::vector<Rational> eps_list = eps_values(params, report);
    for (std::uint64_t n : rungs(params, 8, report)) {
        const ContextPtr ctx = make_context(Engine::bicyclic(), Weight::omega_n(Engine::bicyclic(), n));
        const auto a = AlgebraElement::delta(ctx, bc(0, 1));
        const auto b = AlgebraElement::delta(ctx, bc(1, 0));
        const std::string tag = "n=" + std::to_string(n) + ": ";
        rec.check(tag + "unscaled witness", "phi_n(delta_p, delta_q) = 0", "phi_n vanishes when C_DI <= n^2", [&] {
            const Rational v = phi_n_value(a, b, n);
            return std::pair{show(v), v == 0};
        });
        for (const Rational& eps : eps_list) {
            const std::string etag = tag + "eps=" + show(eps) + ": ";
            rec.check(etag + "rescaled value", "<= eps(2n + eps) = " + show(eps * (2 * n + eps)),
                      "a' = n/(n+eps) a gives phi_n < eps(2n + eps)", [&] {
                          const PhiRescale r = phi_rescale_witness(a, b, n, eps);
                          return std::pair{show(r.value), r.value <= r.bound};
                      });
            rec.check(etag + "Neumann correction", "a'' = (a'b')^{-1} a' has a''b' = 1", "inverse by the Neumann series", [&] {
                const PhiRescale r = phi_rescale_witness(a, b, n, eps);
                const NearWitness c = correct_near_pair(r.a, r.b, Rational(1, 1000000000));
                return std::pair{"residual " + show(c.residual), c.residual == 0};
            });
        }
    }
}

void sr1_cyclic(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const std::uint64_t trials = params.trials.value_or(1000);
    report.params["trials"] = std::to_string(trials);
    Draw draw(params.seed);
    std::size_t invertible = 0, singular = 0, disagreements = 0, verified = 0, constructed = 0, constructed_caught = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t m = 1 + draw.below(64);
        const ContextPtr ctx = make_context(Engine::cyclic(m), Weight::trivial());
        AlgebraElement f(ctx);
        for (std::uint64_t j = 0; j < m; ++j) {
            if (draw.below(2) == 0) f += AlgebraElement::delta(ctx, make_cyclic(j, m), Rational(draw.between(-3, 3)));
        }
        bool forced_singular = false;
        if (i % 5 == 0 && m > 1) {
            f = f * (AlgebraElement::unit(ctx) - AlgebraElement::delta(ctx, make_cyclic(1, m)));
            forced_singular = true;
        } else if (i % 5 == 1 && m % 2 == 0) {
            f = f * AlgebraElement::unit(ctx).plus_unit(0) + f * AlgebraElement::delta(ctx, make_cyclic(m / 2, m));
            forced_singular = true;
        }
        std::optional<AlgebraElement> g;
        try {
            g = cyclic_invert(f);
        } catch (const std::exception& ex) {
            throw ScenarioAborted("check 'exact and DFT verdicts agree' aborted: " + std::string(ex.what()));
        }
        const auto dft = cyclic_dft(f);
        double least = std::numeric_limits<double>::infinity();
        for (const auto& v : dft) least = std::min(least, std::abs(v));
        const bool numeric = least > 1e-9;
        if (g.has_value() != numeric) ++disagreements;
        if (g) {
            ++invertible;
            if (f * *g == AlgebraElement::unit(ctx)) ++verified;
        } else {
            ++singular;
        }
        if (forced_singular) {
            ++constructed;
            if (!g) ++constructed_caught;
        }
    }
    rec.check("exact and DFT verdicts agree", "0 disagreements at threshold 1e-9", "invertibility via the Gelfand transform", [&] {
        return std::pair{std::to_string(trials) + " trials, " + std::to_string(invertible) + " invertible, " +
                             std::to_string(singular) + " singular, " + std::to_string(disagreements) + " disagreements",
                         disagreements == 0};
    });
    rec.check("exact inverses verified", "f * g = delta_0 for every invertible f", "exact circulant solve", [&] {
        return std::pair{std::to_string(verified) + "/" + std::to_string(invertible), verified == invertible};
    });
    rec.check("constructed singular elements detected", "h(1 - g_1) and h(1 + g_{m/2}) are not invertible",
              "symbol vanishes at a character", [&] {
                  return std::pair{std::to_string(constructed_caught) + "/" + std::to_string(constructed),
                                   constructed_caught == constructed};
              });
}

LaurentElement laurent_input(std::uint64_t trial, Draw& draw)
{
    std::map<std::int64_t, Rational> h;
    const std::uint64_t terms = 1 + draw.below(3);
    for (std::uint64_t j = 0; j < terms; ++j) {
        std::int64_t c = draw.between(1, 3) * (draw.below(2) == 0 ? 1 : -1);
        h[draw.between(-2, 2)] += c;
    }
    LaurentElement base = LaurentElement::from(h);
    if (base.is_zero()) base = LaurentElement::from({{0, 1}});
    LaurentElement factor;
    switch (trial % 3) {
    case 0: factor = LaurentElement::from({{0, 1}, {1, -1}}); break;
    case 1: factor = LaurentElement::from({{0, 1}, {1, 1}}); break;
    default: {
        Rational t(draw.between(1, 9), draw.between(1, 9));
        t.canonicalize();
        const Rational c = (1 - t * t) / (1 + t * t);
        factor = LaurentElement::from({{0, 1}, {1, -2 * c}, {2, 1}});
        break;
    }
    }
    return base * factor;
}

void sr1_laurent(const ScenarioParams& params, ScenarioReport& report, Recorder& rec)
{
    const std::uint64_t trials = params.trials.value_or(100);
    report.params["trials"] = std::to_string(trials);
    const std::vector<Rational> eps_list = eps_values(params, report);
    Draw draw(params.seed);
    std::vector<LaurentElement> inputs;
    for (std::uint64_t i = 0; i < trials; ++i) inputs.push_back(laurent_input(i, draw));

    rec.check("inputs have a root on the unit circle", "verdict not invertible for every input",
              "Wiener: invertible iff the symbol has no zero on the circle", [&] {
                  std::size_t flagged = 0;
                  for (const auto& f : inputs) {
                      if (laurent_circle_roots(f).verdict == LaurentVerdict::not_invertible) ++flagged;
                  }
                  return std::pair{std::to_string(flagged) + "/" + std::to_string(inputs.size()), flagged == inputs.size()};
              });
    for (const Rational& eps : eps_list) {
        rec.check("nudge contract, eps=" + show(eps), "g invertible and ||f - g|| <= eps for every input",
                  "invertibles are dense (stable rank one)", [&] {
                      std::size_t good = 0;
                      Rational worst = 0;
                      for (const auto& f : inputs) {
                          const NudgeResult r = sr1_nudge(f, eps);
                          worst = std::max(worst, r.distance);
                          if (r.distance <= eps && r.roots.verdict == LaurentVerdict::invertible) ++good;
                      }
                      return std::pair{std::to_string(good) + "/" + std::to_string(inputs.size()) +
                                           ", max distance " + approx(worst),
                                       good == inputs.size()};
                  });
    }
    if (!inputs.empty()) {
        rec.check("inverse-norm exploration data", "estimates emitted; no bound asserted",
                  "uniform norm control of inverses", [&] {
                      std::string data;
                      bool produced = true;
                      for (int j = 1; j <= 6; ++j) {
                          const Rational eps(1, 1L << j);
                          const NudgeResult r = sr1_nudge(inputs.front(), eps);
                          produced = produced && std::isfinite(r.inverse_norm_lower);
                          char buf[64];
                          std::snprintf(buf, sizeof buf, "%seps=1/%ld: %.6g", data.empty() ? "" : "; ", 1L << j,
                                        r.inverse_norm_lower);
                          data += buf;
                      }
                      return std::pair{data, produced};
                  });
    }
}

// ---------------------------------------------------------------------------

struct ScenarioEntry {
    const char* name;
    std::vector<std::string> accepts;
    void (*run)(const ScenarioParams&, ScenarioReport&, Recorder&);
};

const std::vector<ScenarioEntry>& registry()
{
    static const std::vector<ScenarioEntry> entries{
        {"df-ladder", {"n_max", "n"}, df_ladder},
        {"di-gap", {"n_max", "n"}, di_gap},
        {"pi-ladder", {"n_max", "n"}, pi_ladder},
        {"pi-gap", {"n_max", "n"}, pi_gap},
        {"renorm-growth", {"n_max", "lambda", "alpha", "beta"}, renorm_growth},
        {"lemma-six-bruteforce", {"k"}, lemma_six},
        {"cu2-idem-bruteforce", {"depth"}, cu2_idem},
        {"zemanek-suite", {}, zemanek_suite},
        {"projection-suite", {"trials", "seed"}, projection_suite},
        {"phi-sentence", {"n_max", "n", "eps"}, phi_sentence},
        {"sr1-cyclic", {"trials", "seed"}, sr1_cyclic},
        {"sr1-laurent", {"trials", "seed", "eps"}, sr1_laurent},
    };
    return entries;
}

std::vector<std::string> supplied(const ScenarioParams& p)
{
    std::vector<std::string> out;
    if (p.n_max) out.emplace_back("n_max");
    if (p.n) out.emplace_back("n");
    if (p.lambda) out.emplace_back("lambda");
    if (p.alpha) out.emplace_back("alpha");
    if (p.beta) out.emplace_back("beta");
    if (p.k) out.emplace_back("k");
    if (p.depth) out.emplace_back("depth");
    if (p.trials) out.emplace_back("trials");
    if (p.eps) out.emplace_back("eps");
    if (p.seed != 0) out.emplace_back("seed");
    return out;
}

}  // namespace

bool ScenarioReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::vector<std::string> scenario_names()
{
    std::vector<std::string> names;
    for (const auto& e : registry()) names.emplace_back(e.name);
    return names;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params)
{
    const auto& entries = registry();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const ScenarioEntry& e) { return name == e.name; });
    if (it == entries.end()) throw PreconditionError("unknown scenario '" + name + "'");
    for (const auto& given : supplied(params)) {
        if (std::find(it->accepts.begin(), it->accepts.end(), given) == it->accepts.end()) {
            throw PreconditionError("scenario " + name + " does not take --" + given);
        }
    }
    ScenarioReport report;
    report.scenario = name;
    report.seed = params.seed;
    Recorder rec(report);
    const auto start = std::chrono::steady_clock::now();
    it->run(params, report, rec);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string render_report(const ScenarioReport& report, bool include_timing, int indent)
{
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) j["params"][k] = v;
    j["seed"] = report.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        if (c.anchor.empty()) throw PreconditionError("check '" + c.name + "' has no anchor");
        j["checks"].push_back({{"name", c.name}, {"claimed", c.claimed}, {"anchor", c.anchor}, {"computed", c.computed},
                               {"pass", c.pass}});
    }
    j["pass"] = report.pass();
    if (include_timing) j["elapsed_ms"] = std::round(report.elapsed_ms * 1000) / 1000;
    return j.dump(indent);
}

}  // namespace semialg
