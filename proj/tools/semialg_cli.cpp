// Command-line front end: scenario verification plus one-shot algebra,
// idempotent and constant computations.  Every command prints one JSON object.

#include "semialg/constants.hpp"
#include "semialg/idempotents.hpp"
#include "semialg/literal.hpp"
#include "semialg/scenarios.hpp"
#include "semialg/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace semialg;
using Json = nlohmann::ordered_json;

namespace {

Json to_json(const RationalInterval& r)
{
    return {{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}};
}

Json to_json(const Certificate& c)
{
    Json j{{"kind", c.kind == CertificateKind::exact ? "exact" : "truncated"}, {"series_terms", c.series_terms}};
    j["residuals"] = Json::object();
    for (const auto& [k, v] : c.residuals) j["residuals"][k] = to_string(v);
    j["measurements"] = Json::object();
    for (const auto& [k, v] : c.measurements) j["measurements"][k] = to_string(v);
    j["bounds_checked"] = Json::array();
    for (const auto& b : c.bounds_checked) j["bounds_checked"].push_back({{"claim", b.claim}, {"holds", b.holds}});
    return j;
}

Json to_json(const LowerBound& b)
{
    return {{"value", to_json(b.value)}, {"provenance", b.provenance}, {"global", b.global}};
}

Json to_json(const BoundReport& r)
{
    Json j{{"constant", to_string(r.constant)}};
    j["lower"] = r.lower ? to_json(*r.lower) : Json(nullptr);
    if (r.upper) {
        Json w = Json::array();
        for (const auto& f : r.upper->witnesses) w.push_back(format_element(f));
        j["upper"] = {{"value", to_string(r.upper->value)}, {"witnesses", w}};
    } else {
        j["upper"] = nullptr;
    }
    j["consistent"] = r.consistent();
    return j;
}

struct Inputs {
    std::string algebra = "bc";
    std::map<std::string, std::string> exprs;
    std::string tol = "1/1000000000";
    std::optional<std::uint64_t> n;
    std::string eps = "1/10";

    ContextPtr context() const { return parse_algebra_spec(algebra); }
    AlgebraElement element(const ContextPtr& ctx, const std::string& key) const
    {
        auto it = exprs.find(key);
        if (it == exprs.end() || it->second.empty()) throw PreconditionError("missing --" + key);
        return parse_expression(ctx, it->second);
    }
    bool has(const std::string& key) const
    {
        auto it = exprs.find(key);
        return it != exprs.end() && !it->second.empty();
    }
};

void add_algebra(CLI::App* cmd, Inputs& in)
{
    cmd->add_option("--algebra", in.algebra, "algebra spec, e.g. bc:omega_n=4, cu2:mu_n=5, cyclic:7")->capture_default_str();
}

void add_expr(CLI::App* cmd, Inputs& in, const std::string& key, const std::string& help)
{
    cmd->add_option("--" + key, in.exprs[key], help);
}

int emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in weighted l1 semigroup algebras"};
    app.require_subcommand(1);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run a named verification scenario");
    std::string scenario;
    ScenarioParams params;
    std::optional<std::string> lambda_text, eps_text;
    std::string json_path;
    bool no_timing = false;
    verify->add_option("scenario", scenario, "scenario name (see `semialg list`)")->required();
    verify->add_option("--n-max", params.n_max, "last ladder rung");
    verify->add_option("--n", params.n, "single ladder rung");
    verify->add_option("--lambda", lambda_text, "geometric weight base a/b");
    verify->add_option("--alpha", params.alpha, "q-exponent of s");
    verify->add_option("--beta", params.beta, "p-exponent of s");
    verify->add_option("--k", params.k, "number of chain indices");
    verify->add_option("--depth", params.depth, "b-word length bound");
    verify->add_option("--trials", params.trials, "random trials");
    verify->add_option("--seed", params.seed, "64-bit seed");
    verify->add_option("--eps", eps_text, "epsilon a/b");
    verify->add_option("--json", json_path, "also write the report to this file");
    verify->add_flag("--no-timing", no_timing, "omit elapsed_ms");

    app.add_subcommand("list", "list scenario names");

    // alg eval
    Inputs in;
    CLI::App* alg = app.add_subcommand("alg", "evaluate algebra expressions");
    alg->require_subcommand(1);
    CLI::App* eval = alg->add_subcommand("eval", "normal form and norm of an expression");
    add_algebra(eval, in);
    add_expr(eval, in, "expr", "expression, e.g. '(e - qp)^2'");
    eval->get_option("--expr")->required();

    // idem
    CLI::App* idem = app.add_subcommand("idem", "idempotent tools");
    idem->require_subcommand(1);
    CLI::App* check = idem->add_subcommand("check", "is the expression idempotent");
    add_algebra(check, in);
    add_expr(check, in, "expr", "candidate idempotent");
    CLI::App* project = idem->add_subcommand("project", "nearby idempotent of an almost-idempotent");
    add_algebra(project, in);
    add_expr(project, in, "expr", "a with ||a^2 - a|| < 1/4");
    project->add_option("--tol", in.tol, "truncation tolerance a/b")->capture_default_str();
    CLI::App* equiv = idem->add_subcommand("equiv", "similarity witnesses for close idempotents");
    add_algebra(equiv, in);
    add_expr(equiv, in, "p", "first idempotent");
    add_expr(equiv, in, "q", "second idempotent");
    equiv->add_option("--tol", in.tol, "truncation tolerance a/b")->capture_default_str();

    // constants
    CLI::App* constants = app.add_subcommand("constants", "brackets for C_DI, C'_DI, C_PI, C'_PI and phi_n");
    std::string which;
    constants->add_option("which", which, "cdi | cdi-prime | cdi-lower | cpi | cpi-prime | cpi-lower | phi")
        ->required()
        ->check(CLI::IsMember({"cdi", "cdi-prime", "cdi-lower", "cpi", "cpi-prime", "cpi-lower", "phi"}));
    add_algebra(constants, in);
    for (const char* key : {"a", "b", "c", "d", "p", "q"}) add_expr(constants, in, key, std::string("element ") + key);
    constants->add_option("--n", in.n, "phi_n level");
    constants->add_option("--eps", in.eps, "rescaling epsilon for phi")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list")) {
            for (const auto& name : scenario_names()) std::cout << name << '\n';
            return 0;
        }
        if (verify->parsed()) {
            if (lambda_text) params.lambda = parse_rational(*lambda_text);
            if (eps_text) params.eps = parse_rational(*eps_text);
            const ScenarioReport report = run_scenario(scenario, params);
            const std::string text = render_report(report, !no_timing);
            std::cout << text << '\n';
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw PreconditionError("cannot write " + json_path);
                out << text << '\n';
            }
            return report.pass() ? 0 : 1;
        }
        if (eval->parsed()) {
            const ContextPtr ctx = in.context();
            const AlgebraElement f = in.element(ctx, "expr");
            return emit({{"algebra", describe(*ctx)}, {"value", format_element(f)}, {"norm", to_string(norm(f))}});
        }
        if (check->parsed()) {
            const ContextPtr ctx = in.context();
            const AlgebraElement f = in.element(ctx, "expr");
            Json j{{"algebra", describe(*ctx)}, {"value", format_element(f)}, {"idempotent", is_idempotent(f)}};
            if (ctx->engine.kind == EngineKind::chain) j["characterisation"] = chain_idempotent_check(f);
            if (ctx->engine.kind == EngineKind::cu2 && ctx->quotient_zero) {
                try {
                    j["characterisation"] = cu2_idempotent_check(f);
                } catch (const PreconditionError& ex) {
                    j["characterisation"] = ex.what();
                }
            }
            return emit(j);
        }
        if (project->parsed()) {
            const ContextPtr ctx = in.context();
            const ProjectionResult r = idempotent_projection(in.element(ctx, "expr"), parse_rational(in.tol));
            return emit({{"algebra", describe(*ctx)}, {"idempotent", format_element(r.idempotent)},
                         {"certificate", to_json(r.certificate)}});
        }
        if (equiv->parsed()) {
            const ContextPtr ctx = in.context();
            const SimilarityWitness w = zemanek_witness(in.element(ctx, "p"), in.element(ctx, "q"), parse_rational(in.tol));
            return emit({{"algebra", describe(*ctx)}, {"a", format_element(w.a)}, {"b", format_element(w.b)},
                         {"certificate", to_json(w.certificate)}});
        }
        if (constants->parsed()) {
            const ContextPtr ctx = in.context();
            Json j{{"algebra", describe(*ctx)}, {"which", which}};
            auto witness = [&](const std::string& a, const std::string& b)
                -> std::optional<std::pair<AlgebraElement, AlgebraElement>> {
                if (!in.has(a) && !in.has(b)) return std::nullopt;
                return std::pair{in.element(ctx, a), in.element(ctx, b)};
            };
            if (which == "cdi") {
                j["report"] = to_json(cdi_upper_witness(in.element(ctx, "a"), in.element(ctx, "b")));
            } else if (which == "cdi-prime") {
                j["report"] = to_json(cdi_prime_bounds(in.element(ctx, "p"), witness("a", "b")));
            } else if (which == "cdi-lower") {
                const CubeRootBound b = cdi_lower_offchain(*ctx);
                j["level"] = to_string(b.level);
                j["lower"] = to_json(b.bound);
            } else if (which == "cpi") {
                j["report"] = to_json(cpi_upper_witness(in.element(ctx, "a"), in.element(ctx, "b"), in.element(ctx, "c"),
                                                        in.element(ctx, "d")));
            } else if (which == "cpi-prime") {
                j["report"] = to_json(cpi_prime_bounds(in.element(ctx, "p"), in.element(ctx, "q")));
            } else if (which == "cpi-lower") {
                const CubeRootBound b = cpi_lower_offidem(*ctx);
                j["level"] = to_string(b.level);
                j["lower"] = to_json(b.bound);
            } else {
                if (!in.n) throw PreconditionError("phi needs --n");
                const AlgebraElement a = in.element(ctx, "a");
                const AlgebraElement b = in.element(ctx, "b");
                j["n"] = *in.n;
                j["value"] = to_string(phi_n_value(a, b, *in.n));
                const PhiRescale r = phi_rescale_witness(a, b, *in.n, parse_rational(in.eps));
                j["rescaled"] = {{"eps", in.eps}, {"a", format_element(r.a)}, {"b", format_element(r.b)},
                                 {"value", to_string(r.value)}, {"bound", to_string(r.bound)}};
            }
            return emit(j);
        }
    } catch (const std::exception& ex) {
        std::cerr << "semialg: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
