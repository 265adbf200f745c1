#pragma once

// Named verification scenarios.  Each scenario runs a family of exact checks
// at finite stages and collects them into a report; the report renders to a
// single JSON object whose content is fully determined by the parameters and
// the seed (only elapsed_ms varies between runs).

#include "semialg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semialg {

struct ScenarioParams {
    std::optional<std::uint64_t> n_max;
    std::optional<std::uint64_t> n;
    std::optional<Rational> lambda;
    std::optional<std::uint64_t> alpha;
    std::optional<std::uint64_t> beta;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> depth;
    std::optional<std::uint64_t> trials;
    std::optional<Rational> eps;
    std::uint64_t seed = 0;
};

struct CheckRecord {
    std::string name;
    std::string claimed;
    std::string anchor;
    std::string computed;
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    /// Effective parameter values, defaults included.
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    double elapsed_ms = 0;

    bool pass() const;
};

/// Raised when a check cannot be evaluated (a certificate or precondition
/// fails inside it); the message names the check.
class ScenarioAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> scenario_names();

/// Throws PreconditionError for an unknown scenario or a parameter the scenario does not take.
ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params);

/// JSON text of the report; refuses (PreconditionError) a check without an anchor.
/// With include_timing = false the elapsed_ms field is omitted.
std::string render_report(const ScenarioReport& report, bool include_timing = true, int indent = 2);

}  // namespace semialg
