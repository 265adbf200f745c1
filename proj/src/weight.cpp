#include "semialg/weight.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace semialg {

std::set<Element> generated_subsemigroup(const Engine& engine, const std::vector<Element>& generators,
                                         std::size_t cap)
{
    std::set<Element> closure{identity(engine)};
    for (const auto& g : generators) {
        if (engine_of(g) != engine) throw EngineMismatch("subset generator " + to_string(g) + " is not in " + to_string(engine));
        closure.insert(g);
    }
    std::deque<Element> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        Element s = frontier.front();
        frontier.pop_front();
        std::vector<Element> snapshot(closure.begin(), closure.end());
        for (const auto& t : snapshot) {
            for (const Element& r : {multiply(s, t), multiply(t, s)}) {
                if (closure.insert(r).second) {
                    if (closure.size() > cap) {
                        throw PreconditionError("generated sub-semigroup exceeds " + std::to_string(cap) +
                                                " elements; only finite subsets are supported");
                    }
                    frontier.push_back(r);
                }
            }
        }
    }
    return closure;
}

Weight Weight::constant_off_subset(const Engine& engine, Rational level, const std::vector<Element>& generators)
{
    if (level <= 0) throw PreconditionError("weight level must be positive");
    Weight w;
    w.kind_ = WeightKind::constant_off_subset;
    w.level_ = std::move(level);
    w.subset_ = generated_subsemigroup(engine, generators);
    return w;
}

Weight Weight::omega_n(const Engine& engine, Rational n)
{
    std::vector<Element> gens;
    if (engine.has_zero()) gens.emplace_back(Cu2::make_zero());
    return constant_off_subset(engine, std::move(n), gens);
}

Weight Weight::geometric(Rational lambda)
{
    if (lambda < 1) throw PreconditionError("geometric weight parameter must be >= 1");
    Weight w;
    w.kind_ = WeightKind::geometric;
    w.level_ = std::move(lambda);
    return w;
}

Weight Weight::table(std::map<Element, Rational> values, Rational fallback)
{
    if (fallback <= 0) throw PreconditionError("table weight fallback must be positive");
    for (const auto& [s, v] : values) {
        if (v <= 0) throw PreconditionError("table weight values must be positive");
        if (is_identity(s) && v != 1) throw PreconditionError("a weight takes the value 1 at the identity");
    }
    Weight w;
    w.kind_ = WeightKind::table;
    w.table_ = std::move(values);
    w.fallback_ = std::move(fallback);
    return w;
}

Rational Weight::operator()(const Element& s) const
{
    if (is_zero(s)) throw PreconditionError("weights are not evaluated at the zero element");
    switch (kind_) {
    case WeightKind::constant_off_subset: return subset_.count(s) != 0 ? Rational(1) : level_;
    case WeightKind::geometric: return pow(level_, static_cast<std::int64_t>(word_length(s)));
    case WeightKind::table: {
        if (is_identity(s)) return 1;
        auto it = table_.find(s);
        return it == table_.end() ? fallback_ : it->second;
    }
    }
    return 1;
}

Rational Weight::zero_value() const
{
    switch (kind_) {
    case WeightKind::constant_off_subset: return subset_.count(Cu2::make_zero()) != 0 ? Rational(1) : level_;
    case WeightKind::geometric: return 1;
    case WeightKind::table: {
        auto it = table_.find(Cu2::make_zero());
        return it == table_.end() ? fallback_ : it->second;
    }
    }
    return 1;
}

bool Weight::bounded_below_by_one() const
{
    switch (kind_) {
    case WeightKind::constant_off_subset: return level_ >= 1;
    case WeightKind::geometric: return true;
    case WeightKind::table:
        return fallback_ >= 1 &&
               std::all_of(table_.begin(), table_.end(), [](const auto& kv) { return kv.second >= 1; });
    }
    return false;
}

std::string Weight::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case WeightKind::constant_off_subset: {
        os << "subset(";
        bool first = true;
        for (const auto& s : subset_) {
            os << (first ? "" : ",") << to_string(s);
            first = false;
        }
        os << "):N=" << to_string(level_);
        break;
    }
    case WeightKind::geometric: os << "geom=" << to_string(level_); break;
    case WeightKind::table: {
        os << "table(";
        bool first = true;
        for (const auto& [s, v] : table_) {
            os << (first ? "" : ",") << to_string(s) << "=" << to_string(v);
            first = false;
        }
        os << "):default=" << to_string(fallback_);
        break;
    }
    }
    return os.str();
}

Rational weight_eval(const Weight& w, const Element& s)
{
    return w(s);
}

WeightCheckResult weight_check(const Weight& w, const Engine& engine, std::uint64_t length_bound)
{
    auto elements = enumerate_elements(engine, length_bound, engine.has_zero());
    auto value = [&](const Element& s) { return is_zero(s) ? w.zero_value() : w(s); };
    std::vector<Rational> values;
    values.reserve(elements.size());
    for (const auto& s : elements) values.push_back(value(s));

    // Bucket element indices by length so pairs can be visited by total length.
    std::vector<std::vector<std::size_t>> by_length(length_bound + 1);
    for (std::size_t i = 0; i < elements.size(); ++i) by_length[word_length(elements[i])].push_back(i);

    WeightCheckResult result;
    for (std::uint64_t total = 0; total <= 2 * length_bound; ++total) {
        for (std::uint64_t ls = 0; ls <= std::min(total, length_bound); ++ls) {
            std::uint64_t lt = total - ls;
            if (lt > length_bound) continue;
            for (auto i : by_length[ls]) {
                for (auto j : by_length[lt]) {
                    ++result.pairs_checked;
                    Element st = multiply(elements[i], elements[j]);
                    if (value(st) > values[i] * values[j]) {
                        result.pass = false;
                        result.counterexample = std::make_pair(elements[i], elements[j]);
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

}  // namespace semialg
