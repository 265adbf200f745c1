#pragma once

#include "semialg/monoids.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semialg {

enum class WeightKind { constant_off_subset, geometric, table };

/// A positive rational weight on one of the supported monoids.
///
/// * constant_off_subset: 1 on the sub-semigroup X generated by e and the
///   supplied generators (computed eagerly, X must be finite), `level`
///   everywhere else.  omega_n is the case X = {e} (X = {e, zero} on Cu2).
/// * geometric: lambda^word_length(s), with rational lambda >= 1.
/// * table: explicit values, `fallback` for unlisted elements and e fixed at 1.
///
/// Weights are evaluated off the Cu2 zero.  The full (non-quotient) Cu2
/// algebra needs a value at the zero too; `zero_value` supplies it.
class Weight {
public:
    static Weight constant_off_subset(const Engine& engine, Rational level, const std::vector<Element>& generators);
    static Weight omega_n(const Engine& engine, Rational n);
    static Weight geometric(Rational lambda);
    static Weight table(std::map<Element, Rational> values, Rational fallback = 1);
    static Weight trivial() { return geometric(1); }

    WeightKind kind() const { return kind_; }
    const Rational& level() const { return level_; }
    const Rational& lambda() const { return level_; }
    const std::set<Element>& subset() const { return subset_; }
    const std::map<Element, Rational>& entries() const { return table_; }
    const Rational& fallback() const { return fallback_; }

    /// Rejects the Cu2 zero.
    Rational operator()(const Element& s) const;
    Rational zero_value() const;

    /// True when every value is >= 1, decided from the weight's parameters.
    bool bounded_below_by_one() const;

    std::string describe() const;

    bool operator==(const Weight&) const = default;

private:
    WeightKind kind_ = WeightKind::geometric;
    Rational level_ = 1;
    Rational fallback_ = 1;
    std::set<Element> subset_;
    std::map<Element, Rational> table_;
};

Rational weight_eval(const Weight& w, const Element& s);

struct WeightCheckResult {
    bool pass = true;
    std::optional<std::pair<Element, Element>> counterexample;
    std::size_t pairs_checked = 0;
};

/// Exhaustive submultiplicativity check over all pairs of elements of word
/// length <= length_bound.  Pairs are visited by increasing total length,
/// so a reported counterexample is a shortest one.  On Cu2 the zero is
/// included, with `zero_value` standing in for w(zero).
WeightCheckResult weight_check(const Weight& w, const Engine& engine, std::uint64_t length_bound);

/// Closure of e and `generators` under multiplication; throws if it exceeds `cap` elements.
std::set<Element> generated_subsemigroup(const Engine& engine, const std::vector<Element>& generators,
                                         std::size_t cap = 4096);

}  // namespace semialg
