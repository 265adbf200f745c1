#pragma once

// Normal forms and exact multiplication for the monoids underlying the
// weighted l1 algebras: the bicyclic monoid <p,q : pq = e>, the Cuntz
// semigroup Cu2 with an adjoined zero, the max-chain {s_n} and Z/mZ.

#include "semialg/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace semialg {

/// Reduced word q^alpha p^beta.
struct Bicyclic {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;

    auto operator<=>(const Bicyclic&) const = default;
};

/// Reduced word bword . aword of Cu2, or the zero element.
///
/// Letters are stored as 1 or 2, so `bword = {1, 2}` is b1 b2 and
/// `aword = {2}` is a2.  A word never contains an a-letter followed by a
/// b-letter: those cancel (a_i b_i = e) or collapse to zero (a_i b_j, i != j).
struct Cu2 {
    bool zero = false;
    std::vector<std::uint8_t> bword;
    std::vector<std::uint8_t> aword;

    static Cu2 make_zero() { return Cu2{true, {}, {}}; }

    /// The idempotent x x^* for a b-word x.
    static Cu2 projection(std::vector<std::uint8_t> x);

    auto operator<=>(const Cu2&) const = default;
};

/// Element s_index of the chain semigroup with s_n s_m = s_max(n,m).
struct Chain {
    std::uint64_t index = 0;

    auto operator<=>(const Chain&) const = default;
};

/// Residue class of Z/modulus.
struct Cyclic {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;

    auto operator<=>(const Cyclic&) const = default;
};

using Element = std::variant<Bicyclic, Cu2, Chain, Cyclic>;

enum class EngineKind { bicyclic, cu2, chain, cyclic };

struct Engine {
    EngineKind kind = EngineKind::bicyclic;
    std::uint64_t modulus = 0;  // cyclic only

    static Engine bicyclic() { return {EngineKind::bicyclic, 0}; }
    static Engine cu2() { return {EngineKind::cu2, 0}; }
    static Engine chain() { return {EngineKind::chain, 0}; }
    static Engine cyclic(std::uint64_t m);

    bool has_zero() const { return kind == EngineKind::cu2; }

    auto operator<=>(const Engine&) const = default;
};

class EngineMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Cyclic make_cyclic(std::uint64_t residue, std::uint64_t modulus);

Bicyclic bc_mul(const Bicyclic& s, const Bicyclic& t);

/// n-th power by the closed form; n = 0 is rejected.
Bicyclic bc_power(const Bicyclic& s, std::uint64_t n);

Cu2 cu2_mul(const Cu2& s, const Cu2& t);
Cu2 cu2_star(const Cu2& s);

Chain small_mul(const Chain& s, const Chain& t);
Cyclic small_mul(const Cyclic& s, const Cyclic& t);

Element multiply(const Element& s, const Element& t);

Engine engine_of(const Element& s);
Element identity(const Engine& engine);
bool is_zero(const Element& s);
bool is_identity(const Element& s);

/// Word length: alpha + beta on BC, letter count on Cu2 (zero has length 0),
/// the index on the chain, and the cyclic distance min(r, m - r) on Z/m.
std::uint64_t word_length(const Element& s);

/// Idempotent elements of the monoid (q^a p^a, x x^*, every chain element,
/// the cyclic identity); the Cu2 zero is reported as not in I(Cu2).
bool is_idempotent_element(const Element& s);

/// Every element of word length <= max_length, in a stable order: by
/// length, then by the variant ordering.  Includes the Cu2 zero when asked.
std::vector<Element> enumerate_elements(const Engine& engine, std::uint64_t max_length, bool include_zero = false);

/// Prefix order on b-words, x is a prefix of y.
bool is_prefix(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

std::string to_string(const Element& s);
std::string to_string(const Engine& e);

}  // namespace semialg
