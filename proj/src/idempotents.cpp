#include "semialg/idempotents.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace semialg {

namespace {

using Word = std::vector<std::uint8_t>;

bool is_sign(const Rational& c)
{
    return c == 1 || c == -1;
}

bool is_bit(const Rational& c)
{
    return c == 0 || c == 1;
}

/// b-words of length <= depth, by length and then lexicographically.
std::vector<Word> b_words(std::uint64_t depth)
{
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::uint64_t len = 1; len <= depth; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (std::uint8_t letter : {1, 2}) {
                Word w = out[i];
                w.push_back(letter);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

/// The b-word x of a projection x x^*, or nullopt for anything else.
std::optional<Word> projection_word(const Element& s)
{
    const auto* c = std::get_if<Cu2>(&s);
    if (c == nullptr || c->zero) return std::nullopt;
    if (!std::equal(c->bword.begin(), c->bword.end(), c->aword.rbegin(), c->aword.rend())) return std::nullopt;
    return c->bword;
}

}  // namespace

bool chain_idempotent_check(const AlgebraElement& f)
{
    if (f.context()->engine.kind != EngineKind::chain) throw EngineMismatch("chain_idempotent_check needs the chain engine");
    // Keys are ordered by index, so a single sweep gives every partial sum
    // that can change; between support points the sum is constant.
    Rational partial = 0;
    for (const auto& [s, c] : f.terms()) {
        if (!is_sign(c)) return false;
        partial += c;
        if (!is_bit(partial)) return false;
    }
    return true;
}

bool cu2_idempotent_check(const AlgebraElement& f)
{
    const AlgebraContext& ctx = *f.context();
    if (ctx.engine.kind != EngineKind::cu2 || !ctx.quotient_zero) {
        throw PreconditionError("cu2_idempotent_check needs the Cu2 quotient algebra");
    }
    std::map<Word, Rational> coeff;
    for (const auto& [s, c] : f.terms()) {
        auto x = projection_word(s);
        if (!x) throw PreconditionError("support of " + to_string(s) + " is not a projection x x*");
        if (!is_sign(c)) return false;
        coeff.emplace(std::move(*x), c);
    }
    auto prefix_sum = [&](const Word& x) {
        Rational sum = 0;
        for (std::size_t len = 0; len < x.size(); ++len) {
            auto it = coeff.find(Word(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(len)));
            if (it != coeff.end()) sum += it->second;
        }
        return sum;
    };
    // If w is the longest support word strictly below x and x = w c ..., then
    // x and w c have the same support words as strict prefixes; with no such w
    // the sum is 0.  Hence the extensions w b_i of support words exhaust the
    // values the condition has to test.
    for (const auto& [w, c] : coeff) {
        for (std::uint8_t letter : {1, 2}) {
            Word x = w;
            x.push_back(letter);
            if (!is_bit(prefix_sum(x))) return false;
        }
    }
    return true;
}

std::vector<AlgebraElement> enumerate_idempotents(const ContextPtr& ctx, std::uint64_t bound)
{
    std::vector<AlgebraElement> out;
    if (ctx->engine.kind == EngineKind::chain) {
        if (bound > chain_enumeration_cap) {
            throw PreconditionError("chain enumeration bound exceeds the cap of " + std::to_string(chain_enumeration_cap));
        }
        // Running partial sum S in {0, 1}; the next coefficient is 0 or 1 - 2S.
        AlgebraElement::Terms terms;
        std::function<void(std::uint64_t, int)> walk = [&](std::uint64_t n, int partial) {
            if (n > bound) {
                out.emplace_back(ctx, terms);
                return;
            }
            walk(n + 1, partial);
            terms[Chain{n}] = 1 - 2 * partial;
            walk(n + 1, 1 - partial);
            terms.erase(Chain{n});
        };
        walk(0, 0);
        return out;
    }
    if (ctx->engine.kind == EngineKind::cu2) {
        if (!ctx->quotient_zero) throw PreconditionError("Cu2 idempotent enumeration needs the quotient algebra");
        if (bound > cu2_enumeration_cap) {
            throw PreconditionError("Cu2 enumeration bound exceeds the cap of " + std::to_string(cu2_enumeration_cap));
        }
        // Same rule along every branch of the prefix tree: the strict-prefix
        // sum at a word is the running sum of its ancestors.
        const std::vector<Word> words = b_words(bound);
        std::map<Word, int> sums;
        AlgebraElement::Terms terms;
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            if (i == words.size()) {
                out.emplace_back(ctx, terms);
                return;
            }
            const Word& x = words[i];
            int below = 0;
            if (!x.empty()) {
                Word parent(x.begin(), x.end() - 1);
                const Element ps = Cu2::projection(parent);
                auto it = terms.find(ps);
                below = sums.at(parent) + (it == terms.end() ? 0 : static_cast<int>(it->second.get_num().get_si()));
            }
            sums[x] = below;
            walk(i + 1);
            const Element s = Cu2::projection(x);
            terms[s] = 1 - 2 * below;
            walk(i + 1);
            terms.erase(s);
        };
        walk(0);
        return out;
    }
    throw PreconditionError("idempotent enumeration supports the chain and Cu2 engines");
}

bool check_equivalence_witness(const AlgebraElement& p, const AlgebraElement& q, const AlgebraElement& a,
                               const AlgebraElement& b)
{
    return is_idempotent(p) && is_idempotent(q) && a * b == p && b * a == q;
}

bool check_orthogonal(const AlgebraElement& p, const AlgebraElement& q)
{
    return (p * q).is_zero() && (q * p).is_zero();
}

std::optional<std::pair<AlgebraElement, AlgebraElement>> monomial_equivalence_to_unit(const AlgebraElement& p)
{
    if (p.support_size() != 1) return std::nullopt;
    const auto& [s, c] = *p.terms().begin();
    if (c != 1) return std::nullopt;
    const ContextPtr& ctx = p.context();
    if (const auto* b = std::get_if<Bicyclic>(&s); b != nullptr && b->alpha == b->beta) {
        return std::pair{AlgebraElement::delta(ctx, Bicyclic{b->alpha, 0}), AlgebraElement::delta(ctx, Bicyclic{0, b->beta})};
    }
    if (auto x = projection_word(s)) {
        const Cu2 left{false, *x, {}};
        return std::pair{AlgebraElement::delta(ctx, left), AlgebraElement::delta(ctx, cu2_star(left))};
    }
    return std::nullopt;
}

}  // namespace semialg
