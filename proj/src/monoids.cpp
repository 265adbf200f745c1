#include "semialg/monoids.hpp"

#include <algorithm>
#include <sstream>

namespace semialg {

Engine Engine::cyclic(std::uint64_t m)
{
    if (m == 0) throw PreconditionError("cyclic modulus must be at least 1");
    return {EngineKind::cyclic, m};
}

Cyclic make_cyclic(std::uint64_t residue, std::uint64_t modulus)
{
    if (modulus == 0) throw PreconditionError("cyclic modulus must be at least 1");
    return Cyclic{residue % modulus, modulus};
}

Cu2 Cu2::projection(std::vector<std::uint8_t> x)
{
    Cu2 s;
    s.aword.assign(x.rbegin(), x.rend());
    s.bword = std::move(x);
    return s;
}

Bicyclic bc_mul(const Bicyclic& s, const Bicyclic& t)
{
    if (s.beta >= t.alpha) return {s.alpha, t.beta + s.beta - t.alpha};
    return {s.alpha - s.beta + t.alpha, t.beta};
}

namespace {

Bicyclic bc_power_by_squaring(Bicyclic base, std::uint64_t n)
{
    Bicyclic acc{};
    while (n > 0) {
        if (n & 1U) acc = bc_mul(acc, base);
        base = bc_mul(base, base);
        n >>= 1U;
    }
    return acc;
}

}  // namespace

Bicyclic bc_power(const Bicyclic& s, std::uint64_t n)
{
    if (n == 0) throw PreconditionError("bc_power: exponent must be >= 1");
    Bicyclic closed = s;
    if (s.alpha > s.beta) {
        closed = {n * s.alpha - (n - 1) * s.beta, s.beta};
    } else if (s.alpha < s.beta) {
        closed = {s.alpha, n * s.beta - (n - 1) * s.alpha};
    }
    if (closed != bc_power_by_squaring(s, n)) {
        throw CertificateError("bc_power: closed form disagrees with repeated multiplication");
    }
    return closed;
}

Cu2 cu2_mul(const Cu2& s, const Cu2& t)
{
    if (s.zero || t.zero) return Cu2::make_zero();
    // Cancel the tail of s.aword against the head of t.bword.
    std::size_t i = s.aword.size();
    std::size_t j = 0;
    while (i > 0 && j < t.bword.size()) {
        if (s.aword[i - 1] != t.bword[j]) return Cu2::make_zero();
        --i;
        ++j;
    }
    Cu2 r;
    r.bword = s.bword;
    r.bword.insert(r.bword.end(), t.bword.begin() + static_cast<std::ptrdiff_t>(j), t.bword.end());
    r.aword.assign(s.aword.begin(), s.aword.begin() + static_cast<std::ptrdiff_t>(i));
    r.aword.insert(r.aword.end(), t.aword.begin(), t.aword.end());
    return r;
}

Cu2 cu2_star(const Cu2& s)
{
    if (s.zero) return s;
    Cu2 r;
    r.bword.assign(s.aword.rbegin(), s.aword.rend());
    r.aword.assign(s.bword.rbegin(), s.bword.rend());
    return r;
}

Chain small_mul(const Chain& s, const Chain& t)
{
    return {std::max(s.index, t.index)};
}

Cyclic small_mul(const Cyclic& s, const Cyclic& t)
{
    if (s.modulus != t.modulus) {
        throw EngineMismatch("cyclic elements with moduli " + std::to_string(s.modulus) + " and " +
                             std::to_string(t.modulus));
    }
    return {(s.residue + t.residue) % s.modulus, s.modulus};
}

Element multiply(const Element& s, const Element& t)
{
    if (s.index() != t.index()) throw EngineMismatch("cannot multiply elements of different monoids");
    switch (s.index()) {
    case 0: return bc_mul(std::get<Bicyclic>(s), std::get<Bicyclic>(t));
    case 1: return cu2_mul(std::get<Cu2>(s), std::get<Cu2>(t));
    case 2: return small_mul(std::get<Chain>(s), std::get<Chain>(t));
    default: return small_mul(std::get<Cyclic>(s), std::get<Cyclic>(t));
    }
}

Engine engine_of(const Element& s)
{
    switch (s.index()) {
    case 0: return Engine::bicyclic();
    case 1: return Engine::cu2();
    case 2: return Engine::chain();
    default: return Engine::cyclic(std::get<Cyclic>(s).modulus);
    }
}

Element identity(const Engine& engine)
{
    switch (engine.kind) {
    case EngineKind::bicyclic: return Bicyclic{};
    case EngineKind::cu2: return Cu2{};
    case EngineKind::chain: return Chain{};
    case EngineKind::cyclic: return make_cyclic(0, engine.modulus);
    }
    return Bicyclic{};
}

bool is_zero(const Element& s)
{
    const auto* c = std::get_if<Cu2>(&s);
    return c != nullptr && c->zero;
}

bool is_identity(const Element& s)
{
    return s == identity(engine_of(s));
}

std::uint64_t word_length(const Element& s)
{
    switch (s.index()) {
    case 0: {
        const auto& b = std::get<Bicyclic>(s);
        return b.alpha + b.beta;
    }
    case 1: {
        const auto& c = std::get<Cu2>(s);
        return c.zero ? 0 : c.bword.size() + c.aword.size();
    }
    case 2: return std::get<Chain>(s).index;
    default: {
        const auto& g = std::get<Cyclic>(s);
        return std::min(g.residue, g.modulus - g.residue);
    }
    }
}

bool is_idempotent_element(const Element& s)
{
    switch (s.index()) {
    case 0: {
        const auto& b = std::get<Bicyclic>(s);
        return b.alpha == b.beta;
    }
    case 1: {
        const auto& c = std::get<Cu2>(s);
        if (c.zero || c.bword.size() != c.aword.size()) return false;
        return std::equal(c.bword.begin(), c.bword.end(), c.aword.rbegin());
    }
    case 2: return true;
    default: return std::get<Cyclic>(s).residue == 0;
    }
}

bool is_prefix(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y)
{
    return x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin());
}

namespace {

void all_words(std::size_t length, std::vector<std::vector<std::uint8_t>>& out)
{
    std::vector<std::uint8_t> w(length, 1);
    while (true) {
        out.push_back(w);
        std::size_t k = length;
        while (k > 0 && w[k - 1] == 2) {
            w[k - 1] = 1;
            --k;
        }
        if (k == 0) return;
        w[k - 1] = 2;
    }
}

}  // namespace

std::vector<Element> enumerate_elements(const Engine& engine, std::uint64_t max_length, bool include_zero)
{
    std::vector<Element> out;
    switch (engine.kind) {
    case EngineKind::bicyclic:
        for (std::uint64_t len = 0; len <= max_length; ++len) {
            for (std::uint64_t a = len + 1; a-- > 0;) out.emplace_back(Bicyclic{a, len - a});
        }
        break;
    case EngineKind::cu2:
        if (include_zero) out.emplace_back(Cu2::make_zero());
        for (std::uint64_t len = 0; len <= max_length; ++len) {
            for (std::uint64_t nb = len + 1; nb-- > 0;) {
                std::vector<std::vector<std::uint8_t>> bs, as;
                all_words(nb, bs);
                all_words(len - nb, as);
                for (const auto& b : bs) {
                    for (const auto& a : as) out.emplace_back(Cu2{false, b, a});
                }
            }
        }
        break;
    case EngineKind::chain:
        for (std::uint64_t n = 0; n <= max_length; ++n) out.emplace_back(Chain{n});
        break;
    case EngineKind::cyclic: {
        std::vector<Element> cyc;
        for (std::uint64_t r = 0; r < engine.modulus; ++r) {
            Element g = Cyclic{r, engine.modulus};
            if (word_length(g) <= max_length) cyc.push_back(g);
        }
        std::stable_sort(cyc.begin(), cyc.end(),
                         [](const Element& x, const Element& y) { return word_length(x) < word_length(y); });
        out = std::move(cyc);
        break;
    }
    }
    return out;
}

std::string to_string(const Element& s)
{
    std::ostringstream os;
    switch (s.index()) {
    case 0: {
        const auto& b = std::get<Bicyclic>(s);
        if (b.alpha == 0 && b.beta == 0) return "e";
        os << "q^" << b.alpha << "p^" << b.beta;
        break;
    }
    case 1: {
        const auto& c = std::get<Cu2>(s);
        if (c.zero) return "zero";
        if (c.bword.empty() && c.aword.empty()) return "e";
        bool first = true;
        for (auto l : c.bword) {
            os << (first ? "" : " ") << 'b' << int(l);
            first = false;
        }
        for (auto l : c.aword) {
            os << (first ? "" : " ") << 'a' << int(l);
            first = false;
        }
        break;
    }
    case 2: os << 's' << std::get<Chain>(s).index; break;
    default: {
        const auto& g = std::get<Cyclic>(s);
        os << 'g' << g.residue << '@' << g.modulus;
        break;
    }
    }
    return os.str();
}

std::string to_string(const Engine& e)
{
    switch (e.kind) {
    case EngineKind::bicyclic: return "bc";
    case EngineKind::cu2: return "cu2";
    case EngineKind::chain: return "chain";
    case EngineKind::cyclic: return "cyclic:" + std::to_string(e.modulus);
    }
    return "?";
}

}  // namespace semialg
