#include "semialg/literal.hpp"

#include <cctype>
#include <sstream>

namespace semialg {

namespace {

Element element_power(const Element& s, std::uint64_t k)
{
    Element acc = identity(engine_of(s));
    Element base = s;
    while (k > 0) {
        if (k & 1U) acc = multiply(acc, base);
        k >>= 1U;
        if (k > 0) base = multiply(base, base);
    }
    return acc;
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    bool done()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    /// Next raw character without skipping whitespace.
    char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool accept_word(std::string_view w)
    {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::uint64_t digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected a number");
        const std::string_view d = text_.substr(start, pos_ - start);
        if (d.size() > 18) fail("number too large");
        return std::stoull(std::string(d));
    }
    Rational rational()
    {
        skip_space();
        const std::size_t start = pos_;
        digits();
        if (peek_raw() == '/') {
            ++pos_;
            digits();
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

bool starts_atom(const Engine& engine, char c)
{
    switch (engine.kind) {
    case EngineKind::bicyclic: return c == 'e' || c == 'p' || c == 'q';
    case EngineKind::cu2: return c == 'e' || c == 'a' || c == 'b' || c == 'z';
    case EngineKind::chain: return c == 'e' || c == 's';
    case EngineKind::cyclic: return c == 'e' || c == 'g';
    }
    return false;
}

/// One letter of the monomial grammar, without a trailing power.
Element parse_atom(const Engine& engine, Cursor& in)
{
    const char c = in.peek();
    if (!starts_atom(engine, c)) in.fail("expected a monomial letter for " + to_string(engine));
    if (c == 'z') {
        if (!in.accept_word("zero")) in.fail("expected 'zero'");
        return Cu2::make_zero();
    }
    in.take();
    if (c == 'e') return identity(engine);
    switch (engine.kind) {
    case EngineKind::bicyclic: return c == 'q' ? Bicyclic{1, 0} : Bicyclic{0, 1};
    case EngineKind::cu2: {
        const char idx = in.peek_raw();
        if (idx != '1' && idx != '2') in.fail("Cu2 letters are a1, a2, b1, b2");
        in.take();
        Cu2 s;
        (c == 'a' ? s.aword : s.bword).push_back(static_cast<std::uint8_t>(idx - '0'));
        return s;
    }
    case EngineKind::chain: return Chain{in.digits()};
    case EngineKind::cyclic: {
        const std::uint64_t r = in.digits();
        if (in.peek_raw() == '@') {
            in.take();
            if (in.digits() != engine.modulus) in.fail("residue modulus does not match " + to_string(engine));
        }
        return make_cyclic(r % engine.modulus, engine.modulus);
    }
    }
    in.fail("unsupported engine");
}

std::uint64_t parse_exponent(Cursor& in)
{
    if (in.peek_raw() != '^' && in.peek() != '^') return 1;
    in.expect('^');
    in.skip_space();
    return in.digits();
}

class ExpressionParser {
public:
    ExpressionParser(ContextPtr ctx, std::string_view text) : ctx_(std::move(ctx)), in_(text) {}

    AlgebraElement parse()
    {
        AlgebraElement f = expr();
        if (!in_.done()) in_.fail("unexpected trailing input");
        return f;
    }

private:
    AlgebraElement expr()
    {
        AlgebraElement acc = term();
        for (;;) {
            if (in_.accept('+')) {
                acc += term();
            } else if (in_.accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    bool starts_factor()
    {
        const char c = in_.peek();
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '(' || starts_atom(ctx_->engine, c);
    }

    AlgebraElement term()
    {
        AlgebraElement acc = unary();
        for (;;) {
            if (in_.accept('*')) {
                acc = acc * unary();
            } else if (starts_factor()) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    AlgebraElement unary()
    {
        if (in_.accept('-')) return -unary();
        if (in_.accept('+')) return unary();
        AlgebraElement base = primary();
        const std::uint64_t k = parse_exponent(in_);
        return k == 1 ? base : power(base, k);
    }

    AlgebraElement primary()
    {
        const char c = in_.peek();
        if (c == '(') {
            in_.take();
            AlgebraElement f = expr();
            in_.expect(')');
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            return AlgebraElement::unit(ctx_) * in_.rational();
        }
        Element s = parse_atom(ctx_->engine, in_);
        if (ctx_->quotient_zero && is_zero(s)) in_.fail("the zero element is not a basis vector of the quotient algebra");
        return AlgebraElement::delta(ctx_, s);
    }

    ContextPtr ctx_;
    Cursor in_;
};

std::vector<std::string_view> split_top_level(std::string_view list)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= list.size(); ++i) {
        if (i == list.size() || list[i] == ',') {
            parts.push_back(list.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

Weight parse_weight(const Engine& engine, std::string_view text)
{
    auto value_after = [&](std::string_view key) { return parse_rational(text.substr(key.size())); };
    if (text.empty() || text == "trivial") return Weight::trivial();
    if (text.starts_with("omega_n=")) return Weight::omega_n(engine, value_after("omega_n="));
    if (text.starts_with("mu_n=")) {
        if (!engine.has_zero()) throw ParseError("mu_n is the Cu2 quasi-weight; use omega_n");
        return Weight::omega_n(engine, value_after("mu_n="));
    }
    if (text.starts_with("geom=")) return Weight::geometric(value_after("geom="));
    if (text.starts_with("subset(")) {
        const std::size_t close = text.find(')');
        if (close == std::string_view::npos || text.substr(close, 4) != "):N=") {
            throw ParseError("subset weights read subset(g1,g2,...):N=value");
        }
        std::vector<Element> gens;
        for (auto piece : split_top_level(text.substr(7, close - 7))) gens.push_back(parse_monomial(engine, piece));
        return Weight::constant_off_subset(engine, parse_rational(text.substr(close + 4)), gens);
    }
    throw ParseError("unknown weight '" + std::string(text) + "'");
}

}  // namespace

Element parse_monomial(const Engine& engine, std::string_view text)
{
    Cursor in(text);
    if (in.done()) in.fail("empty monomial");
    Element acc = identity(engine);
    while (!in.done()) {
        Element atom = parse_atom(engine, in);
        acc = multiply(acc, element_power(atom, parse_exponent(in)));
    }
    return acc;
}

ContextPtr parse_algebra_spec(std::string_view text)
{
    std::size_t colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    Engine engine;
    bool quotient = false;
    if (name == "bc") {
        engine = Engine::bicyclic();
    } else if (name == "cu2") {
        engine = Engine::cu2();
        quotient = true;
    } else if (name == "cu2full") {
        engine = Engine::cu2();
    } else if (name == "chain") {
        engine = Engine::chain();
    } else if (name == "cyclic") {
        colon = rest.find(':');
        const std::string_view m = rest.substr(0, colon);
        if (m.empty() || m.find_first_not_of("0123456789") != std::string_view::npos) {
            throw ParseError("cyclic algebras read cyclic:<modulus>");
        }
        engine = Engine::cyclic(std::stoull(std::string(m)));
        rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    } else {
        throw ParseError("unknown algebra '" + std::string(name) + "' (bc, cu2, cu2full, chain, cyclic:m)");
    }
    return make_context(engine, parse_weight(engine, rest), quotient);
}

AlgebraElement parse_expression(const ContextPtr& ctx, std::string_view text)
{
    return ExpressionParser(ctx, text).parse();
}

std::string format_element(const AlgebraElement& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : f.terms()) {
        os << (first ? "" : " + ") << to_string(c) << '*' << to_string(s);
        first = false;
    }
    return os.str();
}

std::string describe(const AlgebraContext& ctx)
{
    std::string out = ctx.engine.kind == EngineKind::cu2 ? (ctx.quotient_zero ? "cu2" : "cu2full") : to_string(ctx.engine);
    const Weight& w = ctx.weight;
    if (w == Weight::trivial()) return out;
    if (w.kind() == WeightKind::constant_off_subset) {
        std::set<Element> plain{identity(ctx.engine)};
        if (ctx.engine.has_zero()) plain.insert(Cu2::make_zero());
        if (w.subset() == plain) return out + (ctx.quotient_zero ? ":mu_n=" : ":omega_n=") + to_string(w.level());
    }
    return out + ":" + w.describe();
}

}  // namespace semialg
