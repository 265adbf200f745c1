#include "semialg/rational.hpp"

#include <cctype>

namespace semialg {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    std::string n(num[0] == '+' ? num.substr(1) : num);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(n, 10), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

Rational abs(const Rational& r)
{
    return r < 0 ? Rational(-r) : r;
}

Rational pow(const Rational& base, std::int64_t exponent)
{
    if (exponent < 0) {
        if (base == 0) throw PreconditionError("negative power of zero");
        return pow(Rational(1 / base), -exponent);
    }
    Rational result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    result.canonicalize();
    return result;
}

Rational floor_dyadic(const Rational& r, unsigned bits)
{
    Integer scaled;
    Integer num = r.get_num() << bits;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    Rational out(scaled, Integer(1) << bits);
    out.canonicalize();
    return out;
}

double to_double(const Rational& r)
{
    return r.get_d();
}

bool exact_root(const Rational& x, unsigned k, Rational& root)
{
    if (k == 0) return false;
    if (x < 0 && k % 2 == 0) return false;
    Integer num = x.get_num();
    bool negative = num < 0;
    if (negative) num = -num;
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), x.get_den_mpz_t(), k) == 0) return false;
    root = Rational(negative ? Integer(-rn) : rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace semialg
