#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semialg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when a textual literal (rational, monomial, element, algebra spec) is malformed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exact identity that must hold by construction fails.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);

/// Canonical form: "a" for integers, "a/b" otherwise, always reduced.
std::string to_string(const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& base, std::int64_t exponent);

/// Rounds down to a multiple of 2^-bits.
Rational floor_dyadic(const Rational& r, unsigned bits);

double to_double(const Rational& r);

/// Exact rational k-th root, when x is a perfect k-th power.
bool exact_root(const Rational& x, unsigned k, Rational& root);

}  // namespace semialg
