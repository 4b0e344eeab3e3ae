#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace symtor {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Error type carrying a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw Error("zero-denominator", "rational with denominator 0");
    return Rational(n, d);
}

/// q^e for integer e of either sign; q must be nonzero when e < 0.
inline Rational rat_pow(const Rational& q, const Integer& e) {
    if (e == 0) return Rational(1);
    Integer n = e < 0 ? Integer(-e) : e;
    if (e < 0 && q == 0) throw Error("zero-inverse", "0 has no negative power");
    Rational base = e < 0 ? Rational(1) / q : q;
    Rational out(1);
    Rational acc = base;
    while (n > 0) {
        if ((n & 1) != 0) out *= acc;
        n >>= 1;
        if (n > 0) acc *= acc;
    }
    return out;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

} // namespace symtor
