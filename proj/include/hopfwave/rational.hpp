#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfwave {

/// Arbitrary-precision rational, canonical form (den > 0, gcd(|num|,den)=1)
/// maintained by GMP after every operation.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n", "-n" or "n/d" (a leading '+' is accepted and dropped).
inline Rational parse_rational(const std::string& raw) {
    const std::string text = (!raw.empty() && raw[0] == '+') ? raw.substr(1) : raw;
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow(const Rational& base, unsigned long exp) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    return Rational(n, d); // canonical whenever base is
}

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace hopfwave
