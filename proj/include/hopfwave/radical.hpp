#pragma once

#include "hopfwave/rational.hpp"

#include <iosfwd>

namespace hopfwave {

/// Exact value q*sqrt(s) with q rational and s a squarefree non-negative
/// integer. Products stay in this form (ladder coefficients only multiply
/// radicals, never add incommensurable ones); the canonical form makes
/// component equality coincide with value equality.
class RadicalScalar {
public:
    RadicalScalar() : q_(0), s_(1) {}
    RadicalScalar(long value) : q_(value), s_(1) {}
    RadicalScalar(const Rational& q) : q_(q), s_(1) {}

    /// q*sqrt(s) for rational s >= 0; canonicalizes on construction.
    RadicalScalar(Rational q, Rational s);

    static RadicalScalar sqrt(const Rational& s) { return RadicalScalar(Rational(1), s); }
    static RadicalScalar one() { return RadicalScalar(1); }

    const Rational& coefficient() const { return q_; }
    const BigInt& radicand() const { return s_; }

    bool is_zero() const { return q_ == 0; }
    bool is_rational() const { return s_ == 1; }

    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    RadicalScalar& operator*=(const RadicalScalar& b) { return *this = *this * b; }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.q_ == b.q_ && a.s_ == b.s_;
    }
    friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

    /// Value with relative error below 2^-precision_bits (exact for zero).
    mpf_class to_float(unsigned precision_bits) const;
    double to_double() const;

private:
    Rational q_;
    BigInt s_; // squarefree, >= 1

    void canonicalize();
};

/// Renders as "1/2*sqrt(3)", "sqrt(2)", "-3", "0".
std::string to_string(const RadicalScalar& a);

/// Parses the rendering above.
RadicalScalar parse_radical(const std::string& text);

std::ostream& operator<<(std::ostream& os, const RadicalScalar& a);

} // namespace hopfwave
