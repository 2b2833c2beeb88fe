#pragma once

#include "hopfwave/gaussian_rational.hpp"
#include "hopfwave/monomial.hpp"

#include <complex>
#include <map>
#include <optional>

namespace hopfwave {

/// Exact polynomial in z1, z2, z1b, z2b with GaussianRational coefficients.
/// z1b/z2b are independent formal symbols; they are bound to the complex
/// conjugates of z1/z2 only at numeric evaluation. No zero coefficients are
/// stored, so map equality is polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;
    Polynomial(long constant) { add_term(Monomial::unit(), GaussianRational(constant)); }
    Polynomial(const GaussianRational& constant) { add_term(Monomial::unit(), constant); }

    static Polynomial variable(VarId v) { return monomial(Monomial::var(v)); }
    static Polynomial monomial(const Monomial& m, const GaussianRational& c = GaussianRational(1)) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const; // 0 for the zero polynomial

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Monomial& m, const GaussianRational& c);

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);

    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    /// Formal partial derivative, the four generators treated as independent.
    Polynomial partial(VarId v) const;

    /// Swaps z <-> zbar and conjugates coefficients; an involution.
    Polynomial conjugated() const;

    /// Numeric value with z1b, z2b bound to conj(z1), conj(z2).
    std::complex<double> eval(std::complex<double> z1, std::complex<double> z2) const;

    /// If q == c*p for an exact scalar c (p nonzero), returns c.
    std::optional<GaussianRational> proportionality(const Polynomial& q) const;

    Polynomial pow(unsigned k) const;

private:
    TermMap terms_;
};

inline Polynomial z1() { return Polynomial::variable(VarId::Z1); }
inline Polynomial z2() { return Polynomial::variable(VarId::Z2); }
inline Polynomial z1b() { return Polynomial::variable(VarId::Z1BAR); }
inline Polynomial z2b() { return Polynomial::variable(VarId::Z2BAR); }

/// Renders "(2)*z1*z2b + (-1+1i)*z1b^2"; the zero polynomial renders "0".
std::string to_string(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace hopfwave
