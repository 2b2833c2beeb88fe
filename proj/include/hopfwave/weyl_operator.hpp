#pragma once

#include "hopfwave/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hopfwave {

/// Mixed-partial order d^p/dz1^p d^q/dz2^q d^r/dz1b^r d^s/dz2b^s.
/// Partials commute, so the exponent vector is the whole description.
struct DerivIndex {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    DerivIndex() = default;
    DerivIndex(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::uint32_t s) : e{p, q, r, s} {}

    static DerivIndex none() { return {}; }
    static DerivIndex var(VarId v) {
        DerivIndex d;
        d.e[static_cast<int>(v)] = 1;
        return d;
    }

    std::uint32_t order() const { return e[0] + e[1] + e[2] + e[3]; }

    friend DerivIndex operator+(const DerivIndex& a, const DerivIndex& b) {
        return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
    }
    friend bool operator==(const DerivIndex& a, const DerivIndex& b) { return a.e == b.e; }
    friend bool operator<(const DerivIndex& a, const DerivIndex& b) {
        auto oa = a.order(), ob = b.order();
        if (oa != ob) return oa < ob;
        return a.e < b.e;
    }
};

std::string to_string(const DerivIndex& d);

/// Differential operator with polynomial coefficients, kept in normal form:
/// a sum of terms coeff * d^index with all derivatives to the right of all
/// coefficients. Normal forms are unique, so map equality decides operator
/// equality (the action on polynomials is faithful).
class WeylOperator {
public:
    using TermMap = std::map<DerivIndex, Polynomial>;

    WeylOperator() = default;

    static WeylOperator zero() { return {}; }
    static WeylOperator identity() { return multiplication(Polynomial(1)); }
    static WeylOperator multiplication(const Polynomial& p);
    static WeylOperator derivative(const DerivIndex& d, const Polynomial& coeff = Polynomial(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest derivative order present (0 for multiplication operators).
    std::uint32_t order() const;

    void add_term(const DerivIndex& d, const Polynomial& coeff);

    WeylOperator operator-() const;
    friend WeylOperator operator+(const WeylOperator& a, const WeylOperator& b);
    friend WeylOperator operator-(const WeylOperator& a, const WeylOperator& b);
    friend WeylOperator operator*(const GaussianRational& c, const WeylOperator& a);

    WeylOperator& operator+=(const WeylOperator& b) { return *this = *this + b; }
    WeylOperator& operator-=(const WeylOperator& b) { return *this = *this - b; }

    friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylOperator& a, const WeylOperator& b) { return !(a == b); }

    Polynomial apply(const Polynomial& f) const;

private:
    TermMap terms_;
};

/// Normal form of A∘B: derivatives commute past coefficients via the
/// generalized Leibniz rule, so (A∘B)f = A(Bf) for every polynomial f.
WeylOperator compose(const WeylOperator& A, const WeylOperator& B);

enum class BracketKind { Commutator, Anticommutator };

/// AB - BA (or AB + BA) in normal form.
WeylOperator bracket(const WeylOperator& A, const WeylOperator& B,
                     BracketKind kind = BracketKind::Commutator);

/// Exact coefficients x with target = sum_i x_i basis_i, if they exist.
std::optional<std::vector<GaussianRational>> decompose_in_span(
    const WeylOperator& target, const std::vector<WeylOperator>& basis);

std::string to_string(const WeylOperator& A);
std::ostream& operator<<(std::ostream& os, const WeylOperator& A);

} // namespace hopfwave
