#include "hopfwave/polynomial.hpp"

#include <ostream>

namespace hopfwave {

const char* var_name(VarId v) {
    switch (v) {
        case VarId::Z1: return "z1";
        case VarId::Z2: return "z2";
        case VarId::Z1BAR: return "z1b";
        case VarId::Z2BAR: return "z2b";
    }
    return "?";
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (int v = 0; v < 4; ++v) {
        if (m.e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(static_cast<VarId>(v));
        if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
    return out.empty() ? "1" : out;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::partial(VarId v) const {
    int idx = static_cast<int>(v);
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.e[idx] == 0) continue;
        Monomial d = m;
        d.e[idx] -= 1;
        r.add_term(d, GaussianRational(long(m.e[idx])) * c);
    }
    return r;
}

Polynomial Polynomial::conjugated() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conjugated(), c.conj());
    return r;
}

std::complex<double> Polynomial::eval(std::complex<double> v1, std::complex<double> v2) const {
    std::complex<double> acc = 0;
    std::complex<double> v1b = std::conj(v1), v2b = std::conj(v2);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::uint32_t k = 0; k < m.e[0]; ++k) t *= v1;
        for (std::uint32_t k = 0; k < m.e[1]; ++k) t *= v2;
        for (std::uint32_t k = 0; k < m.e[2]; ++k) t *= v1b;
        for (std::uint32_t k = 0; k < m.e[3]; ++k) t *= v2b;
        acc += t;
    }
    return acc;
}

std::optional<GaussianRational> Polynomial::proportionality(const Polynomial& q) const {
    if (is_zero()) return std::nullopt;
    if (q.is_zero()) return GaussianRational();
    const auto& [lead_m, lead_c] = *terms_.begin();
    GaussianRational ratio = q.coefficient(lead_m) / lead_c;
    if (q == ratio * (*this)) return ratio;
    return std::nullopt;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // leading (highest grlex) term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (m.total_degree() > 0) out += "*" + to_string(m);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

} // namespace hopfwave
