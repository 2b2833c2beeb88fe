#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace hopfwave {

/// The four polynomial generators. Conjugation pairs Z1<->Z1BAR, Z2<->Z2BAR.
enum class VarId : int { Z1 = 0, Z2 = 1, Z1BAR = 2, Z2BAR = 3 };

constexpr VarId conj(VarId v) {
    switch (v) {
        case VarId::Z1: return VarId::Z1BAR;
        case VarId::Z2: return VarId::Z2BAR;
        case VarId::Z1BAR: return VarId::Z1;
        case VarId::Z2BAR: return VarId::Z2;
    }
    return VarId::Z1;
}

const char* var_name(VarId v);

/// Monomial z1^a z2^b z1b^c z2b^d, ordered graded-lexicographically so that
/// polynomial storage has a canonical term order.
struct Monomial {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    Monomial() = default;
    Monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) : e{a, b, c, d} {}

    static Monomial unit() { return {}; }
    static Monomial var(VarId v) {
        Monomial m;
        m.e[static_cast<int>(v)] = 1;
        return m;
    }

    std::uint32_t operator[](VarId v) const { return e[static_cast<int>(v)]; }
    std::uint32_t total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

    /// z-degree minus zbar-degree; twice the Lz weight is e0-e1-e2+e3.
    int holomorphic_imbalance() const {
        return int(e[0]) + int(e[1]) - int(e[2]) - int(e[3]);
    }

    Monomial conjugated() const { return {e[2], e[3], e[0], e[1]}; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

    // graded lex: total degree first, then lexicographic on (a,b,c,d)
    friend bool operator<(const Monomial& a, const Monomial& b) {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

/// Renders "z1^2*z2b" etc.; the unit monomial renders "1".
std::string to_string(const Monomial& m);

} // namespace hopfwave
