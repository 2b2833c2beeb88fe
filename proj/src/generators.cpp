#include "hopfwave/generators.hpp"

#include <map>

namespace hopfwave {

namespace {

GaussianRational half() { return GaussianRational(make_rational(1, 2)); }

WeylOperator euler_term(VarId v, const GaussianRational& c) {
    return WeylOperator::derivative(DerivIndex::var(v),
                                    c * Polynomial::variable(v));
}

WeylOperator build(Gen g) {
    using V = VarId;
    switch (g) {
        case Gen::L:
            return euler_term(V::Z1, half()) + euler_term(V::Z2, half()) +
                   euler_term(V::Z1BAR, half()) + euler_term(V::Z2BAR, half());
        case Gen::Lz:
            return euler_term(V::Z1, half()) + euler_term(V::Z2, -half()) +
                   euler_term(V::Z1BAR, -half()) + euler_term(V::Z2BAR, half());
        case Gen::Lplus: // z1 d/dz2 - z2b d/dz1b
            return WeylOperator::derivative(DerivIndex::var(V::Z2), z1()) -
                   WeylOperator::derivative(DerivIndex::var(V::Z1BAR), z2b());
        case Gen::Lminus: // z2 d/dz1 - z1b d/dz2b
            return WeylOperator::derivative(DerivIndex::var(V::Z1), z2()) -
                   WeylOperator::derivative(DerivIndex::var(V::Z2BAR), z1b());
        case Gen::Lx:
            return half() * (build(Gen::Lplus) + build(Gen::Lminus));
        case Gen::Ly: // (1/2i)(L+ - L-) = (-i/2)(L+ - L-)
            return (GaussianRational(Rational(0), make_rational(-1, 2))) *
                   (build(Gen::Lplus) - build(Gen::Lminus));
        case Gen::Delta:
            return WeylOperator::derivative(DerivIndex(1, 0, 1, 0)) +
                   WeylOperator::derivative(DerivIndex(0, 1, 0, 1));
        case Gen::Casimir: {
            WeylOperator lx = build(Gen::Lx), ly = build(Gen::Ly), lz = build(Gen::Lz);
            return compose(lx, lx) + compose(ly, ly) + compose(lz, lz);
        }
        case Gen::Id:
            return WeylOperator::identity();
        case Gen::J1pp:
            return WeylOperator::multiplication(z1());
        case Gen::J1pm:
            return WeylOperator::multiplication(z1b());
        case Gen::J1mp:
            return WeylOperator::derivative(DerivIndex::var(V::Z2));
        case Gen::J1mm:
            return WeylOperator::derivative(DerivIndex::var(V::Z1));
        case Gen::J2pp:
            return WeylOperator::multiplication(z2b());
        case Gen::J2pm:
            return WeylOperator::multiplication(z2());
        case Gen::J2mp:
            return WeylOperator::derivative(DerivIndex::var(V::Z1BAR));
        case Gen::J2mm:
            return WeylOperator::derivative(DerivIndex::var(V::Z2BAR));
    }
    return WeylOperator::zero();
}

} // namespace

int parity(Gen g) { return is_j_family(g) ? 1 : 0; }

bool is_j_family(Gen g) {
    switch (g) {
        case Gen::J1pp:
        case Gen::J1pm:
        case Gen::J1mp:
        case Gen::J1mm:
        case Gen::J2pp:
        case Gen::J2pm:
        case Gen::J2mp:
        case Gen::J2mm:
            return true;
        default:
            return false;
    }
}

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::L: return "L";
        case Gen::Lz: return "Lz";
        case Gen::Lplus: return "L+";
        case Gen::Lminus: return "L-";
        case Gen::Lx: return "Lx";
        case Gen::Ly: return "Ly";
        case Gen::Delta: return "Delta";
        case Gen::Casimir: return "Casimir";
        case Gen::Id: return "Id";
        case Gen::J1pp: return "j1++";
        case Gen::J1pm: return "j1+-";
        case Gen::J1mp: return "j1-+";
        case Gen::J1mm: return "j1--";
        case Gen::J2pp: return "j2++";
        case Gen::J2pm: return "j2+-";
        case Gen::J2mp: return "j2-+";
        case Gen::J2mm: return "j2--";
    }
    return "?";
}

std::optional<Gen> gen_from_name(const std::string& name) {
    static const std::map<std::string, Gen> table = {
        {"L", Gen::L},         {"Lz", Gen::Lz},       {"L+", Gen::Lplus},
        {"Lplus", Gen::Lplus}, {"L-", Gen::Lminus},   {"Lminus", Gen::Lminus},
        {"Lx", Gen::Lx},       {"Ly", Gen::Ly},       {"Delta", Gen::Delta},
        {"Casimir", Gen::Casimir}, {"Id", Gen::Id},
        {"j1++", Gen::J1pp},   {"j1+-", Gen::J1pm},   {"j1-+", Gen::J1mp},
        {"j1--", Gen::J1mm},   {"j2++", Gen::J2pp},   {"j2+-", Gen::J2pm},
        {"j2-+", Gen::J2mp},   {"j2--", Gen::J2mm},
        {"dz1", Gen::J1mm},    {"dz2", Gen::J1mp},    {"dz1b", Gen::J2mp},
        {"dz2b", Gen::J2mm},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

const WeylOperator& generator(Gen g) {
    static const std::map<Gen, WeylOperator> cache = [] {
        std::map<Gen, WeylOperator> m;
        for (Gen tag : all_generators()) m.emplace(tag, build(tag));
        return m;
    }();
    return cache.at(g);
}

const std::vector<Gen>& all_generators() {
    static const std::vector<Gen> all = {
        Gen::L,    Gen::Lz,   Gen::Lplus, Gen::Lminus, Gen::Lx,   Gen::Ly,
        Gen::Delta, Gen::Casimir, Gen::Id,
        Gen::J1pp, Gen::J1pm, Gen::J1mp,  Gen::J1mm,
        Gen::J2pp, Gen::J2pm, Gen::J2mp,  Gen::J2mm};
    return all;
}

} // namespace hopfwave
