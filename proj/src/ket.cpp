#include "hopfwave/ket.hpp"

#include <stdexcept>

namespace hopfwave {

HalfInt parse_half_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("HalfInt: empty input");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long num = std::stol(text.substr(0, slash));
        long den = std::stol(text.substr(slash + 1));
        if (den == 1) return HalfInt(int(2 * num));
        if (den == 2) return HalfInt(int(num));
        throw std::invalid_argument("HalfInt: denominator must be 1 or 2 in '" + text + "'");
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        long whole = std::stol(text.substr(0, dot).empty() ? "0" : text.substr(0, dot));
        bool neg = text[0] == '-';
        if (frac == "5")
            return HalfInt(int(2 * whole + (neg ? -1 : 1)));
        if (frac == "0" || frac == "00")
            return HalfInt(int(2 * whole));
        throw std::invalid_argument("HalfInt: only .0/.5 decimals in '" + text + "'");
    }
    return HalfInt(int(2 * std::stol(text)));
}

KetReport verify_ket(const Ket& k) {
    KetReport rep;
    rep.harmonic = generator(Gen::Delta).apply(k.body).is_zero();
    GaussianRational jv(k.j.value()), mv(k.m.value());
    rep.l_eigen = generator(Gen::L).apply(k.body) == jv * k.body;
    rep.lz_eigen = generator(Gen::Lz).apply(k.body) == mv * k.body;
    return rep;
}

namespace {

void require_valid_j(HalfInt j) {
    if (j.twice < 0) throw std::invalid_argument("j must be >= 0, got " + to_string(j));
}

void check_seed(const Ket& k, Gen annihilator) {
    if (!verify_ket(k).all())
        throw std::logic_error("seed ket failed eigenvalue/harmonicity check");
    if (!generator(annihilator).apply(k.body).is_zero())
        throw std::logic_error("seed ket not annihilated at the end of the multiplet");
}

} // namespace

Ket highest_weight(HalfInt j) {
    require_valid_j(j);
    int n = j.twice / 2; // floor
    Polynomial seed = (z1() * z2b()).pow(unsigned(n));
    if (!j.is_integer()) seed = z1() * seed;
    Ket k{j, j, seed, RadicalScalar::one()};
    check_seed(k, Gen::Lplus);
    return k;
}

Ket lowest_weight(HalfInt j) {
    require_valid_j(j);
    int n = j.twice / 2;
    Polynomial seed = (z1b() * z2()).pow(unsigned(n));
    if (!j.is_integer()) seed = z2() * seed;
    Ket k{j, -j, seed, RadicalScalar::one()};
    check_seed(k, Gen::Lminus);
    return k;
}

std::optional<Ket> ladder(const Ket& k, LadderDirection dir) {
    const bool raising = dir == LadderDirection::Raise;
    Polynomial image = generator(raising ? Gen::Lplus : Gen::Lminus).apply(k.body);
    if ((raising && k.m == k.j) || (!raising && k.m == -k.j)) {
        if (!image.is_zero())
            throw std::logic_error("ladder image at multiplet edge is not zero");
        return std::nullopt;
    }
    // raise: sqrt((j-m)(j+m+1));  lower: sqrt((j+m)(j-m+1))
    Rational a = raising ? (k.j - k.m).value() : (k.j + k.m).value();
    Rational b = raising ? (k.j + k.m).value() + 1 : (k.j - k.m).value() + 1;
    Ket next;
    next.j = k.j;
    next.m = raising ? k.m + HalfInt(2) : k.m - HalfInt(2);
    next.body = std::move(image);
    next.norm = k.norm * RadicalScalar(Rational(1), a * b);
    return next;
}

const Ket& Multiplet::at_m(HalfInt m) const {
    if (m < -j || m > j || (m.twice - j.twice) % 2 != 0)
        throw std::invalid_argument("no ket with m=" + to_string(m) + " in multiplet j=" +
                                    to_string(j));
    return kets[std::size_t((m.twice + j.twice) / 2)];
}

Multiplet make_multiplet(HalfInt j, BuildFrom direction) {
    require_valid_j(j);
    Multiplet mult;
    mult.j = j;
    mult.direction = direction;
    const bool from_bottom = direction == BuildFrom::Bottom;
    Ket cur = from_bottom ? lowest_weight(j) : highest_weight(j);
    mult.kets.push_back(cur);
    for (int step = 0; step < j.twice; ++step) {
        auto next = ladder(cur, from_bottom ? LadderDirection::Raise : LadderDirection::Lower);
        if (!next) throw std::logic_error("multiplet terminated early");
        cur = *next;
        mult.kets.push_back(cur);
    }
    if (!from_bottom) std::reverse(mult.kets.begin(), mult.kets.end());
    return mult;
}

Polynomial half_step(const Ket& k, Gen which) {
    if (!is_j_family(which))
        throw std::invalid_argument(std::string("half_step requires a j operator, got ") +
                                    gen_name(which));
    return generator(which).apply(k.body);
}

} // namespace hopfwave
