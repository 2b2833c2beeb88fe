#include "hopfwave/polynomial.hpp"
#include "hopfwave/rng.hpp"

#include <doctest.h>

using namespace hopfwave;

namespace {

Polynomial random_poly(SplitMix64& rng, int max_terms = 5, unsigned max_exp = 3) {
    static const GaussianRational coeffs[] = {
        GaussianRational(1), GaussianRational(-1), GaussianRational(2),
        {make_rational(1, 2), make_rational(0, 1)},
        {make_rational(0, 1), make_rational(1, 1)},
        {make_rational(-2, 3), make_rational(1, 2)},
    };
    Polynomial p;
    int n = 1 + int(rng.below(std::uint64_t(max_terms)));
    for (int i = 0; i < n; ++i) {
        Monomial m(std::uint32_t(rng.below(max_exp + 1)), std::uint32_t(rng.below(max_exp + 1)),
                   std::uint32_t(rng.below(max_exp + 1)), std::uint32_t(rng.below(max_exp + 1)));
        p += Polynomial::monomial(m, coeffs[rng.below(std::size(coeffs))]);
    }
    return p;
}

} // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK(z1() + z1() == GaussianRational(2) * z1());
    CHECK(z1() * z2b() == Polynomial::monomial(Monomial(1, 0, 0, 1)));

    // (z1 z2b + z1b z2)^2 expands to z1^2 z2b^2 + 2 z1 z1b z2 z2b + z1b^2 z2^2
    Polynomial s = z1() * z2b() + z1b() * z2();
    Polynomial expect = Polynomial::monomial(Monomial(2, 0, 0, 2)) +
                        Polynomial::monomial(Monomial(1, 1, 1, 1), GaussianRational(2)) +
                        Polynomial::monomial(Monomial(0, 2, 2, 0));
    CHECK(s * s == expect);

    CHECK((z1() - z1()).is_zero());
    CHECK(to_string(Polynomial()) == "0");
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("formal partial derivatives") {
    Polynomial p = Polynomial::monomial(Monomial(2, 0, 0, 1)); // z1^2 z2b
    CHECK(p.partial(VarId::Z1) ==
          GaussianRational(2) * Polynomial::monomial(Monomial(1, 0, 0, 1)));
    CHECK((z1() * z2b()).partial(VarId::Z1BAR).is_zero());
    Polynomial cube = (z1b() * z2()).pow(3);
    CHECK(cube.partial(VarId::Z2) ==
          GaussianRational(3) * Polynomial::monomial(Monomial(0, 2, 3, 0)));
}

TEST_CASE("Leibniz rule on random pairs") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        for (VarId v : {VarId::Z1, VarId::Z2, VarId::Z1BAR, VarId::Z2BAR})
            CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
    }
}

TEST_CASE("conjugation is a ring involution") {
    CHECK((z1() * z2b()).conjugated() == z1b() * z2());
    CHECK((GaussianRational::i() * z1()).conjugated() ==
          GaussianRational{Rational(0), Rational(-1)} * z1b());
    SplitMix64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        CHECK(p.conjugated().conjugated() == p);
        CHECK((p * q).conjugated() == p.conjugated() * q.conjugated());
    }
}

TEST_CASE("numeric evaluation") {
    using namespace std::complex_literals;
    Polynomial p = z1() * z2b();
    CHECK(std::abs(p.eval(1.0, 1i) - (-1i)) < 1e-15);

    Polynomial norm = z1() * z1b() + z2() * z2b();
    CHECK(std::abs(norm.eval(0.6, 0.8) - 1.0) < 1e-15);

    CHECK(std::abs((z1b() * z2()).eval(1.0 + 1i, 2.0) - (2.0 - 2i)) < 1e-14);
}

TEST_CASE("evaluation is a ring homomorphism within float tolerance") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        std::complex<double> v1{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::complex<double> v2{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        auto scale = std::max({1.0, std::abs(p.eval(v1, v2)), std::abs(q.eval(v1, v2))});
        CHECK(std::abs((p + q).eval(v1, v2) - (p.eval(v1, v2) + q.eval(v1, v2))) <
              1e-12 * scale);
        CHECK(std::abs((p * q).eval(v1, v2) - p.eval(v1, v2) * q.eval(v1, v2)) <
              1e-12 * scale * scale);
    }
}

TEST_CASE("canonical order and rendering") {
    Polynomial p = GaussianRational(2) * (z1() * z2b()) +
                   GaussianRational{Rational(-1), Rational(1)} * (z1b() * z1b());
    CHECK(to_string(p) == "(2)*z1*z2b + (-1+1i)*z1b^2");
    CHECK(p.coefficient(Monomial(1, 0, 0, 1)) == GaussianRational(2));

    // proportionality detection
    auto ratio = p.proportionality(GaussianRational{Rational(0), Rational(3)} * p);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == GaussianRational{Rational(0), Rational(3)});
    CHECK(!p.proportionality(z1()).has_value());
}
