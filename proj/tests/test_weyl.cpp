#include "hopfwave/generators.hpp"
#include "hopfwave/rng.hpp"
#include "hopfwave/suites.hpp"

#include <doctest.h>

using namespace hopfwave;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(make_rational(n, d)); }
}

TEST_CASE("canonical commutation in normal form") {
    WeylOperator d1 = WeylOperator::derivative(DerivIndex::var(VarId::Z1));
    WeylOperator m1 = WeylOperator::multiplication(z1());

    // dz1 o z1 = z1 dz1 + Id
    WeylOperator expect = WeylOperator::derivative(DerivIndex::var(VarId::Z1), z1()) +
                          WeylOperator::identity();
    CHECK(compose(d1, m1) == expect);
    // z1 o dz1 is already normal
    CHECK(compose(m1, d1) == WeylOperator::derivative(DerivIndex::var(VarId::Z1), z1()));
    CHECK(bracket(d1, m1) == WeylOperator::identity());
    CHECK(bracket(d1, m1, BracketKind::Anticommutator) ==
          gr(2) * WeylOperator::derivative(DerivIndex::var(VarId::Z1), z1()) +
              WeylOperator::identity());
}

TEST_CASE("generator actions on polynomials") {
    // L- z1 = z2 ; L+ z2 = z1
    CHECK(generator(Gen::Lminus).apply(z1()) == z2());
    CHECK(generator(Gen::Lplus).apply(z2()) == z1());
    // L fixes z1b z2
    CHECK(generator(Gen::L).apply(z1b() * z2()) == z1b() * z2());
    // Delta kills z1 z2b (no matched pair)
    CHECK(generator(Gen::Delta).apply(z1() * z2b()).is_zero());
    // Delta(z1 z1b) = 1
    CHECK(generator(Gen::Delta).apply(z1() * z1b()) == Polynomial(1));
    // Lz on a constant
    CHECK(generator(Gen::Lz).apply(Polynomial(1)).is_zero());

    // L+ (z1b z2) = |z1|^2 - |z2|^2, then L+ of that = -2 z1 z2b
    Polynomial x3 = z1() * z1b() - z2() * z2b();
    CHECK(generator(Gen::Lplus).apply(z1b() * z2()) == x3);
    CHECK(generator(Gen::Lplus).apply(x3) == gr(-2) * (z1() * z2b()));

    // sequential application as the composition oracle: (L+ o L-) z1 = z1
    CHECK(compose(generator(Gen::Lplus), generator(Gen::Lminus)).apply(z1()) == z1());
    CHECK(generator(Gen::Lplus).apply(generator(Gen::Lminus).apply(z1())) == z1());
}

TEST_CASE("composition is faithful on random operators") {
    SplitMix64 rng(31);
    auto random_op = [&] {
        WeylOperator a;
        int n = 1 + int(rng.below(3));
        for (int i = 0; i < n; ++i) {
            DerivIndex d(std::uint32_t(rng.below(3)), std::uint32_t(rng.below(2)),
                         std::uint32_t(rng.below(2)), std::uint32_t(rng.below(3)));
            Polynomial coeff;
            int terms = 1 + int(rng.below(2));
            for (int t = 0; t < terms; ++t) {
                Monomial m(std::uint32_t(rng.below(3)), std::uint32_t(rng.below(3)),
                           std::uint32_t(rng.below(2)), std::uint32_t(rng.below(2)));
                coeff += Polynomial::monomial(m, gr(long(rng.below(5)) - 2));
            }
            a.add_term(d, coeff);
        }
        return a;
    };
    auto random_f = [&] {
        Polynomial f;
        for (int t = 0; t < 4; ++t) {
            Monomial m(std::uint32_t(rng.below(4)), std::uint32_t(rng.below(3)),
                       std::uint32_t(rng.below(3)), std::uint32_t(rng.below(4)));
            f += Polynomial::monomial(m, gr(long(rng.below(7)) - 3));
        }
        return f;
    };
    for (int trial = 0; trial < 80; ++trial) {
        WeylOperator a = random_op(), b = random_op();
        Polynomial f = random_f();
        CHECK(compose(a, b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("catalog brackets frozen from the bracket tables") {
    CHECK(bracket(generator(Gen::Lz), generator(Gen::Lplus)) == generator(Gen::Lplus));
    CHECK(bracket(generator(Gen::Lplus), generator(Gen::Lminus)) ==
          gr(2) * generator(Gen::Lz));
    CHECK(bracket(generator(Gen::Lplus), generator(Gen::J2pm)) == generator(Gen::J1pp));
    CHECK(bracket(generator(Gen::L), generator(Gen::J1pp)) ==
          gr(1, 2) * generator(Gen::J1pp));
}

TEST_CASE("operator equality is normal-form equality") {
    // same operator assembled two ways
    WeylOperator a = compose(generator(Gen::Lx), generator(Gen::Lx)) +
                     compose(generator(Gen::Ly), generator(Gen::Ly)) +
                     compose(generator(Gen::Lz), generator(Gen::Lz));
    CHECK(a == generator(Gen::Casimir));
    WeylOperator b = compose(generator(Gen::Lplus), generator(Gen::Lminus)) +
                     compose(generator(Gen::Lz), generator(Gen::Lz)) - generator(Gen::Lz);
    CHECK(a == b);
}

TEST_CASE("span decomposition recovers exact coefficients") {
    std::vector<WeylOperator> basis = {generator(Gen::L), generator(Gen::Lz),
                                       generator(Gen::Lplus), generator(Gen::Lminus),
                                       WeylOperator::identity()};
    WeylOperator target = gr(3, 2) * generator(Gen::Lz) - gr(2) * generator(Gen::Lplus) +
                          GaussianRational::i() * WeylOperator::identity();
    auto coeffs = decompose_in_span(target, basis);
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == GaussianRational());
    CHECK((*coeffs)[1] == gr(3, 2));
    CHECK((*coeffs)[2] == gr(-2));
    CHECK((*coeffs)[3] == GaussianRational());
    CHECK((*coeffs)[4] == GaussianRational::i());

    CHECK(!decompose_in_span(generator(Gen::Delta), basis).has_value());
}

TEST_CASE("algebraic property sweeps") {
    CHECK(check_compose_faithful(404).pass);
    CHECK(check_first_order_brackets().pass);
    CHECK(check_jacobi(405).pass);
    CHECK(check_grading().pass);
}

TEST_CASE("parity metadata") {
    CHECK(parity(Gen::L) == 0);
    CHECK(parity(Gen::Casimir) == 0);
    CHECK(parity(Gen::J1pp) == 1);
    CHECK(parity(Gen::J2mm) == 1);
    int odd = 0;
    for (Gen g : all_generators()) odd += parity(g);
    CHECK(odd == 8);
}
