#include "hopfwave/ket.hpp"
#include "hopfwave/suites.hpp"

#include <doctest.h>

using namespace hopfwave;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(make_rational(n, d)); }
Polynomial x3() { return z1() * z1b() - z2() * z2b(); } // |z1|^2 - |z2|^2
}

TEST_CASE("half integers") {
    CHECK(parse_half_int("3/2").twice == 3);
    CHECK(parse_half_int("1.5").twice == 3);
    CHECK(parse_half_int("-2").twice == -4);
    CHECK(parse_half_int("2/1").twice == 4);
    CHECK(to_string(HalfInt(5)) == "5/2");
    CHECK(to_string(HalfInt::whole(3)) == "3");
    CHECK(HalfInt(3).value() == make_rational(3, 2));
    CHECK_THROWS(parse_half_int("2/3"));
}

TEST_CASE("weight vector seeds") {
    CHECK(highest_weight(HalfInt::whole(0)).body == Polynomial(1));
    CHECK(highest_weight(HalfInt::whole(1)).body == z1() * z2b());
    CHECK(highest_weight(HalfInt(3)).body == z1() * z1() * z2b()); // j=3/2
    CHECK(lowest_weight(HalfInt(1)).body == z2());                 // j=1/2
    CHECK(lowest_weight(HalfInt::whole(1)).body == z1b() * z2());
    CHECK(lowest_weight(HalfInt(5)).body == z2() * (z1b() * z2()).pow(2)); // j=5/2
    CHECK_THROWS_AS(highest_weight(HalfInt(-1)), std::invalid_argument);
}

TEST_CASE("ladder steps") {
    // raise |1,-1> = z1b z2: body |z1|^2-|z2|^2, factor sqrt(2)
    Ket bottom = lowest_weight(HalfInt::whole(1));
    auto up = ladder(bottom, LadderDirection::Raise);
    REQUIRE(up.has_value());
    CHECK(up->body == x3());
    CHECK(up->norm == RadicalScalar::sqrt(Rational(2)));
    CHECK(up->m == HalfInt::whole(0));

    // raise |1/2,-1/2> = z2: body z1, factor 1
    auto half_up = ladder(lowest_weight(HalfInt(1)), LadderDirection::Raise);
    REQUIRE(half_up.has_value());
    CHECK(half_up->body == z1());
    CHECK(half_up->norm == RadicalScalar::one());

    // raising the top annihilates
    CHECK(!ladder(highest_weight(HalfInt::whole(1)), LadderDirection::Raise).has_value());
    CHECK(!ladder(lowest_weight(HalfInt(3)), LadderDirection::Lower).has_value());
}

TEST_CASE("multiplet bodies for small j") {
    Multiplet m1 = make_multiplet(HalfInt::whole(1), BuildFrom::Bottom);
    CHECK(m1.at_m(HalfInt::whole(-1)).body == z1b() * z2());
    CHECK(m1.at_m(HalfInt::whole(0)).body == x3());
    CHECK(m1.at_m(HalfInt::whole(1)).body == gr(-2) * (z1() * z2b()));

    Multiplet mhalf = make_multiplet(HalfInt(1));
    CHECK(mhalf.at_m(HalfInt(-1)).body == z2());
    CHECK(mhalf.at_m(HalfInt(1)).body == z1());
    CHECK(mhalf.at_m(HalfInt(-1)).norm == RadicalScalar::one());
    CHECK(mhalf.at_m(HalfInt(1)).norm == RadicalScalar::one());

    Multiplet m0 = make_multiplet(HalfInt::whole(0));
    CHECK(m0.kets.size() == 1);
    CHECK(m0.kets[0].body == Polynomial(1));

    CHECK_THROWS_AS(m1.at_m(HalfInt(1)), std::invalid_argument); // m=1/2 not in j=1
}

TEST_CASE("ket verification and negative control") {
    CHECK(verify_ket(make_multiplet(HalfInt::whole(1)).at_m(HalfInt::whole(1))).all());
    for (const Ket& k : make_multiplet(HalfInt(5)).kets) CHECK(verify_ket(k).all());

    // z1 z1b is an L/Lz eigenvector but NOT harmonic
    Ket bad{HalfInt::whole(1), HalfInt::whole(0), z1() * z1b(), RadicalScalar::one()};
    KetReport rep = verify_ket(bad);
    CHECK(!rep.harmonic);
    CHECK(rep.lz_eigen);
    CHECK(!rep.all());
}

TEST_CASE("half steps between neighboring j levels") {
    Ket half_down = lowest_weight(HalfInt(1)); // z2
    Polynomial img = half_step(half_down, Gen::J1pm);
    CHECK(img == z1b() * z2());
    CHECK(generator(Gen::L).apply(img) == img);          // j = 1
    CHECK(generator(Gen::Lz).apply(img) == gr(-1) * img); // m = -1

    Ket half_up = highest_weight(HalfInt(1)); // z1
    CHECK(half_step(half_up, Gen::J2pp) == z1() * z2b());

    Ket vacuum = highest_weight(HalfInt::whole(0));
    CHECK(half_step(vacuum, Gen::J1pp) == z1());
    CHECK_THROWS_AS(half_step(vacuum, Gen::Lz), std::invalid_argument);
}

TEST_CASE("diagonal maps of the half-step diagram") {
    // alpha = L+ o j1+- sends the spin-1/2 "down" state into <1,0>;
    // beta = L- o j2++ sends the spin-1/2 "up" state there too.
    Polynomial alpha_img = generator(Gen::Lplus).apply(half_step(lowest_weight(HalfInt(1)),
                                                                 Gen::J1pm));
    CHECK(alpha_img == x3());
    CHECK(generator(Gen::L).apply(alpha_img) == alpha_img);
    CHECK(generator(Gen::Lz).apply(alpha_img).is_zero());

    Polynomial beta_img = generator(Gen::Lminus).apply(half_step(highest_weight(HalfInt(1)),
                                                                 Gen::J2pp));
    CHECK(beta_img == -x3());
    CHECK(generator(Gen::L).apply(beta_img) == beta_img);
    CHECK(generator(Gen::Lz).apply(beta_img).is_zero());
}

TEST_CASE("multiplet invariants to j = 6") {
    SuiteOptions opt;
    opt.max_j = HalfInt::whole(6);
    CHECK(check_multiplets(opt.max_j).pass);
    CHECK(check_ladder_roundtrip(opt.max_j).pass);
    CHECK(check_direction_agreement(opt.max_j).pass);
}

TEST_CASE("large j stays exact past the fixed-width range") {
    Multiplet big = make_multiplet(HalfInt::whole(10));
    for (const Ket& k : big.kets) CHECK(verify_ket(k).all());
    // the top coefficient is (2j)! = 20!, far beyond 53-bit floats
    GaussianRational lead = big.at_m(HalfInt::whole(10)).body.coefficient(
        Monomial(10, 0, 0, 10));
    BigInt fact20;
    mpz_fac_ui(fact20.get_mpz_t(), 20);
    CHECK(lead.re == Rational(fact20));
    CHECK(Rational(fact20) > Rational(BigInt("9007199254740992"), BigInt(1)));

    Multiplet half = make_multiplet(HalfInt(19)); // j = 19/2
    for (const Ket& k : half.kets) CHECK(verify_ket(k).all());
}

TEST_CASE("direction agreement has the expected scalar at j=1") {
    Multiplet bottom = make_multiplet(HalfInt::whole(1), BuildFrom::Bottom);
    Multiplet top = make_multiplet(HalfInt::whole(1), BuildFrom::Top);
    // top build: z1 z2b, L-(z1 z2b) = |z2|^2-|z1|^2, then -2 z1b z2
    CHECK(top.at_m(HalfInt::whole(1)).body == z1() * z2b());
    CHECK(top.at_m(HalfInt::whole(0)).body == gr(-1) * x3());
    CHECK(top.at_m(HalfInt::whole(-1)).body == gr(-2) * (z1b() * z2()));
    auto ratio = bottom.at_m(HalfInt::whole(0)).body.proportionality(
        top.at_m(HalfInt::whole(0)).body);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == gr(-1));
}
