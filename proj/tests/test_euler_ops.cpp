#include "hopfwave/euler_ops.hpp"
#include "hopfwave/suites.hpp"

#include <doctest.h>

#include <cmath>

using namespace hopfwave;

namespace {

// generic field for the simple analytic cases
class LambdaField : public EulerField {
public:
    explicit LambdaField(std::function<QComplex(const QEulerPoint&)> fn) : fn_(std::move(fn)) {}
    QComplex operator()(const QEulerPoint& p) const override { return fn_(p); }

private:
    std::function<QComplex(const QEulerPoint&)> fn_;
};

} // namespace

TEST_CASE("quad chart agrees with the double chart") {
    EulerPoint p{2.3, 1.1, 0.7, 5.4};
    QComplex z1q, z2q;
    quad_euler_to_c2(QEulerPoint(p), z1q, z2q);
    C2Point z = euler_to_c2(p);
    CHECK(std::abs(z1q.to_double() - z.z1) < 1e-14);
    CHECK(std::abs(z2q.to_double() - z.z2) < 1e-14);
}

TEST_CASE("first order euler forms on analytic fields") {
    // L = r d/dr on the field r^2 gives 2 r^2
    LambdaField r2([](const QEulerPoint& p) { return QComplex(p.r * p.r); });
    EulerPoint p{1.7, 1.2, 0.4, 2.0};
    std::complex<double> val = euler_apply(Gen::L, r2, p, 1e-5);
    CHECK(std::abs(val - 2 * p.r * p.r) < 1e-12);

    // constant field: every first-order tag annihilates it up to FD noise
    LambdaField one([](const QEulerPoint&) { return QComplex(__float128(1)); });
    for (Gen tag : {Gen::L, Gen::Lz, Gen::Lplus, Gen::Lminus, Gen::Lx, Gen::Ly, Gen::J1mm,
                    Gen::J1mp, Gen::J2mp, Gen::J2mm})
        CHECK(std::abs(euler_apply(tag, one, p, 1e-5)) < 1e-12);

    // Lz on the spin-1/2 "up" field returns +1/2 times the field
    Ket up = highest_weight(HalfInt(1));
    KetField upf(up.body);
    std::complex<double> lz = euler_apply(Gen::Lz, upf, p, 1e-5);
    CHECK(std::abs(lz - 0.5 * upf.eval(p)) < 1e-10);
}

TEST_CASE("pole and argument guards") {
    LambdaField one([](const QEulerPoint&) { return QComplex(__float128(1)); });
    CHECK_THROWS_AS(euler_apply(Gen::Lplus, one, {1, 1e-5, 0, 0}, 1e-5), std::domain_error);
    CHECK_THROWS_AS(euler_apply(Gen::Lplus, one, {1, 1.0, 0, 0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(euler_apply(Gen::Delta, one, {1, 1.0, 0, 0}, 1e-5), std::invalid_argument);
}

TEST_CASE("casimir euler form returns j(j+1) on ket fields") {
    EulerPoint p{1.3, 1.9, 2.8, 7.1};
    for (int twice_j : {1, 2, 3, 4}) {
        HalfInt j(twice_j);
        for (const Ket& k : make_multiplet(j).kets) {
            KetField field(k.body);
            std::complex<double> got = euler_apply(Gen::Casimir, field, p, 1e-5);
            double jj = j.to_double() * (j.to_double() + 1);
            CHECK(std::abs(got - jj * field.eval(p)) <
                  1e-5 * std::max(1.0, std::abs(field.eval(p))));
        }
    }
}

TEST_CASE("ladder output reproduces the classical zonal shape") {
    // the m = 0 member of the spin-2 multiplet must be proportional to
    // r^2 (3 cos^2 theta - 1) pointwise
    Multiplet m2 = make_multiplet(HalfInt::whole(2));
    KetField field(m2.at_m(HalfInt::whole(0)).body);
    EulerPoint base{1.3, 0.9, 2.1, 4.4};
    std::complex<double> c0 =
        field.eval(base) / (base.r * base.r * (3 * std::pow(std::cos(base.theta), 2) - 1));
    for (double theta : {0.4, 1.1, 1.9, 2.6}) {
        EulerPoint p{2.2, theta, 5.1, 1.0};
        std::complex<double> expect =
            c0 * p.r * p.r * (3 * std::pow(std::cos(p.theta), 2) - 1);
        CHECK(std::abs(field.eval(p) - expect) < 1e-12 * std::abs(c0) * p.r * p.r);
    }
}

TEST_CASE("full consistency sweep stays under tolerance") {
    SweepReport rep = consistency_sweep(HalfInt::whole(3), 200, kDefaultSeed, 1e-5);
    CHECK(rep.tags.size() == 11);
    for (const auto& t : rep.tags) {
        INFO("tag ", gen_name(t.tag), " err ", t.max_rel_err);
        CHECK(t.max_rel_err < 1e-6);
    }
}

TEST_CASE("sweep catches a wrong euler form") {
    // evaluating Lz but comparing against the exact L+ action must blow up
    Multiplet m = make_multiplet(HalfInt(1));
    const Ket& k = m.at_m(HalfInt(1));
    EulerPoint p{1.0, 1.3, 0.9, 2.2};
    KetField field(k.body);
    std::complex<double> lz = euler_apply(Gen::Lz, field, p, 1e-5);
    Polynomial wrong = generator(Gen::Lminus).apply(k.body);
    QComplex w1, w2;
    quad_euler_to_c2(QEulerPoint(p), w1, w2);
    CHECK(std::abs(lz - quad_eval(wrong, w1, w2).to_double()) > 1e-2);
}
