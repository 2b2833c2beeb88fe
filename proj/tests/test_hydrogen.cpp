#include "hopfwave/hydrogen.hpp"
#include "hopfwave/suites.hpp"

#include <doctest.h>

#include <cmath>

using namespace hopfwave;

TEST_CASE("energies and decay constants") {
    CHECK(hydrogen_energy(HalfInt(1)) == doctest::Approx(-2.0 / 9).epsilon(1e-15));
    CHECK(hydrogen_energy(HalfInt(3)) == doctest::Approx(-2.0 / 25).epsilon(1e-15));
    CHECK(hydrogen_energy(HalfInt(5)) == doctest::Approx(-2.0 / 49).epsilon(1e-15));
    CHECK(hydrogen_decay(HalfInt(1)) == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(hydrogen_decay(HalfInt(5)) == doctest::Approx(2.0 / 7).epsilon(1e-15));

    PhysicalUnits u{0.5, 2.0, 3.0};
    double scale = u.mu * std::pow(u.q, 4) / (u.hbar * u.hbar);
    CHECK(hydrogen_energy(HalfInt(1), u) ==
          doctest::Approx(scale * (-2.0 / 9)).epsilon(1e-14));
}

TEST_CASE("state construction guards") {
    CHECK_THROWS_AS(make_state(HalfInt::whole(1), HalfInt::whole(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_state(HalfInt(3), HalfInt(5)), std::invalid_argument);
    HydrogenState s = make_state(HalfInt(1), HalfInt(1));
    CHECK(s.ket.body == z1());
    CHECK(s.decay == doctest::Approx(2.0 / 3));
}

TEST_CASE("spin one-half state matches its closed form") {
    // e^{-2r/3} sqrt(r) e^{i(phi+psi)/2} cos(theta/2)
    HydrogenState s = make_state(HalfInt(1), HalfInt(1));
    RadialKetField field = s.field();
    EulerPoint p{2.0, 1.1, 0.8, 3.3};
    std::complex<double> expect = std::exp(-2.0 * p.r / 3) * std::sqrt(p.r) *
                                  std::polar(1.0, (p.phi + p.psi) / 2) *
                                  std::cos(p.theta / 2);
    CHECK(std::abs(field.eval(p) - expect) < 1e-14);
}

TEST_CASE("spin three-halves top state has the expected angular profile") {
    // body z1^2 z2b pulls back to r^{3/2} e^{i(3 phi + psi)/2} cos^2(t/2) sin(t/2),
    // and 2 cos^2(t/2) sin(t/2) = sin(t) cos(t/2)
    HydrogenState s = make_state(HalfInt(3), HalfInt(3));
    RadialKetField field = s.field();
    EulerPoint p{3.0, 0.9, 1.4, 2.6};
    std::complex<double> expect = std::exp(-s.decay * p.r) * std::pow(p.r, 1.5) *
                                  std::polar(1.0, 1.5 * p.phi + 0.5 * p.psi) * 0.5 *
                                  std::sin(p.theta) * std::cos(p.theta / 2);
    CHECK(std::abs(field.eval(p) - expect) < 1e-13 * std::abs(expect));
    // Lz carries e^{i j phi}: eigenvalue is m = 3/2, not m/2
    std::complex<double> lz = euler_apply(Gen::Lz, field, p, 1e-5);
    CHECK(std::abs(lz - 1.5 * field.eval(p)) < 1e-10);
}

TEST_CASE("hamiltonian residuals are tiny for true eigenpairs") {
    for (int tj : {1, 3}) {
        HydrogenState s = make_state(HalfInt(tj), HalfInt(tj));
        ResidualReport rep = hamiltonian_residual(s, 40, 2024);
        INFO("j twice = ", tj, " residual ", rep.max_rel_residual);
        CHECK(rep.max_rel_residual < 1e-5);
        CHECK(rep.samples == 40);
        CHECK(int(rep.points.size()) == 40);
    }
}

TEST_CASE("negative controls really fail") {
    HydrogenState s = make_state(HalfInt(1), HalfInt(1));
    ResidualReport good = hamiltonian_residual(s, 30, 77);
    ResidualReport bad = hamiltonian_residual(s, 30, 77, 1e-5, s.energy * 1.01);
    CHECK(bad.max_rel_residual > 1e-3);
    CHECK(bad.max_rel_residual > 1000 * good.max_rel_residual);

    ResidualReport wrong_decay =
        hamiltonian_residual(make_state(HalfInt(5), HalfInt(5)), 30, 78, 1e-5,
                             quiet_nan(), 1.0);
    CHECK(wrong_decay.max_rel_residual > 1e-2);
}

TEST_CASE("radial profile closed-form check") {
    for (int tj : {1, 5}) {
        RadialCheckReport rep = radial_check(HalfInt(tj));
        CHECK(rep.max_rel_err < 1e-10);
    }
    CHECK(radial_check(HalfInt(5), {}, 1.0).max_rel_err > 1e-3);
}

TEST_CASE("psi-independent states reduce to the 3D problem") {
    CHECK(check_psi_independence(60, 300).pass);

    // negative control: on a half-integer state the psi terms must NOT vanish,
    // so the check above cannot pass vacuously
    KetField field(highest_weight(HalfInt(1)).body);
    EulerPoint p{1.5, 1.2, 0.8, 2.9}; // 2cos(theta)-1 well away from 0
    CHECK(std::abs(psi_correction_term(field, p, 1e-3)) > 1e-3);
}

TEST_CASE("descent and radial factor commute; Lz eigenvalues numeric") {
    CHECK(check_descent_commutes_with_radial(40, 301).pass);
    CHECK(check_numeric_lz(40, 302).pass);
}
