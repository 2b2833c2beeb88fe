#pragma once

#include "hopfwave/euler_ops.hpp"

#include <vector>

namespace hopfwave {

/// hbar, reduced mass and charge; defaults are natural units.
struct PhysicalUnits {
    double hbar = 1, mu = 1, q = 1;
};

/// Stationary eigenfunction of the four-variable hydrogen equation:
/// Psi_{j,m} = e^{-a_j r} * ket body under the covering chart, with
/// a_j = mu q^2 / ((j+1) hbar^2) and E = -mu q^4 / (2 hbar^2 (j+1)^2).
/// The ladder operators contain no d/dr, so descending the polynomial ket
/// descends Psi with the same radial factor and the same energy.
struct HydrogenState {
    HalfInt j;
    HalfInt m;
    Ket ket;
    double decay = 0;
    double energy = 0;
    PhysicalUnits units;

    RadialKetField field() const { return RadialKetField(ket.body, decay); }
};

/// E_{j} = -mu q^4 / (2 hbar^2 (j+1)^2).
double hydrogen_energy(HalfInt j, const PhysicalUnits& units = {});

double hydrogen_decay(HalfInt j, const PhysicalUnits& units = {});

/// Half-integer j >= 1/2 and -j <= m <= j only; integer j is rejected.
HydrogenState make_state(HalfInt j, HalfInt m, const PhysicalUnits& units = {});

struct ResidualPoint {
    EulerPoint point;
    double rel_residual = 0;
};

struct ResidualReport {
    HalfInt j;
    HalfInt m;
    double energy = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double fd_step = 0;
    double max_rel_residual = 0;
    int skipped_points = 0;
    PhysicalUnits units;
    std::vector<ResidualPoint> points;
};

double quiet_nan();

/// Max |H Psi - E Psi| / |E Psi| over random sample points with
/// r in [0.5, 5]*(j+1) and sin(theta) >= 0.05. H is
/// -(hbar^2/2mu)[(1/r^2) d_r(r^2 d_r) - J^2/r^2] - q^2/r with J^2 the
/// Euler-form Casimir; derivatives by 4th-order finite differences.
/// `energy_override` and `decay_override` exist for negative controls.
ResidualReport hamiltonian_residual(const HydrogenState& s, int samples, std::uint64_t seed,
                                    double fd_step = 1e-5, double energy_override = quiet_nan(),
                                    double decay_override = quiet_nan());

struct RadialCheckReport {
    HalfInt j;
    double max_rel_err = 0;
    int grid_points = 0;
};

/// Closed-form check that R(r) = r^j e^{-a_j r} solves the radial equation
/// -(hbar^2/2mu)[(1/r^2)(r^2 R')' - j(j+1)R/r^2] - q^2 R / r = E R
/// on a grid over [0.1, 10]; derivatives of R are analytic, no differencing.
/// `decay_override` exists for the negative control.
RadialCheckReport radial_check(HalfInt j, const PhysicalUnits& units = {},
                               double decay_override = quiet_nan());

} // namespace hopfwave
