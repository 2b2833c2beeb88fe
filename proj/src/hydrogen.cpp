#include "hopfwave/hydrogen.hpp"

#include "hopfwave/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hopfwave {

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

double hydrogen_energy(HalfInt j, const PhysicalUnits& units) {
    if (j.twice < 0) throw std::invalid_argument("hydrogen_energy: j must be >= 0");
    double jp1 = j.to_double() + 1.0;
    double q2 = units.q * units.q;
    return -units.mu * q2 * q2 / (2 * units.hbar * units.hbar * jp1 * jp1);
}

double hydrogen_decay(HalfInt j, const PhysicalUnits& units) {
    double jp1 = j.to_double() + 1.0;
    return units.mu * units.q * units.q / (jp1 * units.hbar * units.hbar);
}

HydrogenState make_state(HalfInt j, HalfInt m, const PhysicalUnits& units) {
    if (j.is_integer() || j.twice < 1)
        throw std::invalid_argument("make_state: j must be a half-integer >= 1/2, got " +
                                    to_string(j));
    if (m > j || m < -j)
        throw std::invalid_argument("make_state: |m| <= j required");
    HydrogenState s;
    s.j = j;
    s.m = m;
    s.ket = make_multiplet(j, BuildFrom::Top).at_m(m); // repeated L- descent from m = +j
    s.decay = hydrogen_decay(j, units);
    s.energy = hydrogen_energy(j, units);
    s.units = units;
    return s;
}

namespace {

// H f at p: -(hbar^2/2mu)[f'' + (2/r) f' - J^2 f / r^2] - (q^2/r) f
std::complex<double> apply_hamiltonian(const EulerField& field, const EulerPoint& p,
                                       const PhysicalUnits& units, double h) {
    const QEulerPoint q(p);
    const __float128 qh = h;

    auto sample = [&](double dr) {
        QEulerPoint s = q;
        s.r += __float128(dr) * qh;
        return field(s);
    };
    QComplex dr1 = QComplex(1 / (12 * qh)) *
                   (-sample(2) + QComplex(8) * sample(1) - QComplex(8) * sample(-1) +
                    sample(-2));
    QComplex dr2 = QComplex(1 / (12 * qh * qh)) *
                   (-sample(2) + QComplex(16) * sample(1) - QComplex(30) * sample(0) +
                    QComplex(16) * sample(-1) - sample(-2));

    std::complex<double> j2 = euler_apply(Gen::Casimir, field, p, h, 0.04);
    std::complex<double> radial = dr2.to_double() + (2.0 / p.r) * dr1.to_double();
    double kin = units.hbar * units.hbar / (2 * units.mu);
    std::complex<double> f0 = field.eval(p);
    return -kin * (radial - j2 / (p.r * p.r)) - (units.q * units.q / p.r) * f0;
}

} // namespace

ResidualReport hamiltonian_residual(const HydrogenState& s, int samples, std::uint64_t seed,
                                    double fd_step, double energy_override,
                                    double decay_override) {
    ResidualReport rep;
    rep.j = s.j;
    rep.m = s.m;
    rep.samples = samples;
    rep.seed = seed;
    rep.fd_step = fd_step;
    rep.units = s.units;
    double energy = std::isnan(energy_override) ? s.energy : energy_override;
    double decay = std::isnan(decay_override) ? s.decay : decay_override;
    rep.energy = energy;

    RadialKetField field(s.ket.body, decay);
    SplitMix64 rng(seed);
    const double jp1 = s.j.to_double() + 1.0;
    const double min_sin = 0.05;
    int produced = 0;
    while (produced < samples) {
        EulerPoint p;
        p.r = rng.uniform(0.5 * jp1, 5.0 * jp1);
        p.theta = rng.uniform(0.0, M_PI);
        p.phi = rng.uniform(0.0, 2 * M_PI);
        p.psi = rng.uniform(0.0, 4 * M_PI);
        if (std::sin(p.theta) < min_sin) {
            ++rep.skipped_points;
            continue;
        }
        std::complex<double> hf = apply_hamiltonian(field, p, s.units, fd_step);
        std::complex<double> ef = energy * field.eval(p);
        double rel = std::abs(hf - ef) / std::abs(ef);
        rep.points.push_back({p, rel});
        rep.max_rel_residual = std::max(rep.max_rel_residual, rel);
        ++produced;
    }
    return rep;
}

RadialCheckReport radial_check(HalfInt j, const PhysicalUnits& units, double decay_override) {
    RadialCheckReport rep;
    rep.j = j;
    double a = std::isnan(decay_override) ? hydrogen_decay(j, units) : decay_override;
    double E = hydrogen_energy(j, units);
    double jv = j.to_double();
    double kin = units.hbar * units.hbar / (2 * units.mu);
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
        double r = 0.1 + (10.0 - 0.1) * i / n;
        double R = std::pow(r, jv) * std::exp(-a * r);
        double R1 = (jv / r - a) * R;
        double R2 = (jv * (jv - 1) / (r * r) - 2 * a * jv / r + a * a) * R;
        // (1/r^2)(r^2 R')' = R'' + 2R'/r
        double lhs = -kin * (R2 + 2 * R1 / r - jv * (jv + 1) * R / (r * r)) -
                     units.q * units.q * R / r;
        double rhs = E * R;
        rep.max_rel_err = std::max(rep.max_rel_err, std::abs(lhs - rhs) / std::abs(rhs));
        ++rep.grid_points;
    }
    return rep;
}

} // namespace hopfwave
