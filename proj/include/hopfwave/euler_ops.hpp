#pragma once

#include "hopfwave/coords.hpp"
#include "hopfwave/ket.hpp"
#include "hopfwave/quad_complex.hpp"

#include <cstdint>
#include <functional>

namespace hopfwave {

struct QEulerPoint {
    __float128 r = 1, theta = 0, phi = 0, psi = 0;

    QEulerPoint() = default;
    QEulerPoint(const EulerPoint& p) : r(p.r), theta(p.theta), phi(p.phi), psi(p.psi) {}
};

/// z1, z2 of the covering chart at full precision.
void quad_euler_to_c2(const QEulerPoint& p, QComplex& z1, QComplex& z2);

/// Polynomial value with z1b, z2b bound to conjugates, at full precision.
QComplex quad_eval(const Polynomial& poly, const QComplex& z1, const QComplex& z2);

/// A scalar function of (r,theta,phi,psi) that the finite-difference engine
/// can sample at full precision.
class EulerField {
public:
    virtual ~EulerField() = default;
    virtual QComplex operator()(const QEulerPoint& p) const = 0;

    std::complex<double> eval(const EulerPoint& p) const {
        return (*this)(QEulerPoint(p)).to_double();
    }
};

/// scale * body(z1,z2) pulled back through the covering chart.
class KetField : public EulerField {
public:
    explicit KetField(Polynomial body, double scale = 1.0)
        : body_(std::move(body)), scale_(scale) {}
    QComplex operator()(const QEulerPoint& p) const override;

private:
    Polynomial body_;
    double scale_;
};

/// Adapts a double-precision callable. Stencil samples are rounded through
/// double, so this is meant for analytic experiments, not tight tolerances.
class FunctionField : public EulerField {
public:
    explicit FunctionField(std::function<std::complex<double>(const EulerPoint&)> fn)
        : fn_(std::move(fn)) {}
    QComplex operator()(const QEulerPoint& p) const override {
        return QComplex(fn_(EulerPoint{double(p.r), double(p.theta), double(p.phi),
                                       double(p.psi)}));
    }

private:
    std::function<std::complex<double>(const EulerPoint&)> fn_;
};

/// scale * exp(-decay*r) * body(z1,z2): a hydrogen eigenfunction profile.
class RadialKetField : public EulerField {
public:
    RadialKetField(Polynomial body, double decay, double scale = 1.0)
        : body_(std::move(body)), decay_(decay), scale_(scale) {}
    QComplex operator()(const QEulerPoint& p) const override;

private:
    Polynomial body_;
    double decay_;
    double scale_;
};

/// Default guard: Euler-form coefficients diverge at the theta poles.
constexpr double kDefaultMinSinTheta = 1e-3;

/// Evaluates the Euler-angle realization of the tagged operator on `field`
/// at p, using 4th-order central differences with step h. Supported tags:
/// L, Lz, L+, L-, Lx, Ly, the four derivative j's (dz1 = j1--, dz2 = j1-+,
/// dz1b = j2-+, dz2b = j2--), and Casimir, whose Euler form is
/// -[d2_theta + cot*d_theta + csc^2(d2_phi + d2_psi - 2cos*d_phi d_psi)].
/// Throws std::domain_error when sin(theta) < min_sin_theta.
std::complex<double> euler_apply(Gen tag, const EulerField& field, const EulerPoint& p,
                                 double h, double min_sin_theta = kDefaultMinSinTheta);

/// The psi-correction part of the 4D kinetic operator,
/// (1/r^2)(csc^2 * d2_psi - 2 cos csc^2 * d_phi d_psi) f,
/// which must vanish on integer-j (psi-independent) fields.
std::complex<double> psi_correction_term(const EulerField& field, const EulerPoint& p,
                                         double h);

struct TagSweepResult {
    Gen tag;
    double max_rel_err = 0;
    int points = 0;
};

struct SweepReport {
    HalfInt j_max;
    int samples = 0;
    std::uint64_t seed = 0;
    double fd_step = 0;
    std::vector<TagSweepResult> tags;

    double max_rel_err() const {
        double m = 0;
        for (const auto& t : tags) m = std::max(m, t.max_rel_err);
        return m;
    }
};

/// For multiplet kets with j <= j_max and random non-pole points, compares
/// the finite-difference Euler-form action of every supported tag against
/// the exact complex-coordinate action evaluated at the mapped point.
SweepReport consistency_sweep(HalfInt j_max, int samples, std::uint64_t seed,
                              double fd_step = 1e-5);

SweepReport consistency_sweep_tag(Gen tag, HalfInt j_max, int samples, std::uint64_t seed,
                                  double fd_step = 1e-5);

const std::vector<Gen>& sweep_tags();

} // namespace hopfwave
