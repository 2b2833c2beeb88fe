#include "hopfwave/euler_ops.hpp"

#include "hopfwave/rng.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hopfwave {

void quad_euler_to_c2(const QEulerPoint& p, QComplex& z1, QComplex& z2) {
    __float128 sq = sqrtq(p.r);
    __float128 ch = cosq(p.theta / 2), sh = sinq(p.theta / 2);
    z1 = QComplex(sq * ch) * qpolar((p.psi + p.phi) / 2);
    z2 = QComplex(sq * sh) * qpolar((p.psi - p.phi) / 2);
}

QComplex quad_eval(const Polynomial& poly, const QComplex& z1, const QComplex& z2) {
    QComplex acc;
    QComplex z1b = z1.conj(), z2b = z2.conj();
    for (const auto& [m, c] : poly.terms()) {
        // body coefficients are exact in double here (integer-valued in practice)
        QComplex t(c.to_complex());
        for (std::uint32_t k = 0; k < m.e[0]; ++k) t *= z1;
        for (std::uint32_t k = 0; k < m.e[1]; ++k) t *= z2;
        for (std::uint32_t k = 0; k < m.e[2]; ++k) t *= z1b;
        for (std::uint32_t k = 0; k < m.e[3]; ++k) t *= z2b;
        acc += t;
    }
    return acc;
}

QComplex KetField::operator()(const QEulerPoint& p) const {
    QComplex w1, w2;
    quad_euler_to_c2(p, w1, w2);
    return QComplex(__float128(scale_)) * quad_eval(body_, w1, w2);
}

QComplex RadialKetField::operator()(const QEulerPoint& p) const {
    QComplex w1, w2;
    quad_euler_to_c2(p, w1, w2);
    __float128 radial = expq(-__float128(decay_) * p.r) * __float128(scale_);
    return QComplex(radial) * quad_eval(body_, w1, w2);
}

namespace {

enum class Axis { R, Theta, Phi, Psi };

QEulerPoint shifted(QEulerPoint p, Axis ax, __float128 dh) {
    switch (ax) {
        case Axis::R: p.r += dh; break;
        case Axis::Theta: p.theta += dh; break;
        case Axis::Phi: p.phi += dh; break;
        case Axis::Psi: p.psi += dh; break;
    }
    return p;
}

// 4th-order central stencils
QComplex d1(const EulerField& f, const QEulerPoint& p, Axis ax, __float128 h) {
    QComplex acc = -f(shifted(p, ax, 2 * h)) + QComplex(__float128(8)) * f(shifted(p, ax, h)) -
                   QComplex(__float128(8)) * f(shifted(p, ax, -h)) + f(shifted(p, ax, -2 * h));
    return QComplex(1 / (12 * h)) * acc;
}

QComplex d2(const EulerField& f, const QEulerPoint& p, Axis ax, __float128 h) {
    QComplex acc = -f(shifted(p, ax, 2 * h)) + QComplex(__float128(16)) * f(shifted(p, ax, h)) -
                   QComplex(__float128(30)) * f(p) + QComplex(__float128(16)) * f(shifted(p, ax, -h)) -
                   f(shifted(p, ax, -2 * h));
    return QComplex(1 / (12 * h * h)) * acc;
}

// cross stencil: 4th-order first-derivative weights in each direction
QComplex d_mixed(const EulerField& f, const QEulerPoint& p, Axis a, Axis b, __float128 h) {
    static const int off[4] = {2, 1, -1, -2};
    static const int wgt[4] = {-1, 8, -8, 1};
    QComplex acc;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QEulerPoint q = shifted(shifted(p, a, off[i] * h), b, off[j] * h);
            acc += QComplex(__float128(wgt[i] * wgt[j])) * f(q);
        }
    return QComplex(1 / (144 * h * h)) * acc;
}

} // namespace

std::complex<double> euler_apply(Gen tag, const EulerField& field, const EulerPoint& p,
                                 double h, double min_sin_theta) {
    if (!(h > 0)) throw std::invalid_argument("euler_apply: step must be positive");
    if (std::sin(p.theta) < min_sin_theta)
        throw std::domain_error("euler_apply: point too close to a theta pole");

    const QEulerPoint q(p);
    const __float128 qh = h;
    const __float128 st = sinq(q.theta), ct = cosq(q.theta);
    const __float128 cot = ct / st, csc = 1 / st;
    auto D1 = [&](Axis ax) { return d1(field, q, ax, qh); };

    switch (tag) {
        case Gen::L: // r d/dr
            return (QComplex(q.r) * D1(Axis::R)).to_double();
        case Gen::Lz: // -i d/dphi
            return (-qi_times(D1(Axis::Phi))).to_double();
        case Gen::Lplus: {
            // e^{i phi} (d_theta + i cot d_phi - i csc d_psi)
            QComplex inner = D1(Axis::Theta) + qi_times(QComplex(cot) * D1(Axis::Phi)) -
                             qi_times(QComplex(csc) * D1(Axis::Psi));
            return (qpolar(q.phi) * inner).to_double();
        }
        case Gen::Lminus: {
            // -e^{-i phi} (d_theta - i cot d_phi + i csc d_psi)
            QComplex inner = D1(Axis::Theta) - qi_times(QComplex(cot) * D1(Axis::Phi)) +
                             qi_times(QComplex(csc) * D1(Axis::Psi));
            return (-(qpolar(-q.phi) * inner)).to_double();
        }
        case Gen::Lx: {
            // i (sin(phi) d_theta + cos(phi) cot d_phi - cos(phi) csc d_psi)
            __float128 sp = sinq(q.phi), cp = cosq(q.phi);
            QComplex inner = QComplex(sp) * D1(Axis::Theta) +
                             QComplex(cp * cot) * D1(Axis::Phi) -
                             QComplex(cp * csc) * D1(Axis::Psi);
            return qi_times(inner).to_double();
        }
        case Gen::Ly: {
            // -i (cos(phi) d_theta - sin(phi) cot d_phi + sin(phi) csc d_psi)
            __float128 sp = sinq(q.phi), cp = cosq(q.phi);
            QComplex inner = QComplex(cp) * D1(Axis::Theta) -
                             QComplex(sp * cot) * D1(Axis::Phi) +
                             QComplex(sp * csc) * D1(Axis::Psi);
            return (-qi_times(inner)).to_double();
        }
        case Gen::J1mm:   // d/dz1
        case Gen::J1mp:   // d/dz2
        case Gen::J2mp:   // d/dz1b
        case Gen::J2mm: { // d/dz2b
            __float128 sq = sqrtq(q.r);
            __float128 c2 = cosq(q.theta / 2), s2 = sinq(q.theta / 2);
            bool z1kind = (tag == Gen::J1mm || tag == Gen::J2mp);  // pairs with z1
            bool barred = (tag == Gen::J2mp || tag == Gen::J2mm);  // d/dzbar
            __float128 half_angle = z1kind ? (q.psi + q.phi) / 2 : (q.psi - q.phi) / 2;
            QComplex phase = qpolar(barred ? half_angle : -half_angle);
            QComplex dphi = D1(Axis::Phi), dpsi = D1(Axis::Psi);
            QComplex inner;
            if (z1kind) {
                inner = QComplex(c2) * D1(Axis::R) - QComplex(s2 / q.r) * D1(Axis::Theta);
                QComplex ang = qi_times(QComplex(1 / (2 * q.r * c2)) * (dphi + dpsi));
                inner = barred ? inner + ang : inner - ang;
            } else {
                inner = QComplex(s2) * D1(Axis::R) + QComplex(c2 / q.r) * D1(Axis::Theta);
                QComplex ang = qi_times(QComplex(1 / (2 * q.r * s2)) * (dphi - dpsi));
                inner = barred ? inner - ang : inner + ang;
            }
            return (QComplex(sq) * phase * inner).to_double();
        }
        case Gen::Casimir: {
            QComplex total = d2(field, q, Axis::Theta, qh) +
                             QComplex(cot) * d1(field, q, Axis::Theta, qh) +
                             QComplex(csc * csc) *
                                 (d2(field, q, Axis::Phi, qh) + d2(field, q, Axis::Psi, qh) -
                                  QComplex(2 * ct) * d_mixed(field, q, Axis::Phi, Axis::Psi, qh));
            return (-total).to_double();
        }
        default:
            throw std::invalid_argument(std::string("euler_apply: no Euler form for tag ") +
                                        gen_name(tag));
    }
}

std::complex<double> psi_correction_term(const EulerField& field, const EulerPoint& p,
                                         double h) {
    const QEulerPoint q(p);
    const __float128 qh = h;
    const __float128 st = sinq(q.theta), ct = cosq(q.theta);
    const __float128 csc2 = 1 / (st * st);
    QComplex corr = QComplex(csc2) * d2(field, q, Axis::Psi, qh) -
                    QComplex(2 * ct * csc2) * d_mixed(field, q, Axis::Phi, Axis::Psi, qh);
    return (QComplex(1 / (q.r * q.r)) * corr).to_double();
}

const std::vector<Gen>& sweep_tags() {
    static const std::vector<Gen> tags = {Gen::L,    Gen::Lz,   Gen::Lplus, Gen::Lminus,
                                          Gen::Lx,   Gen::Ly,   Gen::J1mm,  Gen::J1mp,
                                          Gen::J2mp, Gen::J2mm, Gen::Casimir};
    return tags;
}

namespace {

EulerPoint random_point(SplitMix64& rng) {
    EulerPoint p;
    p.r = rng.uniform(0.5, 2.0);
    p.theta = rng.uniform(0.15, M_PI - 0.15); // keeps csc(theta) modest
    p.phi = rng.uniform(0.0, 2 * M_PI);
    p.psi = rng.uniform(0.0, 4 * M_PI);
    return p;
}

} // namespace

SweepReport consistency_sweep_tag(Gen tag, HalfInt j_max, int samples, std::uint64_t seed,
                                  double fd_step) {
    SweepReport rep;
    rep.j_max = j_max;
    rep.samples = samples;
    rep.seed = seed;
    rep.fd_step = fd_step;

    std::vector<Ket> kets;
    for (int twice = 0; twice <= j_max.twice; ++twice)
        for (const Ket& k : make_multiplet(HalfInt(twice)).kets) kets.push_back(k);

    SplitMix64 rng(seed);
    TagSweepResult res;
    res.tag = tag;
    const WeylOperator& exact_op = generator(tag);
    for (int s = 0; s < samples; ++s) {
        const Ket& k = kets[rng.below(kets.size())];
        EulerPoint p = random_point(rng);
        KetField field(k.body);
        std::complex<double> euler_side = euler_apply(tag, field, p, fd_step);
        Polynomial image = exact_op.apply(k.body);
        QComplex w1, w2;
        quad_euler_to_c2(QEulerPoint(p), w1, w2);
        std::complex<double> exact_side = quad_eval(image, w1, w2).to_double();
        double err = std::abs(euler_side - exact_side) /
                     std::max(std::abs(exact_side), 1.0);
        res.max_rel_err = std::max(res.max_rel_err, err);
        ++res.points;
    }
    rep.tags.push_back(res);
    return rep;
}

SweepReport consistency_sweep(HalfInt j_max, int samples, std::uint64_t seed, double fd_step) {
    SweepReport rep;
    rep.j_max = j_max;
    rep.samples = samples;
    rep.seed = seed;
    rep.fd_step = fd_step;
    for (Gen tag : sweep_tags()) {
        SweepReport one = consistency_sweep_tag(tag, j_max, samples, seed, fd_step);
        rep.tags.push_back(one.tags.front());
    }
    return rep;
}

} // namespace hopfwave
