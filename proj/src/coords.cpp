#include "hopfwave/coords.hpp"

#include <cmath>
#include <stdexcept>

namespace hopfwave {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kFourPi = 2 * kTwoPi;

double wrap(double angle, double period) {
    double w = std::fmod(angle, period);
    if (w < 0) w += period;
    return w;
}
} // namespace

R3Point hopf(const R4Point& u) {
    return {2 * (u.u1 * u.u3 + u.u2 * u.u4), 2 * (u.u2 * u.u3 - u.u1 * u.u4),
            u.u1 * u.u1 + u.u2 * u.u2 - u.u3 * u.u3 - u.u4 * u.u4};
}

R3Point hopf(const C2Point& z) { return hopf(to_r4(z)); }

C2Point euler_to_c2(const EulerPoint& p) {
    if (!(p.r > 0)) throw std::domain_error("euler_to_c2: requires r > 0");
    double sq = std::sqrt(p.r);
    double ch = std::cos(p.theta / 2), sh = std::sin(p.theta / 2);
    std::complex<double> eplus = std::polar(1.0, (p.psi + p.phi) / 2);
    std::complex<double> eminus = std::polar(1.0, (p.psi - p.phi) / 2);
    return {sq * ch * eplus, sq * sh * eminus};
}

EulerFromC2 c2_to_euler(const C2Point& z) {
    double r = std::norm(z.z1) + std::norm(z.z2);
    if (r <= 0) throw std::domain_error("c2_to_euler: zero input");
    EulerFromC2 out;
    out.point.r = r;
    double c = (std::norm(z.z1) - std::norm(z.z2)) / r;
    out.point.theta = std::acos(std::clamp(c, -1.0, 1.0));

    if (z.z2 == std::complex<double>(0, 0)) {
        // theta = 0: only psi+phi is defined; store it all in psi.
        out.pole = true;
        out.point.phi = 0;
        out.point.psi = wrap(2 * std::arg(z.z1), kFourPi);
        return out;
    }
    if (z.z1 == std::complex<double>(0, 0)) {
        // theta = pi: only psi-phi is defined.
        out.pole = true;
        out.point.phi = 0;
        out.point.psi = wrap(2 * std::arg(z.z2), kFourPi);
        return out;
    }
    out.point.phi = wrap(std::arg(z.z1 * std::conj(z.z2)), kTwoPi);
    out.point.psi = wrap(2 * std::arg(z.z1) - out.point.phi, kFourPi);
    return out;
}

SU2Matrix su2_from_euler(double theta, double phi, double psi) {
    double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
    std::complex<double> epp = std::polar(1.0, -(psi + phi) / 2);
    std::complex<double> epm = std::polar(1.0, -(psi - phi) / 2);
    return {{{ch * epp, -sh * epm}, {sh * std::conj(epm), ch * std::conj(epp)}}};
}

SU2Matrix su2_multiply(const SU2Matrix& a, const SU2Matrix& b) {
    SU2Matrix c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

SO3Matrix so3_multiply(const SO3Matrix& a, const SO3Matrix& b) {
    SO3Matrix c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return c;
}

SO3Matrix so3_from_su2(const SU2Matrix& a) {
    const std::complex<double> det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    double unitary_err = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::complex<double> entry = a[0][i] * std::conj(a[0][j]) +
                                         a[1][i] * std::conj(a[1][j]);
            unitary_err = std::max(unitary_err, std::abs(entry - (i == j ? 1.0 : 0.0)));
        }
    if (unitary_err > 1e-12 || std::abs(det - 1.0) > 1e-12)
        throw std::invalid_argument("so3_from_su2: input is not in SU(2)");

    // Column k of the rotation is the image of the basis vector e_k under
    // X -> A X Adag with X = i(z, x-iy; x+iy, -z).
    SO3Matrix rot{};
    for (int k = 0; k < 3; ++k) {
        double x = k == 0, y = k == 1, z = k == 2;
        std::complex<double> X00(0, z), X01(y, x), X10(-y, x), X11(0, -z);
        // A X
        std::complex<double> B00 = a[0][0] * X00 + a[0][1] * X10;
        std::complex<double> B01 = a[0][0] * X01 + a[0][1] * X11;
        // (A X) Adag
        std::complex<double> C00 = B00 * std::conj(a[0][0]) + B01 * std::conj(a[0][1]);
        std::complex<double> C01 = B00 * std::conj(a[1][0]) + B01 * std::conj(a[1][1]);
        rot[0][k] = C01.imag(); // X01 = i(x-iy) = y + ix
        rot[1][k] = C01.real();
        rot[2][k] = C00.imag(); // X00 = iz
    }
    return rot;
}

double max_abs_diff(const SO3Matrix& a, const SO3Matrix& b) {
    double m = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

} // namespace hopfwave
