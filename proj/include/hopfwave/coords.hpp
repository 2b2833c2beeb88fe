#pragma once

#include <array>
#include <complex>

namespace hopfwave {

struct R4Point {
    double u1 = 0, u2 = 0, u3 = 0, u4 = 0;
};

struct R3Point {
    double x1 = 0, x2 = 0, x3 = 0;
};

struct C2Point {
    std::complex<double> z1, z2;
};

/// (r, theta, phi, psi) with r > 0; psi has period 4*pi on the double cover.
struct EulerPoint {
    double r = 1, theta = 0, phi = 0, psi = 0;
};

inline C2Point to_c2(const R4Point& u) {
    return {{u.u1, u.u2}, {u.u3, u.u4}};
}
inline R4Point to_r4(const C2Point& z) {
    return {z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag()};
}

/// The quadratic map R^4 -> R^3; satisfies |hopf(u)| = |u|^2.
R3Point hopf(const R4Point& u);
R3Point hopf(const C2Point& z);

/// z1 = sqrt(r) e^{i(psi+phi)/2} cos(theta/2), z2 = sqrt(r) e^{i(psi-phi)/2} sin(theta/2).
C2Point euler_to_c2(const EulerPoint& p);

struct EulerFromC2 {
    EulerPoint point;
    bool pole = false; // z1 or z2 vanished: phi and psi individually ill-defined
};

/// Inverse chart: r = |z1|^2+|z2|^2, theta from arccos, phi = arg(z1 z2bar),
/// psi = 2 arg(z1) - phi mod 4*pi. At a pole only phi+psi (or phi-psi) is
/// meaningful; the ill-defined angle is resolved to 0 and flagged.
/// Throws std::domain_error for the zero input.
EulerFromC2 c2_to_euler(const C2Point& z);

using SU2Matrix = std::array<std::array<std::complex<double>, 2>, 2>;
using SO3Matrix = std::array<std::array<double, 3>, 3>;

/// The Euler-angle product Rz(psi)Ry(theta)Rz(phi) lifted to SU(2).
SU2Matrix su2_from_euler(double theta, double phi, double psi);

/// X -> A X Adag on su(2) read off as a 3x3 rotation matrix. Validates
/// unitarity and det A = 1 to 1e-12, throws std::invalid_argument otherwise.
SO3Matrix so3_from_su2(const SU2Matrix& a);

SU2Matrix su2_multiply(const SU2Matrix& a, const SU2Matrix& b);
SO3Matrix so3_multiply(const SO3Matrix& a, const SO3Matrix& b);

double max_abs_diff(const SO3Matrix& a, const SO3Matrix& b);

} // namespace hopfwave
