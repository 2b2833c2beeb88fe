#pragma once

#include <quadmath.h>

#include <complex>

namespace hopfwave {

/// Minimal complex arithmetic over __float128. The finite-difference engine
/// works at this precision so that second-derivative stencils at step 1e-5
/// stay far below the acceptance tolerances; everything user-facing is double.
struct QComplex {
    __float128 re = 0, im = 0;

    QComplex() = default;
    QComplex(__float128 r) : re(r) {}
    QComplex(__float128 r, __float128 i) : re(r), im(i) {}
    QComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    QComplex conj() const { return {re, -im}; }

    friend QComplex operator+(const QComplex& a, const QComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend QComplex operator-(const QComplex& a, const QComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    QComplex& operator+=(const QComplex& b) { return *this = *this + b; }
    QComplex& operator-=(const QComplex& b) { return *this = *this - b; }
    QComplex& operator*=(const QComplex& b) { return *this = *this * b; }

    std::complex<double> to_double() const { return {double(re), double(im)}; }
    double abs() const { return double(sqrtq(re * re + im * im)); }
};

inline QComplex qpolar(__float128 angle) { return {cosq(angle), sinq(angle)}; }
inline QComplex qi_times(const QComplex& z) { return {-z.im, z.re}; } // i*z

} // namespace hopfwave
