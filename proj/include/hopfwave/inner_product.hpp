#pragma once

#include "hopfwave/polynomial.hpp"

namespace hopfwave {

/// Exact Gaussian-weighted hermitian product
///   <p,q> = integral of p * conj(q) * exp(-(|z1|^2+|z2|^2)/2)
/// over C^2, normalized so <1,1> = 1. Computed term by term from the monomial
/// moment rule <z^a zbar^b> = delta_ab * 2^a * a!  per complex variable.
GaussianRational inner_product(const Polynomial& p, const Polynomial& q);

/// The per-variable moment <z^a zbar^b> itself (exposed so tests can validate
/// the rule against numeric quadrature before anything relies on it).
Rational gaussian_moment(unsigned a, unsigned b);

} // namespace hopfwave
