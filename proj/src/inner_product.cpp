#include "hopfwave/inner_product.hpp"

namespace hopfwave {

Rational gaussian_moment(unsigned a, unsigned b) {
    if (a != b) return Rational(0);
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), a);
    BigInt two_a;
    mpz_ui_pow_ui(two_a.get_mpz_t(), 2, a);
    return Rational(fact * two_a);
}

GaussianRational inner_product(const Polynomial& p, const Polynomial& q) {
    Polynomial integrand = p * q.conjugated();
    GaussianRational acc;
    for (const auto& [m, c] : integrand.terms()) {
        if (m.e[0] != m.e[2] || m.e[1] != m.e[3]) continue; // unmatched phases integrate to 0
        Rational w = gaussian_moment(m.e[0], m.e[2]) * gaussian_moment(m.e[1], m.e[3]);
        acc += GaussianRational(w) * c;
    }
    return acc;
}

} // namespace hopfwave
