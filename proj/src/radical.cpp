#include "hopfwave/radical.hpp"

#include <ostream>

namespace hopfwave {

namespace {

// Pulls the largest perfect-square divisor out of n (n >= 1):
// n = root^2 * rest with rest squarefree.
void extract_square(const BigInt& n, BigInt& root, BigInt& rest) {
    root = 1;
    rest = 1;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m && p < (1 << 20); p = (p == 2) ? BigInt(3) : BigInt(p + 2)) {
        if (m % p != 0) continue;
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        BigInt pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
        root *= pk;
        if (e % 2) rest *= p;
    }
    // Whatever survives trial division: either a perfect square or squarefree
    // for every value this project produces (ladder coefficients are small).
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        root *= r;
    } else {
        rest *= m;
    }
}

} // namespace

RadicalScalar::RadicalScalar(Rational q, Rational s) : q_(std::move(q)), s_(1) {
    if (s < 0) throw std::domain_error("RadicalScalar: negative radicand");
    if (q_ == 0 || s == 0) {
        q_ = 0;
        s_ = 1;
        return;
    }
    // q*sqrt(a/b) = (q/b)*sqrt(a*b)
    q_ /= Rational(s.get_den());
    s_ = s.get_num() * s.get_den();
    canonicalize();
}

void RadicalScalar::canonicalize() {
    if (q_ == 0) {
        s_ = 1;
        return;
    }
    BigInt root, rest;
    extract_square(s_, root, rest);
    q_ *= Rational(root);
    s_ = rest;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.is_zero() || b.is_zero()) return RadicalScalar();
    // Both radicands squarefree: sqrt(s1)*sqrt(s2) = g*sqrt((s1/g)(s2/g))
    // with g = gcd(s1,s2), and the product radicand is squarefree again.
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.s_.get_mpz_t(), b.s_.get_mpz_t());
    RadicalScalar r;
    r.q_ = a.q_ * b.q_ * Rational(g);
    r.s_ = (a.s_ / g) * (b.s_ / g);
    return r;
}

mpf_class RadicalScalar::to_float(unsigned precision_bits) const {
    if (is_zero()) return mpf_class(0, precision_bits + 8);
    mpf_class s(s_, precision_bits + 32);
    mpf_class root(0, precision_bits + 32);
    mpf_sqrt(root.get_mpf_t(), s.get_mpf_t());
    mpf_class q(0, precision_bits + 32);
    mpf_set_q(q.get_mpf_t(), q_.get_mpq_t());
    return q * root;
}

double RadicalScalar::to_double() const { return to_float(64).get_d(); }

std::string to_string(const RadicalScalar& a) {
    if (a.is_rational()) return a.coefficient().get_str();
    std::string root = "sqrt(" + a.radicand().get_str() + ")";
    if (a.coefficient() == 1) return root;
    if (a.coefficient() == -1) return "-" + root;
    return a.coefficient().get_str() + "*" + root;
}

RadicalScalar parse_radical(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("RadicalScalar: empty input");

    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return RadicalScalar(parse_rational(s));
    if (s.back() != ')') throw std::invalid_argument("RadicalScalar: cannot parse '" + text + "'");

    std::string rad = s.substr(pos + 5, s.size() - pos - 6);
    std::string coeff = s.substr(0, pos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Rational q(1);
    if (coeff == "-")
        q = -1;
    else if (!coeff.empty())
        q = parse_rational(coeff);
    return RadicalScalar(q, parse_rational(rad));
}

std::ostream& operator<<(std::ostream& os, const RadicalScalar& a) {
    return os << to_string(a);
}

} // namespace hopfwave
