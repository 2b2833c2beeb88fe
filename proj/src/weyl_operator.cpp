#include "hopfwave/weyl_operator.hpp"

#include <ostream>

namespace hopfwave {

std::string to_string(const DerivIndex& d) {
    static const char* names[4] = {"dz1", "dz2", "dz1b", "dz2b"};
    std::string out;
    for (int v = 0; v < 4; ++v) {
        if (d.e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (d.e[v] > 1) out += "^" + std::to_string(d.e[v]);
    }
    return out.empty() ? "1" : out;
}

WeylOperator WeylOperator::multiplication(const Polynomial& p) {
    WeylOperator a;
    a.add_term(DerivIndex::none(), p);
    return a;
}

WeylOperator WeylOperator::derivative(const DerivIndex& d, const Polynomial& coeff) {
    WeylOperator a;
    a.add_term(d, coeff);
    return a;
}

void WeylOperator::add_term(const DerivIndex& d, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::uint32_t WeylOperator::order() const {
    std::uint32_t o = 0;
    for (const auto& [d, c] : terms_) o = std::max(o, d.order());
    return o;
}

WeylOperator WeylOperator::operator-() const {
    WeylOperator r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

WeylOperator operator+(const WeylOperator& a, const WeylOperator& b) {
    WeylOperator r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

WeylOperator operator-(const WeylOperator& a, const WeylOperator& b) {
    WeylOperator r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
}

WeylOperator operator*(const GaussianRational& c, const WeylOperator& a) {
    WeylOperator r;
    if (c.is_zero()) return r;
    for (const auto& [d, p] : a.terms_) r.terms_.emplace(d, c * p);
    return r;
}

namespace {

Polynomial iterated_partial(const Polynomial& p, const DerivIndex& d) {
    Polynomial r = p;
    for (int v = 0; v < 4; ++v)
        for (std::uint32_t k = 0; k < d.e[v]; ++k) r = r.partial(static_cast<VarId>(v));
    return r;
}

// Product of componentwise binomial coefficients C(alpha_v, gamma_v).
GaussianRational multi_binomial(const DerivIndex& alpha, const DerivIndex& gamma) {
    BigInt prod = 1;
    for (int v = 0; v < 4; ++v) {
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), alpha.e[v], gamma.e[v]);
        prod *= b;
    }
    return GaussianRational(Rational(prod));
}

template <typename Fn>
void for_each_subindex(const DerivIndex& alpha, Fn&& fn) {
    DerivIndex g;
    for (g.e[0] = 0; g.e[0] <= alpha.e[0]; ++g.e[0])
        for (g.e[1] = 0; g.e[1] <= alpha.e[1]; ++g.e[1])
            for (g.e[2] = 0; g.e[2] <= alpha.e[2]; ++g.e[2])
                for (g.e[3] = 0; g.e[3] <= alpha.e[3]; ++g.e[3]) fn(g);
}

} // namespace

Polynomial WeylOperator::apply(const Polynomial& f) const {
    Polynomial out;
    for (const auto& [d, coeff] : terms_) out += coeff * iterated_partial(f, d);
    return out;
}

WeylOperator compose(const WeylOperator& A, const WeylOperator& B) {
    // (p d^a)(q d^b) = sum_{g<=a} C(a,g) p d^g(q) d^{a-g+b}
    WeylOperator out;
    for (const auto& term_a : A.terms()) {
        const DerivIndex& a = term_a.first;
        const Polynomial& p = term_a.second;
        for (const auto& term_b : B.terms()) {
            const DerivIndex& b = term_b.first;
            const Polynomial& q = term_b.second;
            for_each_subindex(a, [&](const DerivIndex& g) {
                Polynomial dq = iterated_partial(q, g);
                if (dq.is_zero()) return;
                DerivIndex rest{a.e[0] - g.e[0] + b.e[0], a.e[1] - g.e[1] + b.e[1],
                                a.e[2] - g.e[2] + b.e[2], a.e[3] - g.e[3] + b.e[3]};
                out.add_term(rest, multi_binomial(a, g) * (p * dq));
            });
        }
    }
    return out;
}

WeylOperator bracket(const WeylOperator& A, const WeylOperator& B, BracketKind kind) {
    WeylOperator ab = compose(A, B);
    WeylOperator ba = compose(B, A);
    return kind == BracketKind::Commutator ? ab - ba : ab + ba;
}

std::optional<std::vector<GaussianRational>> decompose_in_span(
    const WeylOperator& target, const std::vector<WeylOperator>& basis) {
    // Index the union of (deriv, monomial) keys, then Gaussian-eliminate
    // the resulting exact linear system over Q(i).
    using Key = std::pair<DerivIndex, Monomial>;
    std::map<Key, std::size_t> keys;
    auto collect = [&](const WeylOperator& op) {
        for (const auto& [d, poly] : op.terms())
            for (const auto& [m, c] : poly.terms()) keys.emplace(Key{d, m}, 0);
    };
    for (const auto& b : basis) collect(b);
    collect(target);
    std::size_t idx = 0;
    for (auto& [k, v] : keys) v = idx++;

    const std::size_t rows = keys.size(), cols = basis.size();
    std::vector<std::vector<GaussianRational>> mat(rows,
                                                   std::vector<GaussianRational>(cols + 1));
    auto fill = [&](const WeylOperator& op, std::size_t col) {
        for (const auto& [d, poly] : op.terms())
            for (const auto& [m, c] : poly.terms()) mat[keys.at(Key{d, m})][col] = c;
    };
    for (std::size_t j = 0; j < cols; ++j) fill(basis[j], j);
    fill(target, cols);

    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = rank; r < rows; ++r)
            if (!mat[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(mat[rank], mat[pr]);
        GaussianRational inv = GaussianRational(1) / mat[rank][col];
        for (std::size_t c = col; c <= cols; ++c) mat[rank][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col].is_zero()) continue;
            GaussianRational f = mat[r][col];
            for (std::size_t c = col; c <= cols; ++c) mat[r][c] -= f * mat[rank][c];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    // Inconsistent if any non-pivot row keeps a nonzero RHS.
    for (std::size_t r = rank; r < rows; ++r)
        if (!mat[r][cols].is_zero()) return std::nullopt;

    std::vector<GaussianRational> x(cols);
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_row[col] != SIZE_MAX) x[col] = mat[pivot_row[col]][cols];
    return x;
}

std::string to_string(const WeylOperator& A) {
    if (A.is_zero()) return "0";
    std::string out;
    for (const auto& [d, coeff] : A.terms()) {
        if (!out.empty()) out += " + ";
        out += "[" + to_string(coeff) + "]";
        if (d.order() > 0) out += "*" + to_string(d);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const WeylOperator& A) {
    return os << to_string(A);
}

} // namespace hopfwave
