#pragma once

#include "hopfwave/generators.hpp"
#include "hopfwave/half_int.hpp"
#include "hopfwave/radical.hpp"

#include <optional>
#include <vector>

namespace hopfwave {

/// One |j,m> state. `body` is the unnormalized polynomial as generated by the
/// ladder; `norm` is the exact product of the accumulated sqrt((j-+m)(j+-m+1))
/// step coefficients, so the normalized state is body / norm. Bodies are exact L, Lz eigenvectors and
/// are annihilated by the 4D Laplacian.
struct Ket {
    HalfInt j;
    HalfInt m;
    Polynomial body;
    RadicalScalar norm = RadicalScalar::one();
};

struct KetReport {
    bool harmonic = false;  // Delta body == 0
    bool l_eigen = false;   // L body == j body
    bool lz_eigen = false;  // Lz body == m body
    bool all() const { return harmonic && l_eigen && lz_eigen; }
};

/// Exact eigenvalue and harmonicity checks on the body.
KetReport verify_ket(const Ket& k);

/// Seed states: (z1 z2b)^n for integer j=n, z1 (z1 z2b)^n for j=n+1/2,
/// and the z <-> zbar mirror for the lowest-weight seeds. Both constructors
/// verify the eigenvalue equations and the annihilation L+/L- body = 0
/// before returning.
Ket highest_weight(HalfInt j);
Ket lowest_weight(HalfInt j);

enum class LadderDirection { Raise, Lower };

/// Applies L+/L- and accumulates the exact sqrt((j-+m)(j+-m+1)) factor.
/// Returns nullopt at the top/bottom of the multiplet after checking that the
/// image is the exact zero polynomial.
std::optional<Ket> ladder(const Ket& k, LadderDirection dir);

enum class BuildFrom { Bottom, Top };

/// All 2j+1 states of the spin-j representation, stored with m ascending.
struct Multiplet {
    HalfInt j;
    BuildFrom direction = BuildFrom::Bottom;
    std::vector<Ket> kets;

    const Ket& at_m(HalfInt m) const;
};

Multiplet make_multiplet(HalfInt j, BuildFrom direction = BuildFrom::Bottom);

/// Image of the ket body under one of the eight half-step operators.
Polynomial half_step(const Ket& k, Gen which);

} // namespace hopfwave
