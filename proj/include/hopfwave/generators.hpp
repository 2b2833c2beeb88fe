#pragma once

#include "hopfwave/weyl_operator.hpp"

#include <optional>
#include <string>

namespace hopfwave {

/// Catalog of named operators. The L family, Id, Delta and Casimir are even
/// under the Z2 grading; the eight j operators are odd. The odd-odd sector of
/// the associated Lie superalgebra carries the identically-zero superbracket,
/// so only this parity bookkeeping is represented here.
enum class Gen {
    L,
    Lz,
    Lplus,
    Lminus,
    Lx,
    Ly,
    Delta,
    Casimir,
    Id,
    J1pp, // multiplication by z1
    J1pm, // multiplication by z1b
    J1mp, // d/dz2
    J1mm, // d/dz1
    J2pp, // multiplication by z2b
    J2pm, // multiplication by z2
    J2mp, // d/dz1b
    J2mm, // d/dz2b
};

/// 0 for the even sector, 1 for the eight j operators.
int parity(Gen g);

bool is_j_family(Gen g);

const char* gen_name(Gen g);
std::optional<Gen> gen_from_name(const std::string& name);

/// Exact normal-form operator for the tag. Casimir is the composed
/// Lx∘Lx + Ly∘Ly + Lz∘Lz.
const WeylOperator& generator(Gen g);

/// All seventeen tags in declaration order.
const std::vector<Gen>& all_generators();

} // namespace hopfwave
