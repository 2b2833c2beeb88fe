#pragma once

#include "hopfwave/generators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfwave {

/// Named batches of exact operator identities.
enum class TableId {
    Schwinger,       // oscillator relations under both a/adag correspondences
    Gl2,             // gl2 relations among L, Lz, L+, L-, Lx, Ly
    LjBrackets,      // the 32 L-j brackets and the four 2x2 realizations
    Heisenberg,      // two 5-dim Heisenberg families + closure of the 13-span
    AlphaBeta,       // the two half-step/ladder interchange maps
    Casimir,         // Lx^2+Ly^2+Lz^2 = L^2 + L - (|z1|^2+|z2|^2) Delta
    SeedCommutation, // L+- past the weight-seed multiplication operators
    SeedChain,       // L+ past the half-integer seed chain
};

const char* table_name(TableId id);
std::optional<TableId> table_from_name(const std::string& name);
const std::vector<TableId>& all_tables();

/// A single checked operator identity. `residual` is the exact normal-form
/// difference between the two sides; pass means it is the zero operator.
struct IdentityResult {
    std::string name;
    bool pass = false;
    WeylOperator residual;
    std::string note;
};

struct TableReport {
    std::string table;
    std::vector<IdentityResult> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// Checks every identity in the named table as an exact operator equation in
/// normal form. A nonzero residual signals an implementation bug, never a
/// runtime condition.
TableReport verify_table(TableId id);

std::vector<TableReport> verify_all_tables();

} // namespace hopfwave
