#pragma once

#include "hopfwave/hydrogen.hpp"
#include "hopfwave/identity_tables.hpp"
#include "hopfwave/serialize.hpp"

namespace hopfwave {

constexpr std::uint64_t kDefaultSeed = 12345;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

Json suite_report_json(const SuiteReport& rep);

struct SuiteOptions {
    HalfInt max_j = HalfInt::whole(6);
    int samples = 0; // 0 = per-suite default
    std::uint64_t seed = kDefaultSeed;
};

// --- operator algebra ---
CheckResult check_identity_tables();
CheckResult check_compose_faithful(std::uint64_t seed);
CheckResult check_first_order_brackets();
CheckResult check_jacobi(std::uint64_t seed);
CheckResult check_grading();

// --- representations ---
CheckResult check_multiplets(HalfInt max_j);
CheckResult check_ladder_roundtrip(HalfInt max_j);
CheckResult check_direction_agreement(HalfInt max_j);
CheckResult check_orthogonality(HalfInt max_j);
CheckResult check_moment_rule_quadrature();
CheckResult check_spin1_reference_triple(int samples, std::uint64_t seed);

/// Independent oracle for the Gaussian moments: full 2D quadrature in polar
/// coordinates, no use of the closed-form rule.
double quadrature_moment(unsigned a, unsigned b);

// --- coordinates ---
CheckResult check_hopf_norm(int samples, std::uint64_t seed);
CheckResult check_double_cover(int samples, std::uint64_t seed);
CheckResult check_chart_roundtrip(int samples, std::uint64_t seed);
CheckResult check_euler_consistency(HalfInt j_max, int samples, std::uint64_t seed,
                                    double fd_step);

// --- hydrogen ---
CheckResult check_energies();
CheckResult check_eigenpairs(int samples, std::uint64_t seed);
CheckResult check_negative_controls(int samples, std::uint64_t seed);
CheckResult check_radial_profiles();
CheckResult check_psi_independence(int samples, std::uint64_t seed);
CheckResult check_descent_commutes_with_radial(int samples, std::uint64_t seed);
CheckResult check_numeric_lz(int samples, std::uint64_t seed);

SuiteReport weyl_suite(const SuiteOptions& opt = {});
SuiteReport repr_suite(const SuiteOptions& opt = {});
SuiteReport coords_suite(const SuiteOptions& opt = {});
SuiteReport hydrogen_suite(const SuiteOptions& opt = {});
std::vector<SuiteReport> all_suites(const SuiteOptions& opt = {});

} // namespace hopfwave
