#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qalu/circuit.hpp"
#include "qalu/units.hpp"

namespace qalu {

struct Failure {
    std::string input;
    std::string check;
    std::uint64_t expected = 0;
    std::uint64_t got = 0;
    std::string note;
};

struct VerificationReport {
    std::string unit;
    UnitParams params;
    std::string kind; // "exhaustive" or "linearity"
    int cases_run = 0;
    std::vector<Failure> failures;
    std::vector<std::string> ancilla_violations;
    int connectivity_violations = 0;
    GateCounts counts;          // raw builder output
    GateCounts lowered_counts;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;

    bool pass() const {
        return failures.empty() && ancilla_violations.empty() && connectivity_violations == 0;
    }
};

/// Simulates every oracle case of the unit: output must be a single basis
/// state with amplitude 1, every declared register must match.
VerificationReport exhaustive_verify(const std::string& unit, const UnitParams& params);

/// Seeded random superpositions (k <= 4 branches) vs branch-wise simulation.
VerificationReport linearity_check(const std::string& unit, const UnitParams& params, int trials,
                                   std::uint64_t seed);

/// Compares the one-bit adder / carry unit against the reference 32x32 block
/// matrices (basis order A, B, C, C', C'' from MSB to LSB).
bool matrix_check_p1();
bool matrix_check_uc();

/// Least-squares slope of log(two-qubit gate count) vs log N.
double complexity_fit(const std::string& unit, const std::vector<int>& n_range);

std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);

} // namespace qalu
