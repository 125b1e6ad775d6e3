#pragma once

#include <cstdint>
#include <vector>

#include "qalu/sim.hpp"
#include "qalu/units.hpp"

namespace qalu::test {

// Runs a circuit on a basis input and returns the single output pattern,
// asserting the output really is one basis state with amplitude 1.
inline std::uint64_t run_basis(const Circuit& c, std::uint64_t input, double tol = 1e-9) {
    SparseState out = run(c, basis_state(c.qubit_count, input));
    REQUIRE(out.support_size() == 1);
    const auto& [pattern, amp] = *out.amplitudes().begin();
    REQUIRE(std::abs(amp - Amplitude(1.0, 0.0)) < tol);
    return pattern;
}

inline std::uint64_t read_bits(std::uint64_t pattern, const std::vector<QubitId>& qubits_msb_first) {
    std::uint64_t v = 0;
    for (QubitId q : qubits_msb_first)
        v = (v << 1) | ((pattern >> q) & 1);
    return v;
}

inline std::uint64_t reg_value(const Circuit& c, std::uint64_t pattern, const std::string& name) {
    return read_bits(pattern, c.registers.at(name).qubits);
}

} // namespace qalu::test
