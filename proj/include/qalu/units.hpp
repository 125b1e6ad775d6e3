#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qalu/circuit.hpp"

namespace qalu {

struct UnitParams {
    int n = 0;
    int m = 0;
    bool zero_safe = false;
    bool with_remainder = true;
};

struct RegisterCheck {
    std::string label;
    std::vector<QubitId> qubits; // most-significant first
    std::uint64_t expected = 0;
    bool ancilla = false; // failures report as ancilla-reset violations
};

struct VerifyCase {
    std::string desc;
    std::uint64_t input = 0; // initial basis pattern
    std::vector<RegisterCheck> checks;
};

/// A buildable arithmetic unit together with its exhaustive oracle cases.
struct Unit {
    std::string name;
    bool needs_n = false;
    bool needs_m = false;
    UnitParams defaults;
    std::function<Circuit(const UnitParams&)> build;
    std::function<std::vector<VerifyCase>(const Circuit&, const UnitParams&)> cases;
};

const std::vector<Unit>& unit_registry();
const Unit* find_unit(const std::string& name);

/// Writes `value` into the pattern across the given qubits (MSB first).
std::uint64_t set_bits(std::uint64_t pattern, const std::vector<QubitId>& qubits_msb_first,
                       std::uint64_t value);

/// CLI-style register loading: bit j of `value` lands on the qubit with
/// subscript j. Bits without a matching subscript must be zero.
std::uint64_t load_register_value(std::uint64_t pattern, const Register& reg, std::uint64_t value);

} // namespace qalu
