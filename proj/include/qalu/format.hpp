#pragma once

#include <string>

#include "qalu/circuit.hpp"

namespace qalu {

/// Canonical line-oriented circuit text: header comments, `qubits`,
/// `layout grid`, one `map` line per register entry, then lowered gates.
/// Qubit ids are assigned by first appearance of a coordinate in map order.
std::string print_circuit(const Circuit& c);

Circuit parse_circuit(const std::string& text);

} // namespace qalu
