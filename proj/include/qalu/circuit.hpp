#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalu/layout.hpp"

namespace qalu {

enum class GateKind { X, CNOT, CSX, CSXDG, SWAP };

/// Marks which SWAP operand is known to be |0> when the gate is reached,
/// enabling the two-CNOT decomposition.
enum class SwapZero { None, First, Second };

struct Gate {
    GateKind kind = GateKind::X;
    QubitId target = 0;
    std::optional<QubitId> control;       // absent only for X
    SwapZero swap_zero = SwapZero::None;  // SWAP lowering hint

    bool two_qubit() const { return control.has_value(); }
    bool same_op(const Gate& o) const {
        return kind == o.kind && target == o.target && control == o.control;
    }

    static Gate x(QubitId t) { return {GateKind::X, t, std::nullopt, SwapZero::None}; }
    static Gate cx(QubitId c, QubitId t) { return {GateKind::CNOT, t, c, SwapZero::None}; }
    static Gate csx(QubitId c, QubitId t) { return {GateKind::CSX, t, c, SwapZero::None}; }
    static Gate csxdg(QubitId c, QubitId t) { return {GateKind::CSXDG, t, c, SwapZero::None}; }
    static Gate swap(QubitId a, QubitId b, SwapZero z = SwapZero::None) {
        return {GateKind::SWAP, b, a, z};
    }
};

const char* kind_name(GateKind k);

/// Named positions in the gate list (dashed-line stages, per-digit
/// boundaries). offset = number of gates before the marker.
struct Marker {
    std::string label;
    std::size_t offset = 0;
};

struct Circuit {
    int qubit_count = 0;
    std::vector<Gate> gates;
    std::optional<GridLayout> layout;
    RegisterMap registers;
    std::vector<Marker> markers;
    std::vector<std::string> header_comments; // round-tripped by the text format

    void push(const Gate& g);
    void mark(const std::string& label);
    std::size_t marker_offset(const std::string& label) const;

    /// First `offset` gates, metadata preserved.
    Circuit prefix(std::size_t offset) const;
};

struct GateCounts {
    int x = 0;
    int cnot = 0;
    int csx = 0;
    int csxdg = 0;
    int swap = 0;
    int two_qubit_total = 0;
    int depth = 0;

    int total() const { return x + cnot + csx + csxdg + swap; }
};

struct ConnectivityViolation {
    std::size_t gate_index = 0;
    Gate gate;
};

Circuit compose(const Circuit& a, const Circuit& b);
Circuit dagger(const Circuit& c);

/// Rewrites to the {X, CNOT, CSX} alphabet: CSXDG -> CNOT+CSX, SWAP -> 3
/// CNOTs (2 when one side is annotated |0>).
Circuit lower(const Circuit& c);

/// Removes identical self-inverse gate pairs (X, CNOT, SWAP) separated only
/// by gates that touch neither operand. Runs to a fixed point.
Circuit cancel_adjacent_pairs(const Circuit& c);

GateCounts gate_counts(const Circuit& c);

/// Every two-qubit gate whose operands are not grid-adjacent. Requires an
/// attached layout and a lowered circuit.
std::vector<ConnectivityViolation> validate_connectivity(const Circuit& c);

} // namespace qalu
