#pragma once

#include <vector>

#include "qalu/circuit.hpp"

namespace qalu::detail {

inline Gate dagger_of(Gate g) {
    if (g.kind == GateKind::CSX)
        g.kind = GateKind::CSXDG;
    else if (g.kind == GateKind::CSXDG)
        g.kind = GateKind::CSX;
    else if (g.kind == GateKind::SWAP) {
        if (g.swap_zero == SwapZero::First)
            g.swap_zero = SwapZero::Second;
        else if (g.swap_zero == SwapZero::Second)
            g.swap_zero = SwapZero::First;
    }
    return g;
}

/// Emits the dagger of whatever `emit_forward` would append.
template <typename F>
void emit_dagger(Circuit& c, F&& emit_forward) {
    std::size_t from = c.gates.size();
    emit_forward(c);
    std::vector<Gate> fwd(c.gates.begin() + static_cast<std::ptrdiff_t>(from), c.gates.end());
    c.gates.resize(from);
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it)
        c.push(dagger_of(*it));
}

} // namespace qalu::detail
