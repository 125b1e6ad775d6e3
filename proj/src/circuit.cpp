#include "qalu/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalu {

const char* kind_name(GateKind k) {
    switch (k) {
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cx";
    case GateKind::CSX: return "csx";
    case GateKind::CSXDG: return "csxdg";
    case GateKind::SWAP: return "swap";
    }
    return "?";
}

void Circuit::push(const Gate& g) {
    if (g.target < 0 || g.target >= qubit_count)
        throw std::out_of_range("gate target out of range");
    if (g.control) {
        if (*g.control < 0 || *g.control >= qubit_count)
            throw std::out_of_range("gate control out of range");
        if (*g.control == g.target)
            throw std::invalid_argument("control equals target");
    }
    gates.push_back(g);
}

void Circuit::mark(const std::string& label) {
    markers.push_back({label, gates.size()});
}

std::size_t Circuit::marker_offset(const std::string& label) const {
    for (const auto& m : markers)
        if (m.label == label)
            return m.offset;
    throw std::out_of_range("no marker named " + label);
}

Circuit Circuit::prefix(std::size_t offset) const {
    if (offset > gates.size())
        throw std::out_of_range("prefix past end of circuit");
    Circuit out = *this;
    out.gates.assign(gates.begin(), gates.begin() + static_cast<std::ptrdiff_t>(offset));
    out.markers.clear();
    for (const auto& m : markers)
        if (m.offset <= offset)
            out.markers.push_back(m);
    return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.qubit_count != b.qubit_count)
        throw std::invalid_argument("compose: qubit counts differ");
    if (a.layout && b.layout && !(*a.layout == *b.layout))
        throw std::invalid_argument("compose: layouts differ");
    Circuit out = a;
    if (!out.layout)
        out.layout = b.layout;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    for (const auto& r : b.registers.all())
        if (!out.registers.find(r.name))
            out.registers.add(r.name, r.subs, r.qubits);
    for (const auto& m : b.markers)
        out.markers.push_back({m.label, m.offset + a.gates.size()});
    return out;
}

namespace {

Gate dagger_gate(const Gate& g) {
    Gate out = g;
    if (g.kind == GateKind::CSX)
        out.kind = GateKind::CSXDG;
    else if (g.kind == GateKind::CSXDG)
        out.kind = GateKind::CSX;
    else if (g.kind == GateKind::SWAP) {
        // the |0> side after the forward swap is the other operand
        if (g.swap_zero == SwapZero::First)
            out.swap_zero = SwapZero::Second;
        else if (g.swap_zero == SwapZero::Second)
            out.swap_zero = SwapZero::First;
    }
    return out;
}

} // namespace

Circuit dagger(const Circuit& c) {
    Circuit out = c;
    out.gates.clear();
    out.markers.clear();
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
        out.gates.push_back(dagger_gate(*it));
    return out;
}

Circuit lower(const Circuit& c) {
    Circuit out = c;
    out.gates.clear();
    out.markers.clear();
    std::vector<std::size_t> new_offset(c.gates.size() + 1, 0);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        new_offset[i] = out.gates.size();
        const Gate& g = c.gates[i];
        switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::CSX:
            out.gates.push_back(g);
            break;
        case GateKind::CSXDG:
            out.gates.push_back(Gate::cx(*g.control, g.target));
            out.gates.push_back(Gate::csx(*g.control, g.target));
            break;
        case GateKind::SWAP: {
            QubitId p = *g.control;
            QubitId q = g.target;
            if (g.swap_zero == SwapZero::First) {
                out.gates.push_back(Gate::cx(q, p));
                out.gates.push_back(Gate::cx(p, q));
            } else if (g.swap_zero == SwapZero::Second) {
                out.gates.push_back(Gate::cx(p, q));
                out.gates.push_back(Gate::cx(q, p));
            } else {
                out.gates.push_back(Gate::cx(p, q));
                out.gates.push_back(Gate::cx(q, p));
                out.gates.push_back(Gate::cx(p, q));
            }
            break;
        }
        }
    }
    new_offset[c.gates.size()] = out.gates.size();
    for (const auto& m : c.markers)
        out.markers.push_back({m.label, new_offset[m.offset]});
    return out;
}

namespace {

bool self_inverse(GateKind k) {
    return k == GateKind::X || k == GateKind::CNOT || k == GateKind::SWAP;
}

bool touches(const Gate& g, QubitId q) {
    return g.target == q || (g.control && *g.control == q);
}

bool touches_any(const Gate& g, const Gate& ops) {
    if (touches(g, ops.target))
        return true;
    return ops.control && touches(g, *ops.control);
}

} // namespace

Circuit cancel_adjacent_pairs(const Circuit& c) {
    std::vector<std::pair<Gate, std::size_t>> work;
    work.reserve(c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i)
        work.emplace_back(c.gates[i], i);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            if (!self_inverse(work[i].first.kind))
                continue;
            for (std::size_t j = i + 1; j < work.size(); ++j) {
                if (!touches_any(work[j].first, work[i].first))
                    continue;
                if (work[j].first.same_op(work[i].first)) {
                    work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                    work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                }
                break;
            }
        }
    }

    Circuit out = c;
    out.gates.clear();
    for (const auto& [g, idx] : work)
        out.gates.push_back(g);
    out.markers.clear();
    for (const auto& m : c.markers) {
        std::size_t off = 0;
        for (const auto& [g, idx] : work)
            if (idx < m.offset)
                ++off;
        out.markers.push_back({m.label, off});
    }
    return out;
}

GateCounts gate_counts(const Circuit& c) {
    GateCounts counts;
    std::vector<int> level(static_cast<std::size_t>(c.qubit_count), 0);
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::X: ++counts.x; break;
        case GateKind::CNOT: ++counts.cnot; break;
        case GateKind::CSX: ++counts.csx; break;
        case GateKind::CSXDG: ++counts.csxdg; break;
        case GateKind::SWAP: ++counts.swap; break;
        }
        if (g.two_qubit())
            ++counts.two_qubit_total;
        int d = level[static_cast<std::size_t>(g.target)];
        if (g.control)
            d = std::max(d, level[static_cast<std::size_t>(*g.control)]);
        ++d;
        level[static_cast<std::size_t>(g.target)] = d;
        if (g.control)
            level[static_cast<std::size_t>(*g.control)] = d;
        counts.depth = std::max(counts.depth, d);
    }
    return counts;
}

std::vector<ConnectivityViolation> validate_connectivity(const Circuit& c) {
    if (!c.layout)
        throw std::invalid_argument("validate_connectivity: no layout attached");
    if (c.layout->qubit_count() != c.qubit_count)
        throw std::invalid_argument("validate_connectivity: layout size mismatch");
    std::vector<ConnectivityViolation> out;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::SWAP || g.kind == GateKind::CSXDG)
            throw std::invalid_argument("validate_connectivity: circuit not lowered");
        if (g.two_qubit() && !c.layout->adjacent(*g.control, g.target))
            out.push_back({i, g});
    }
    return out;
}

} // namespace qalu
