#include "qalu/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace qalu {

namespace {

constexpr double kPrune = 1e-12;

std::uint64_t bit_mask(QubitId q) { return std::uint64_t(1) << q; }

} // namespace

SparseState::SparseState(int qubit_count, std::map<std::uint64_t, Amplitude> amps)
    : qubit_count_(qubit_count), amps_(std::move(amps)) {}

Amplitude SparseState::amplitude(std::uint64_t basis) const {
    auto it = amps_.find(basis);
    return it == amps_.end() ? Amplitude(0.0, 0.0) : it->second;
}

double SparseState::norm_squared() const {
    double s = 0.0;
    for (const auto& [k, a] : amps_)
        s += std::norm(a);
    return s;
}

SparseState basis_state(int qubit_count, std::uint64_t bits) {
    if (qubit_count < 1 || qubit_count > 63)
        throw std::invalid_argument("basis_state: bad qubit count");
    if (qubit_count < 63 && bits >> qubit_count)
        throw std::invalid_argument("basis_state: pattern wider than register");
    return SparseState(qubit_count, {{bits, Amplitude(1.0, 0.0)}});
}

SparseState superpose(int qubit_count, const std::vector<std::pair<Amplitude, std::uint64_t>>& terms) {
    std::map<std::uint64_t, Amplitude> amps;
    double norm = 0.0;
    for (const auto& [a, bits] : terms) {
        if (qubit_count < 63 && bits >> qubit_count)
            throw std::invalid_argument("superpose: pattern wider than register");
        if (!amps.emplace(bits, a).second)
            throw std::invalid_argument("superpose: duplicate basis pattern");
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("superpose: amplitudes not normalized");
    return SparseState(qubit_count, std::move(amps));
}

SparseState apply(const SparseState& state, const Gate& gate) {
    int nq = state.qubit_count();
    auto check = [&](QubitId q) {
        if (q < 0 || q >= nq)
            throw std::out_of_range("apply: operand out of range");
    };
    check(gate.target);
    if (gate.control)
        check(*gate.control);

    std::map<std::uint64_t, Amplitude> next;
    const std::uint64_t t = bit_mask(gate.target);

    switch (gate.kind) {
    case GateKind::X:
        for (const auto& [k, a] : state.amplitudes())
            next[k ^ t] += a;
        break;
    case GateKind::CNOT: {
        const std::uint64_t c = bit_mask(*gate.control);
        for (const auto& [k, a] : state.amplitudes())
            next[(k & c) ? (k ^ t) : k] += a;
        break;
    }
    case GateKind::SWAP: {
        const std::uint64_t c = bit_mask(*gate.control);
        for (const auto& [k, a] : state.amplitudes()) {
            bool bc = k & c, bt = k & t;
            std::uint64_t k2 = k;
            if (bc != bt)
                k2 ^= c | t;
            next[k2] += a;
        }
        break;
    }
    case GateKind::CSX:
    case GateKind::CSXDG: {
        const std::uint64_t c = bit_mask(*gate.control);
        // sqrt(X) entries: diagonal (1+i)/2, off-diagonal (1-i)/2; conjugated
        // for the inverse.
        const double im = gate.kind == GateKind::CSX ? 0.5 : -0.5;
        const Amplitude diag(0.5, im), off(0.5, -im);
        for (const auto& [k, a] : state.amplitudes()) {
            if (!(k & c)) {
                next[k] += a;
            } else {
                next[k] += a * diag;
                next[k ^ t] += a * off;
            }
        }
        break;
    }
    }

    for (auto it = next.begin(); it != next.end();) {
        if (std::abs(it->second) < kPrune)
            it = next.erase(it);
        else
            ++it;
    }
    SparseState out(nq, std::move(next));
    double n2 = out.norm_squared();
    if (std::abs(n2 - 1.0) > kPrune && n2 > 0.0) {
        double inv = 1.0 / std::sqrt(n2);
        std::map<std::uint64_t, Amplitude> scaled;
        for (const auto& [k, a] : out.amplitudes())
            scaled[k] = a * inv;
        out = SparseState(nq, std::move(scaled));
    }
    return out;
}

SparseState run(const Circuit& circuit, const SparseState& state) {
    if (circuit.qubit_count != state.qubit_count())
        throw std::invalid_argument("run: qubit counts differ");
    SparseState cur = state;
    for (const auto& g : circuit.gates)
        cur = apply(cur, g);
    return cur;
}

bool register_definite(const SparseState& state, const Register& reg) {
    if (state.amplitudes().empty())
        return false;
    std::uint64_t first = state.amplitudes().begin()->first;
    for (QubitId q : reg.qubits) {
        std::uint64_t m = bit_mask(q);
        bool bit = first & m;
        for (const auto& [k, a] : state.amplitudes())
            if (bool(k & m) != bit)
                return false;
    }
    return true;
}

std::uint64_t read_register(const SparseState& state, const Register& reg) {
    if (!register_definite(state, reg))
        throw std::runtime_error("read_register: register " + reg.name + " is not classically definite");
    std::uint64_t first = state.amplitudes().begin()->first;
    std::uint64_t value = 0;
    for (QubitId q : reg.qubits)
        value = (value << 1) | ((first >> q) & 1);
    return value;
}

std::vector<std::vector<Amplitude>> unitary_of(const Circuit& circuit, const std::vector<QubitId>& order) {
    int nq = circuit.qubit_count;
    if (nq > 12)
        throw std::invalid_argument("unitary_of: too many qubits");
    if (static_cast<int>(order.size()) != nq)
        throw std::invalid_argument("unitary_of: order must list every qubit");
    std::size_t dim = std::size_t(1) << nq;
    std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim, Amplitude(0.0, 0.0)));
    for (std::size_t col = 0; col < dim; ++col) {
        std::uint64_t pattern = 0;
        for (int j = 0; j < nq; ++j)
            if (col >> (nq - 1 - j) & 1)
                pattern |= bit_mask(order[static_cast<std::size_t>(j)]);
        SparseState out = run(circuit, basis_state(nq, pattern));
        for (const auto& [k, a] : out.amplitudes()) {
            std::size_t row = 0;
            for (int j = 0; j < nq; ++j)
                row = (row << 1) | ((k >> order[static_cast<std::size_t>(j)]) & 1);
            m[row][col] += a;
        }
    }
    return m;
}

std::vector<std::vector<Amplitude>> unitary_of(const Circuit& circuit) {
    std::vector<QubitId> order;
    for (int q = circuit.qubit_count - 1; q >= 0; --q)
        order.push_back(q);
    return unitary_of(circuit, order);
}

} // namespace qalu
