#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qalu/circuit.hpp"

namespace qalu {

using Amplitude = std::complex<double>;

/// Sparse statevector: basis index -> amplitude. Qubit 0 is the least
/// significant bit of the index; register significance comes from
/// RegisterMap order, never from index order.
class SparseState {
public:
    SparseState() = default;
    SparseState(int qubit_count, std::map<std::uint64_t, Amplitude> amps);

    int qubit_count() const { return qubit_count_; }
    const std::map<std::uint64_t, Amplitude>& amplitudes() const { return amps_; }
    std::size_t support_size() const { return amps_.size(); }
    Amplitude amplitude(std::uint64_t basis) const;
    double norm_squared() const;

    friend bool operator==(const SparseState&, const SparseState&) = default;

private:
    int qubit_count_ = 0;
    std::map<std::uint64_t, Amplitude> amps_;
};

SparseState basis_state(int qubit_count, std::uint64_t bits);

/// Normalized superposition from (amplitude, bit pattern) terms.
SparseState superpose(int qubit_count, const std::vector<std::pair<Amplitude, std::uint64_t>>& terms);

SparseState apply(const SparseState& state, const Gate& gate);
SparseState run(const Circuit& circuit, const SparseState& state);

/// Integer value of a register, most-significant qubit first. Throws if any
/// register qubit differs across the support (entangled readout).
std::uint64_t read_register(const SparseState& state, const Register& reg);

/// True iff every register qubit has the same value on every support pattern.
bool register_definite(const SparseState& state, const Register& reg);

/// Dense column-major unitary by running all basis columns; qubit_count <= 12.
/// `order` lists the circuit qubits most-significant first and defines the
/// basis convention of the returned matrix.
std::vector<std::vector<Amplitude>> unitary_of(const Circuit& circuit, const std::vector<QubitId>& order);

/// Same, with qubit i of the circuit as bit i of the index (LSB last in the
/// implied ordering).
std::vector<std::vector<Amplitude>> unitary_of(const Circuit& circuit);

} // namespace qalu
