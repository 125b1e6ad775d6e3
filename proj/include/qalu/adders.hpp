#pragma once

#include "qalu/circuit.hpp"

namespace qalu {

/// One-bit full adders on 5 qubits (Fig. 2a / 2b connectivity). Raw gate
/// lists: 17 CNOT + 3 CSX and 22 CNOT + 3 CSX; stage markers phi_1..phi_4.
Circuit build_p1_onebit();
Circuit build_p2_onebit();

/// Ripple-carry adders, one one-bit adder per digit. C reads a+b, A and B
/// unchanged, top C qubit restored.
Circuit build_p1(int n);
Circuit build_p2(int n);

/// Carry unit |a,b,0,0,c> -> |a,b,0,c_out,c> (23 CNOT + 3 CSX) and sum unit
/// |a,b,c> -> |a,a^b^c,c> (2 CNOT) on their standalone layouts.
Circuit build_uc();
Circuit build_us();

/// In-place adder: B_{N..0} <- a+b, C ancillas restored.
Circuit build_p3(int n);

/// Signed in-place adder: B <- (a+b) mod 2^N in two's complement.
Circuit build_p3_signed(int n);

// Gate-list emitters shared with the composite builders. Qubit arguments
// follow the role order of the corresponding unit.
namespace emit {

void p1_onebit(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc,
               bool with_markers = false);
void p2_onebit(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc,
               bool with_markers = false);
void uc(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc);
void uc_dagger(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc);
void us(Circuit& c, QubitId a, QubitId b, QubitId cin);

/// In-place ripple adder on explicit role lists: arole has W qubits (LSB
/// first), brole and crole W+1. brole[W] doubles as the last carry unit's
/// scratch.
void p3(Circuit& c, const std::vector<QubitId>& arole_lsb_first,
        const std::vector<QubitId>& brole_lsb_first,
        const std::vector<QubitId>& crole_lsb_first);

/// Signed variant: arole/brole have V qubits, crole V+1; overflow dropped.
void p3_signed(Circuit& c, const std::vector<QubitId>& arole_lsb_first,
               const std::vector<QubitId>& brole_lsb_first,
               const std::vector<QubitId>& crole_lsb_first);

} // namespace emit

} // namespace qalu
