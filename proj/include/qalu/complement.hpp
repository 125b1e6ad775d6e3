#pragma once

#include "qalu/circuit.hpp"

namespace qalu {

/// Half-adder carry unit on (A_n, C_n, C_{n+1}, C_{n+2}):
/// |a, c, 0, 0> -> |a, c, a&c, 0>.
Circuit build_uc_tilde();

/// Increment with overflow: A_{N..0} <- a+1, C ancillas restored.
Circuit build_plus1(int n);

/// Modular increment: A_{N-1..0} <- (a+1) mod 2^N.
Circuit build_plus1_tilde(int n);

/// Two's complement of a known-negative input: X on A_{N..0}, then the
/// modular increment. Output sign bit 1, magnitude (2^N - a) mod 2^N.
Circuit build_negate(int n);

/// Conditional bit flip: A_j <- a_N ^ a_j, C_0 <- a_N. 2N+1 CNOTs.
Circuit build_uflip(int n);

/// Clears C_0 (holding a_N) back through the C column. 2N+1 CNOTs.
Circuit build_ures(int n);

/// Signed conditional complement U_±: magnitude bits complemented iff the
/// sign bit is 1, carry included into the sign (so ±0 maps to all zeros).
Circuit build_upm(int n);

/// a - b in (N+1)-bit two's complement on the C register. B is left in
/// complemented form: once the difference occupies the C column there is no
/// scratch space left to run the complement in reverse.
Circuit build_subtractor(int n);

namespace emit {

void uc_tilde(Circuit& c, QubitId a, QubitId cin, QubitId cout, QubitId anc);
void uc_tilde_dagger(Circuit& c, QubitId a, QubitId cin, QubitId cout, QubitId anc);

/// Conditional flip ladder over sign + mag (mag given LSB first) + c0.
void uflip(Circuit& c, QubitId sign, const std::vector<QubitId>& mag_lsb_first, QubitId c0);

/// Reset ladder over sign + the full carry column (LSB first).
void ures(Circuit& c, QubitId sign, const std::vector<QubitId>& carries_lsb_first);

/// Modular increment core: adds the value of carries[0] into mag. The */**
/// X gates on carries[0] are the caller's business.
void plus1_tilde_core(Circuit& c, const std::vector<QubitId>& mag_lsb_first,
                      const std::vector<QubitId>& carries_lsb_first);

/// Full U_± on sign + W magnitude bits + W+1 carries.
void upm(Circuit& c, QubitId sign, const std::vector<QubitId>& mag_lsb_first,
         const std::vector<QubitId>& carries_lsb_first);
void upm_dagger(Circuit& c, QubitId sign, const std::vector<QubitId>& mag_lsb_first,
                const std::vector<QubitId>& carries_lsb_first);

} // namespace emit

} // namespace qalu
