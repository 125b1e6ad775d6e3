#pragma once

#include "qalu/circuit.hpp"

namespace qalu {

/// Long-multiplication multiplier: C_{2N..0} <- a*b, D/E ancillas restored,
/// A/B columns left in the shifted configuration. Markers "digit<k>" sit
/// after each partial-product block.
Circuit build_multiplier(int n);

/// Reversed shift sequence restoring the multiplier's A/B columns.
Circuit cleanup_multiplier_inputs(int n);

/// Long-division divider. For b > 0: quotient in C subs N+M-1..M (one extra
/// flag bit on top with zero_safe), remainder in A subs M-1..0 when
/// with_remainder. Markers "digit<k>" per dividend digit.
Circuit build_divider(int n, int m, bool zero_safe, bool with_remainder);

/// Shifts the divisor back up to its input rows (quotient and remainder
/// registers untouched).
Circuit cleanup_divider_divisor(int n, int m, bool zero_safe, bool with_remainder);

} // namespace qalu
