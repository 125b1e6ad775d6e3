#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qalu {

using QubitId = int;

struct GridCoord {
    int row = 0;  // weight index; negative rows are allowed (B_{-1} etc.)
    int col = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// 2D grid placement, one coordinate per qubit id.
class GridLayout {
public:
    GridLayout() = default;
    explicit GridLayout(std::vector<GridCoord> coords);

    int qubit_count() const { return static_cast<int>(coords_.size()); }
    const GridCoord& coord(QubitId q) const;
    const std::vector<GridCoord>& coords() const { return coords_; }

    /// True iff the two qubits sit at Manhattan distance exactly 1.
    bool adjacent(QubitId p, QubitId q) const;

    friend bool operator==(const GridLayout&, const GridLayout&) = default;

private:
    std::vector<GridCoord> coords_;
};

/// One named register: qubits listed most-significant first, each with its
/// integer subscript.
struct Register {
    std::string name;
    std::vector<int> subs;       // most-significant first
    std::vector<QubitId> qubits; // parallel to subs

    int width() const { return static_cast<int>(qubits.size()); }
    QubitId at_sub(int sub) const;
    /// Qubits for subscripts hi..lo, most-significant first.
    std::vector<QubitId> slice(int hi, int lo) const;

    friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered collection of named registers. Aliases (several names for one
/// qubit) are permitted; serialization order is definition order.
class RegisterMap {
public:
    void add(const std::string& name, std::vector<int> subs, std::vector<QubitId> qubits);
    /// Adds a register whose subscripts run hi..lo (descending).
    void add_range(const std::string& name, int hi, int lo, const std::vector<QubitId>& qubits_msb_first);

    const Register* find(const std::string& name) const;
    const Register& at(const std::string& name) const;
    QubitId qubit(const std::string& name, int sub) const;
    const std::vector<Register>& all() const { return regs_; }

    friend bool operator==(const RegisterMap&, const RegisterMap&) = default;

private:
    std::vector<Register> regs_;
};

enum class AdderVariant { I = 1, II = 2, III = 3 };

struct LayoutAndRegs {
    GridLayout layout;
    RegisterMap registers;
};

/// Fig. 2c/2d/4a layouts. 3N+2 qubits in every variant.
LayoutAndRegs make_adder_layout(int n, AdderVariant variant);

/// Fig. 6a layout: columns A_{N..0} and C_{N+1..0}; 2N+3 qubits.
LayoutAndRegs make_plus1_layout(int n);

/// Two columns A_{N..0}, C_{N..0} (Fig. 6a without C_{N+1}); used by the
/// bit-flip, reset and conditional-complement units.
LayoutAndRegs make_complement_layout(int n);

/// Variant-III grid with one extra C row: columns A_{N-1..0}, B_{N..0},
/// C_{N+1..0}; 3N+3 qubits.
LayoutAndRegs make_subtractor_layout(int n);

/// Fig. 9a layout: columns D, A/B, C, E. 8N+6 qubits (see README notes on
/// the column heights).
LayoutAndRegs make_multiplier_layout(int n);

/// Fig. 10a layout: five columns, rows -1..N+M-1, 5(N+M+1) qubits.
/// Registers use the unified subscripts of the long-division algorithm;
/// aliases A' (dividend window top), B (divisor input) and D are exposed.
LayoutAndRegs make_divider_layout(int n, int m, bool with_remainder);

/// Single carry unit layouts (5 and 4 qubits).
LayoutAndRegs make_uc_layout();
LayoutAndRegs make_us_layout();
LayoutAndRegs make_uc_tilde_layout();

} // namespace qalu
