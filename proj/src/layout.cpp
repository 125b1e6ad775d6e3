#include "qalu/layout.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace qalu {

GridLayout::GridLayout(std::vector<GridCoord> coords) : coords_(std::move(coords)) {
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        auto key = std::make_pair(coords_[i].row, coords_[i].col);
        if (!seen.emplace(key, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate grid coordinate");
    }
}

const GridCoord& GridLayout::coord(QubitId q) const {
    if (q < 0 || q >= qubit_count())
        throw std::out_of_range("unknown qubit id");
    return coords_[static_cast<std::size_t>(q)];
}

bool GridLayout::adjacent(QubitId p, QubitId q) const {
    const GridCoord& a = coord(p);
    const GridCoord& b = coord(q);
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

void RegisterMap::add(const std::string& name, std::vector<int> subs, std::vector<QubitId> qubits) {
    if (subs.size() != qubits.size())
        throw std::invalid_argument("register subs/qubits size mismatch");
    if (find(name))
        throw std::invalid_argument("duplicate register name: " + name);
    regs_.push_back(Register{name, std::move(subs), std::move(qubits)});
}

void RegisterMap::add_range(const std::string& name, int hi, int lo, const std::vector<QubitId>& qubits_msb_first) {
    std::vector<int> subs;
    for (int s = hi; s >= lo; --s)
        subs.push_back(s);
    add(name, std::move(subs), qubits_msb_first);
}

const Register* RegisterMap::find(const std::string& name) const {
    for (const auto& r : regs_)
        if (r.name == name)
            return &r;
    return nullptr;
}

const Register& RegisterMap::at(const std::string& name) const {
    const Register* r = find(name);
    if (!r)
        throw std::out_of_range("no register named " + name);
    return *r;
}

QubitId RegisterMap::qubit(const std::string& name, int sub) const {
    return at(name).at_sub(sub);
}

QubitId Register::at_sub(int sub) const {
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i] == sub)
            return qubits[i];
    throw std::out_of_range("register " + name + " has no subscript " + std::to_string(sub));
}

std::vector<QubitId> Register::slice(int hi, int lo) const {
    std::vector<QubitId> out;
    for (int s = hi; s >= lo; --s)
        out.push_back(at_sub(s));
    return out;
}

namespace {

// Accumulates one column at a time, assigning dense ids top row first.
struct Builder {
    std::vector<GridCoord> coords;
    RegisterMap regs;

    // Adds a register spanning rows hi..lo of `col`, top first.
    std::vector<QubitId> column(const std::string& name, int col, int hi, int lo) {
        std::vector<QubitId> ids;
        for (int r = hi; r >= lo; --r) {
            ids.push_back(static_cast<QubitId>(coords.size()));
            coords.push_back({r, col});
        }
        regs.add_range(name, hi, lo, ids);
        return ids;
    }

    // Alias over already placed qubits, found by coordinate; subscripts are
    // shifted down by `sub_offset` relative to the rows.
    void alias(const std::string& name, int col, int hi, int lo, int sub_offset = 0) {
        std::vector<QubitId> ids;
        for (int r = hi; r >= lo; --r)
            ids.push_back(find_at(r, col));
        regs.add_range(name, hi - sub_offset, lo - sub_offset, ids);
    }

    QubitId find_at(int row, int col) const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i].row == row && coords[i].col == col)
                return static_cast<QubitId>(i);
        throw std::logic_error("no qubit at requested coordinate");
    }

    LayoutAndRegs done() { return {GridLayout(std::move(coords)), std::move(regs)}; }
};

void require_positive(int n) {
    if (n < 1)
        throw std::invalid_argument("N must be >= 1");
}

} // namespace

LayoutAndRegs make_adder_layout(int n, AdderVariant variant) {
    require_positive(n);
    Builder b;
    switch (variant) {
    case AdderVariant::I:
        b.column("A", 0, n - 1, 0);
        b.column("C", 1, n + 1, 0);
        b.column("B", 2, n - 1, 0);
        break;
    case AdderVariant::II:
        b.column("A", 0, n - 1, 0);
        b.column("B", 1, n - 1, 0);
        b.column("C", 2, n + 1, 0);
        break;
    case AdderVariant::III:
        b.column("A", 0, n - 1, 0);
        b.column("B", 1, n, 0);
        b.column("C", 2, n, 0);
        break;
    }
    return b.done();
}

LayoutAndRegs make_plus1_layout(int n) {
    require_positive(n);
    Builder b;
    b.column("A", 0, n, 0);
    b.column("C", 1, n + 1, 0);
    return b.done();
}

LayoutAndRegs make_complement_layout(int n) {
    require_positive(n);
    Builder b;
    b.column("A", 0, n, 0);
    b.column("C", 1, n, 0);
    return b.done();
}

LayoutAndRegs make_subtractor_layout(int n) {
    require_positive(n);
    Builder b;
    b.column("A", 0, n - 1, 0);
    b.column("B", 1, n, 0);
    b.column("C", 2, n + 1, 0);
    return b.done();
}

LayoutAndRegs make_multiplier_layout(int n) {
    require_positive(n);
    Builder b;
    b.column("D", 0, 2 * n - 1, -1);
    // Second column: A_{N-1..0} stacked above B_{N-1..-1}.
    std::vector<QubitId> a_ids, b_ids;
    for (int r = 2 * n - 1; r >= n; --r) {
        a_ids.push_back(static_cast<QubitId>(b.coords.size()));
        b.coords.push_back({r, 1});
    }
    for (int r = n - 1; r >= -1; --r) {
        b_ids.push_back(static_cast<QubitId>(b.coords.size()));
        b.coords.push_back({r, 1});
    }
    b.regs.add_range("A", n - 1, 0, a_ids);
    b.regs.add_range("B", n - 1, -1, b_ids);
    b.column("C", 2, 2 * n, -1);
    b.column("E", 3, 2 * n, -1);
    return b.done();
}

LayoutAndRegs make_divider_layout(int n, int m, bool with_remainder) {
    require_positive(n);
    if (m < 1 || m > n)
        throw std::invalid_argument("divider requires 1 <= M <= N");
    (void)with_remainder; // grid is identical; the flag shapes the circuit tail
    int top = n + m - 1;
    Builder b;
    b.column("D'", 0, top, -1);
    b.column("B'", 1, top, -1);
    b.column("A", 2, top, -1);
    b.column("C", 3, top, -1);
    b.column("E", 4, top, -1);
    // Unprimed aliases of Alg. 6: X_j in the top block is X'_{j+N}.
    b.alias("D", 0, top, n, n);
    b.alias("B", 1, top, n, n);
    b.alias("A'", 2, top, n, n);
    b.alias("C'", 3, top, n, n);
    b.alias("E'", 4, top, n, n);
    return b.done();
}

LayoutAndRegs make_uc_layout() {
    Builder b;
    b.column("A", 0, 0, 0);
    b.column("B", 1, 0, 0);
    b.column("C", 2, 2, 0);
    return b.done();
}

LayoutAndRegs make_us_layout() {
    Builder b;
    b.column("A", 0, 0, 0);
    b.column("B", 1, 0, 0);
    b.column("C", 2, 0, 0);
    return b.done();
}

LayoutAndRegs make_uc_tilde_layout() {
    Builder b;
    b.column("A", 0, 0, 0);
    b.column("C", 1, 2, 0);
    return b.done();
}

} // namespace qalu
