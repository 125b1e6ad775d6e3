#include "qalu/muldiv.hpp"

#include <stdexcept>
#include <string>

#include "emit_util.hpp"
#include "qalu/adders.hpp"
#include "qalu/complement.hpp"

namespace qalu {

namespace {

Circuit from_layout(LayoutAndRegs lr) {
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    return c;
}

std::vector<QubitId> range_lsb_first(const Register& reg, int lo, int hi) {
    std::vector<QubitId> out;
    for (int s = lo; s <= hi; ++s)
        out.push_back(reg.at_sub(s));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// multiplier

namespace {

struct MulCtx {
    int n;
    const Register* a;
    const Register* b;
    const Register* c;
    const Register* d;
    const Register* e;

    // second-column qubit by row: A_{r-N} above row N-1, B_r below
    QubitId bq(int row) const { return row >= n ? a->at_sub(row - n) : b->at_sub(row); }

    std::vector<QubitId> bq_range(int lo, int hi) const {
        std::vector<QubitId> out;
        for (int r = lo; r <= hi; ++r)
            out.push_back(bq(r));
        return out;
    }
};

void emit_initial_shift(Circuit& c, const MulCtx& m) {
    // moves b one row down; the |0> pad travels with the chain
    for (int k = 0; k < m.n; ++k)
        c.push(Gate::swap(m.bq(k - 1), m.bq(k), SwapZero::First));
}

void emit_digit_shift(Circuit& c, const MulCtx& m, int digit) {
    // rotates the segment rows digit-2..N+digit-1 down by one; only the
    // first swap has a known-|0> side (the pad left by the previous digit)
    for (int j = m.n; j >= 0; --j)
        c.push(Gate::swap(m.bq(digit + j - 1), m.bq(digit + j - 2),
                          j == m.n ? SwapZero::Second : SwapZero::None));
}

void emit_final_shift(Circuit& c, const MulCtx& m) {
    for (int j = m.n; j >= 0; --j)
        c.push(Gate::swap(m.bq(m.n + j - 1), m.bq(m.n + j - 2),
                          j == m.n ? SwapZero::Second : SwapZero::None));
}

} // namespace

Circuit build_multiplier(int n) {
    Circuit c = from_layout(make_multiplier_layout(n));
    MulCtx m{n, &c.registers.at("A"), &c.registers.at("B"), &c.registers.at("C"),
             &c.registers.at("D"), &c.registers.at("E")};

    emit_initial_shift(c, m);
    c.mark("shifted");

    // digit 0: the temporary sum is still empty, so the first partial term
    // is a plain CNOT fan-out of the shifted b
    for (int r = -1; r <= n - 2; ++r)
        c.push(Gate::cx(m.bq(r), m.c->at_sub(r)));
    c.push(Gate::x(m.a->at_sub(0)));
    emit::upm(c, m.a->at_sub(0), m.bq_range(-1, n - 1), range_lsb_first(*m.d, -1, n));
    emit::p3(c, m.bq_range(-1, n - 1), range_lsb_first(*m.c, -1, n), range_lsb_first(*m.e, -1, n));
    c.push(Gate::cx(m.a->at_sub(0), m.c->at_sub(n)));
    emit::upm_dagger(c, m.a->at_sub(0), m.bq_range(-1, n - 1), range_lsb_first(*m.d, -1, n));
    c.push(Gate::x(m.a->at_sub(0)));
    c.mark("digit0");

    for (int k = 1; k < n; ++k) {
        emit_digit_shift(c, m, k);
        emit::p3(c, m.bq_range(k - 1, n + k - 1), range_lsb_first(*m.c, k - 1, n + k),
                 range_lsb_first(*m.e, k - 1, n + k));
        QubitId sign = m.a->at_sub(k);
        QubitId park = m.d->at_sub(n + k);
        c.push(Gate::x(sign));
        emit::upm(c, sign, m.bq_range(k - 1, n + k - 1), range_lsb_first(*m.d, k - 1, n + k));
        c.push(Gate::swap(sign, park, SwapZero::Second));
        emit::p3(c, m.bq_range(k - 1, n + k), range_lsb_first(*m.c, k - 1, n + k + 1),
                 range_lsb_first(*m.e, k - 1, n + k + 1));
        c.push(Gate::swap(sign, park, SwapZero::First));
        c.push(Gate::cx(sign, m.c->at_sub(n + k)));
        emit::upm_dagger(c, sign, m.bq_range(k - 1, n + k - 1), range_lsb_first(*m.d, k - 1, n + k));
        c.push(Gate::x(sign));
        c.mark("digit" + std::to_string(k));
    }

    emit_final_shift(c, m);
    return c;
}

Circuit cleanup_multiplier_inputs(int n) {
    Circuit c = from_layout(make_multiplier_layout(n));
    MulCtx m{n, &c.registers.at("A"), &c.registers.at("B"), &c.registers.at("C"),
             &c.registers.at("D"), &c.registers.at("E")};
    Circuit shifts;
    shifts.qubit_count = c.qubit_count;
    emit_initial_shift(shifts, m);
    for (int k = 1; k < n; ++k)
        emit_digit_shift(shifts, m, k);
    emit_final_shift(shifts, m);
    for (auto it = shifts.gates.rbegin(); it != shifts.gates.rend(); ++it)
        c.push(detail::dagger_of(*it));
    return c;
}

// ---------------------------------------------------------------------------
// divider

namespace {

struct DivCtx {
    int n;       // dividend digits processed by the loop counter below
    int m;       // divisor width
    int digits;  // loop start: N-1, or N when zero_safe
    const Register* bp;
    const Register* av;
    const Register* cv;
    const Register* dp;
    const Register* ev;
};

// One P3-signed addend/sum window with the kinked carry column
void div_add(Circuit& c, const DivCtx& d, int lo, int top) {
    std::vector<QubitId> crole = range_lsb_first(*d.cv, lo, top);
    crole.push_back(d.ev->at_sub(top));
    emit::p3_signed(c, range_lsb_first(*d.bp, lo, top), range_lsb_first(*d.av, lo, top), crole);
}

} // namespace

Circuit build_divider(int n, int m, bool zero_safe, bool with_remainder) {
    if (n < 1 || m < 1 || m > n)
        throw std::invalid_argument("build_divider: need 1 <= M <= N");
    int grid_n = zero_safe ? n + 1 : n;
    Circuit c = from_layout(make_divider_layout(grid_n, m, with_remainder));
    if (zero_safe) {
        // divisor loads one row lower than the standard frame: remap alias B
        RegisterMap regs;
        for (const auto& r : c.registers.all()) {
            if (r.name == "B") {
                const Register& bp = c.registers.at("B'");
                std::vector<QubitId> qs;
                for (int s = m - 1; s >= 0; --s)
                    qs.push_back(bp.at_sub(n + s));
                regs.add_range("B", m - 1, 0, qs);
            } else {
                regs.add(r.name, r.subs, r.qubits);
            }
        }
        c.registers = regs;
    }

    DivCtx d{n, m, zero_safe ? n : n - 1, &c.registers.at("B'"), &c.registers.at("A"),
             &c.registers.at("C"), &c.registers.at("D'"), &c.registers.at("E")};

    if (!zero_safe)
        for (int j = 0; j < m; ++j)
            c.push(Gate::swap(d.bp->at_sub(j + n), d.bp->at_sub(j + n - 1), SwapZero::Second));

    for (int k = d.digits; k >= 0; --k) {
        QubitId top_b = d.bp->at_sub(m + k);
        QubitId top_a = d.av->at_sub(m + k);
        QubitId top_c = d.cv->at_sub(m + k);
        QubitId top_d = d.dp->at_sub(m + k);

        // trial subtraction of the aligned divisor
        c.push(Gate::x(top_b));
        emit::upm(c, top_b, range_lsb_first(*d.bp, k, m + k - 1), range_lsb_first(*d.dp, k, m + k));
        div_add(c, d, k, m + k);
        emit::upm_dagger(c, top_b, range_lsb_first(*d.bp, k, m + k - 1),
                         range_lsb_first(*d.dp, k, m + k));
        c.push(Gate::x(top_b));

        // park the trial sign and clear the window top
        c.push(Gate::swap(top_a, top_b, SwapZero::Second));
        c.push(Gate::swap(top_b, top_d, SwapZero::Second));

        if (k > 0 || with_remainder) {
            // conditional add-back, split per Eq. (27) into two shifted terms
            for (int j = 0; j < m; ++j)
                c.push(Gate::swap(d.bp->at_sub(k + j), d.bp->at_sub(k + j - 1), SwapZero::Second));
            div_add(c, d, k - 1, m + k);
            c.push(Gate::swap(top_b, top_d, SwapZero::First));
            c.push(Gate::x(top_b));
            emit::upm(c, top_b, range_lsb_first(*d.bp, k - 1, m + k - 1),
                      range_lsb_first(*d.dp, k - 1, m + k));
            div_add(c, d, k - 1, m + k);
            emit::upm_dagger(c, top_b, range_lsb_first(*d.bp, k - 1, m + k - 1),
                             range_lsb_first(*d.dp, k - 1, m + k));
            // move the quotient bit to the C column; for a positive divisor
            // the window top holds the carry that annihilated the parked
            // sign, and it stays behind on B'
            c.push(Gate::swap(top_b, top_a));
            c.push(Gate::swap(top_a, top_c, SwapZero::Second));
        } else {
            // quotient digit only; remainder rows stay untouched
            c.push(Gate::swap(top_b, top_d, SwapZero::First));
            c.push(Gate::x(top_b));
            c.push(Gate::swap(top_b, top_a, SwapZero::Second));
            c.push(Gate::swap(top_a, top_c, SwapZero::Second));
        }
        c.mark("digit" + std::to_string(d.digits - k));
    }
    return c;
}

Circuit cleanup_divider_divisor(int n, int m, bool zero_safe, bool with_remainder) {
    int grid_n = zero_safe ? n + 1 : n;
    Circuit c = from_layout(make_divider_layout(grid_n, m, with_remainder));
    const Register& bp = c.registers.at("B'");
    int shifts = n + (with_remainder ? 1 : 0);
    int lo = n - shifts;
    // walk the divisor block back up one row at a time; rows above it may
    // hold the leftover trial-sign bits, which ride down below the divisor
    for (int s = 0; s < shifts; ++s) {
        int r = lo + s;
        for (int j = m - 1; j >= 0; --j)
            c.push(Gate::swap(bp.at_sub(r + j + 1), bp.at_sub(r + j)));
    }
    return c;
}

} // namespace qalu
