#include "qalu/complement.hpp"

#include <stdexcept>

#include "emit_util.hpp"
#include "qalu/adders.hpp"

namespace qalu {

namespace emit {

void uc_tilde(Circuit& c, QubitId a, QubitId cin, QubitId cout, QubitId anc) {
    // X^{abar/2} onto the ancilla, routed through the carry pair
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(a, cin));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::csx(cout, anc));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(a, cin));
    c.push(Gate::cx(cin, cout));
    // two-CNOT swap onto the carry-out slot
    c.push(Gate::cx(anc, cout));
    c.push(Gate::cx(cout, anc));
    // X^{cin/2}
    c.push(Gate::csx(cin, cout));
    // CX^{3/2} controlled on abar^cin
    c.push(Gate::cx(a, cin));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::csx(cin, cout));
    c.push(Gate::cx(a, cin));
}

void uc_tilde_dagger(Circuit& c, QubitId a, QubitId cin, QubitId cout, QubitId anc) {
    detail::emit_dagger(c, [&](Circuit& cc) { uc_tilde(cc, a, cin, cout, anc); });
}

void uflip(Circuit& c, QubitId sign, const std::vector<QubitId>& mag, QubitId c0) {
    const int w = static_cast<int>(mag.size());
    if (w < 1)
        throw std::invalid_argument("uflip: empty magnitude");
    auto M = [&](int k) { return mag[static_cast<std::size_t>(k)]; };
    // first CNOT of each pair while the control is still unflipped
    c.push(Gate::cx(M(0), c0));
    for (int k = 1; k < w; ++k)
        c.push(Gate::cx(M(k), M(k - 1)));
    c.push(Gate::cx(sign, M(w - 1)));
    // second pass with flipped controls; each target telescopes to sign^bit
    for (int k = w - 1; k >= 1; --k)
        c.push(Gate::cx(M(k), M(k - 1)));
    c.push(Gate::cx(M(0), c0));
}

void ures(Circuit& c, QubitId sign, const std::vector<QubitId>& carries) {
    const int l = static_cast<int>(carries.size());
    if (l < 1)
        throw std::invalid_argument("ures: empty carry column");
    auto C = [&](int k) { return carries[static_cast<std::size_t>(k)]; };
    if (l == 1) {
        c.push(Gate::cx(sign, C(0)));
        return;
    }
    c.push(Gate::cx(sign, C(l - 1)));
    for (int k = l - 1; k >= 2; --k)
        c.push(Gate::cx(C(k), C(k - 1)));
    c.push(Gate::cx(C(1), C(0)));
    for (int k = 2; k <= l - 1; ++k)
        c.push(Gate::cx(C(k), C(k - 1)));
    c.push(Gate::cx(sign, C(l - 1)));
}

void plus1_tilde_core(Circuit& c, const std::vector<QubitId>& mag, const std::vector<QubitId>& carries) {
    const int v = static_cast<int>(mag.size());
    if (static_cast<int>(carries.size()) < v + 1)
        throw std::invalid_argument("plus1_tilde_core: need V+1 carry qubits");
    auto M = [&](int k) { return mag[static_cast<std::size_t>(k)]; };
    auto C = [&](int k) { return carries[static_cast<std::size_t>(k)]; };
    for (int k = 0; k <= v - 2; ++k)
        uc_tilde(c, M(k), C(k), C(k + 1), C(k + 2));
    for (int k = v - 1; k >= 1; --k) {
        c.push(Gate::cx(C(k), M(k)));
        uc_tilde_dagger(c, M(k - 1), C(k - 1), C(k), C(k + 1));
    }
    c.push(Gate::cx(C(0), M(0)));
}

namespace {

// S ^= f & x on the square (f, x, scratch, s); scratch starts and ends |0>.
// X^{f*x} = X^{f/2} X^{x/2} X^{3(f^x)/2}.
void sign_carry_gadget(Circuit& c, QubitId s, QubitId f, QubitId x, QubitId scratch) {
    c.push(Gate::csx(f, s));
    c.push(Gate::cx(x, scratch));
    c.push(Gate::csx(scratch, s));
    c.push(Gate::cx(x, scratch));
    c.push(Gate::cx(f, x));
    c.push(Gate::cx(x, scratch));
    c.push(Gate::cx(scratch, s));
    c.push(Gate::csx(scratch, s));
    c.push(Gate::cx(x, scratch));
    c.push(Gate::cx(f, x));
}

} // namespace

void upm(Circuit& c, QubitId sign, const std::vector<QubitId>& mag, const std::vector<QubitId>& carries) {
    const int w = static_cast<int>(mag.size());
    if (static_cast<int>(carries.size()) != w + 1)
        throw std::invalid_argument("upm: need W+1 carry qubits");
    auto M = [&](int k) { return mag[static_cast<std::size_t>(k)]; };
    auto C = [&](int k) { return carries[static_cast<std::size_t>(k)]; };

    uflip(c, sign, mag, C(0));
    for (int k = 0; k <= w - 2; ++k)
        uc_tilde(c, M(k), C(k), C(k + 1), C(k + 2));
    // carry out of the top magnitude digit folds into the sign, so the
    // complement of zero is a string of zeros
    sign_carry_gadget(c, sign, M(w - 1), C(w - 1), C(w));
    for (int k = w - 1; k >= 1; --k) {
        c.push(Gate::cx(C(k), M(k)));
        uc_tilde_dagger(c, M(k - 1), C(k - 1), C(k), C(k + 1));
    }
    c.push(Gate::cx(C(0), M(0)));
    ures(c, sign, carries);
}

void upm_dagger(Circuit& c, QubitId sign, const std::vector<QubitId>& mag, const std::vector<QubitId>& carries) {
    detail::emit_dagger(c, [&](Circuit& cc) { upm(cc, sign, mag, carries); });
}

} // namespace emit

namespace {

Circuit from_layout(LayoutAndRegs lr) {
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    return c;
}

} // namespace

Circuit build_uc_tilde() {
    Circuit c = from_layout(make_uc_tilde_layout());
    emit::uc_tilde(c, c.registers.qubit("A", 0), c.registers.qubit("C", 0),
                   c.registers.qubit("C", 1), c.registers.qubit("C", 2));
    return c;
}

Circuit build_plus1(int n) {
    Circuit c = from_layout(make_plus1_layout(n));
    auto q = [&](const char* r, int s) { return c.registers.qubit(r, s); };
    c.push(Gate::x(q("C", 0)));
    for (int k = 0; k < n; ++k)
        emit::uc_tilde(c, q("A", k), q("C", k), q("C", k + 1), q("C", k + 2));
    c.push(Gate::swap(q("A", n), q("C", n), SwapZero::First));
    for (int k = n - 1; k >= 1; --k) {
        c.push(Gate::cx(q("C", k), q("A", k)));
        emit::uc_tilde_dagger(c, q("A", k - 1), q("C", k - 1), q("C", k), q("C", k + 1));
    }
    c.push(Gate::cx(q("C", 0), q("A", 0)));
    c.push(Gate::x(q("C", 0)));
    return c;
}

Circuit build_plus1_tilde(int n) {
    Circuit c = from_layout(make_plus1_layout(n));
    std::vector<QubitId> mag, carries;
    for (int k = 0; k < n; ++k)
        mag.push_back(c.registers.qubit("A", k));
    for (int k = 0; k <= n; ++k)
        carries.push_back(c.registers.qubit("C", k));
    c.push(Gate::x(carries[0]));
    emit::plus1_tilde_core(c, mag, carries);
    c.push(Gate::x(carries[0]));
    return c;
}

Circuit build_negate(int n) {
    Circuit c = from_layout(make_complement_layout(n));
    std::vector<QubitId> mag, carries;
    for (int k = 0; k < n; ++k)
        mag.push_back(c.registers.qubit("A", k));
    for (int k = 0; k <= n; ++k)
        carries.push_back(c.registers.qubit("C", k));
    for (int k = n; k >= 0; --k)
        c.push(Gate::x(c.registers.qubit("A", k)));
    c.push(Gate::x(carries[0]));
    emit::plus1_tilde_core(c, mag, carries);
    c.push(Gate::x(carries[0]));
    return c;
}

namespace {

Circuit complement_unit(int n, void (*emitter)(Circuit&, QubitId, const std::vector<QubitId>&,
                                               const std::vector<QubitId>&)) {
    Circuit c = from_layout(make_complement_layout(n));
    std::vector<QubitId> mag, carries;
    for (int k = 0; k < n; ++k)
        mag.push_back(c.registers.qubit("A", k));
    for (int k = 0; k <= n; ++k)
        carries.push_back(c.registers.qubit("C", k));
    emitter(c, c.registers.qubit("A", n), mag, carries);
    return c;
}

} // namespace

Circuit build_uflip(int n) {
    Circuit c = from_layout(make_complement_layout(n));
    std::vector<QubitId> mag;
    for (int k = 0; k < n; ++k)
        mag.push_back(c.registers.qubit("A", k));
    emit::uflip(c, c.registers.qubit("A", n), mag, c.registers.qubit("C", 0));
    return c;
}

Circuit build_ures(int n) {
    return complement_unit(n, [](Circuit& c, QubitId sign, const std::vector<QubitId>&,
                                 const std::vector<QubitId>& carries) { emit::ures(c, sign, carries); });
}

Circuit build_upm(int n) {
    return complement_unit(n, [](Circuit& c, QubitId sign, const std::vector<QubitId>& mag,
                                 const std::vector<QubitId>& carries) { emit::upm(c, sign, mag, carries); });
}

Circuit build_subtractor(int n) {
    Circuit c = from_layout(make_subtractor_layout(n));
    auto q = [&](const char* r, int s) { return c.registers.qubit(r, s); };
    std::vector<QubitId> bmag, carries;
    for (int k = 0; k <= n; ++k)
        bmag.push_back(q("B", k));
    for (int k = 0; k <= n + 1; ++k)
        carries.push_back(q("C", k));

    // two's complement of -b over the full N+1 bits, so b = 0 maps to zero
    for (int k = n; k >= 0; --k)
        c.push(Gate::x(q("B", k)));
    c.push(Gate::x(carries[0]));
    emit::plus1_tilde_core(c, bmag, carries);
    c.push(Gate::x(carries[0]));
    c.mark("complemented");

    for (int k = 0; k < n; ++k)
        emit::p2_onebit(c, q("A", k), q("B", k), q("C", k), q("C", k + 1), q("C", k + 2), false);
    c.push(Gate::cx(q("B", n), q("C", n)));
    return c;
}

} // namespace qalu
