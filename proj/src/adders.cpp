#include "qalu/adders.hpp"

#include <stdexcept>

#include "emit_util.hpp"

namespace qalu {

namespace {

// Everything up to the phi_4 line of the second one-bit adder; shared with
// the carry unit.
void p2_prefix(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc,
               bool with_markers) {
    // route a^b through C' and rotate the ancilla by sqrt(X)
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::csx(cout, anc));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(cin, cout));
    if (with_markers) c.mark("phi_1");
    // two-CNOT swap, C' starts at |0>
    c.push(Gate::cx(anc, cout));
    c.push(Gate::cx(cout, anc));
    if (with_markers) c.mark("phi_2");
    // X^{(a^cin)/2}: A reaches C only through B
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(b, cin));
    c.push(Gate::csx(cin, cout));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(b, cin));
    if (with_markers) c.mark("phi_3");
    // X^{(b^cin)/2}
    c.push(Gate::cx(b, cin));
    c.push(Gate::csx(cin, cout));
    c.push(Gate::cx(b, cin));
    if (with_markers) c.mark("phi_4");
}

} // namespace

namespace emit {

void p1_onebit(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc,
               bool with_markers) {
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(a, cin));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::csx(cout, anc));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(a, cin));
    c.push(Gate::cx(cin, cout));
    if (with_markers) c.mark("phi_1");
    c.push(Gate::cx(anc, cout));
    c.push(Gate::cx(cout, anc));
    if (with_markers) c.mark("phi_2");
    c.push(Gate::cx(a, cin));
    c.push(Gate::csx(cin, cout));
    c.push(Gate::cx(a, cin));
    if (with_markers) c.mark("phi_3");
    c.push(Gate::cx(b, cin));
    c.push(Gate::csx(cin, cout));
    c.push(Gate::cx(b, cin));
    if (with_markers) c.mark("phi_4");
    // sum onto C, then X^{a^b^cin} onto C'
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(a, cin));
    c.push(Gate::cx(cin, cout));
}

void p2_onebit(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc,
               bool with_markers) {
    p2_prefix(c, a, b, cin, cout, anc, with_markers);
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(a, b));
}

void uc(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc) {
    p2_prefix(c, a, b, cin, cout, anc, false);
    // X^{a^b^cin} onto C', then restore C and B
    c.push(Gate::cx(a, b));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(cin, cout));
    c.push(Gate::cx(b, cin));
    c.push(Gate::cx(a, b));
}

void uc_dagger(Circuit& c, QubitId a, QubitId b, QubitId cin, QubitId cout, QubitId anc) {
    detail::emit_dagger(c, [&](Circuit& cc) { uc(cc, a, b, cin, cout, anc); });
}

void us(Circuit& c, QubitId a, QubitId b, QubitId cin) {
    c.push(Gate::cx(cin, b));
    c.push(Gate::cx(a, b));
}

void p3(Circuit& c, const std::vector<QubitId>& arole, const std::vector<QubitId>& brole,
        const std::vector<QubitId>& crole) {
    const int w = static_cast<int>(arole.size());
    if (static_cast<int>(brole.size()) != w + 1 || static_cast<int>(crole.size()) != w + 1)
        throw std::invalid_argument("p3: role widths must be W, W+1, W+1");
    auto A = [&](int k) { return arole[static_cast<std::size_t>(k)]; };
    auto B = [&](int k) { return brole[static_cast<std::size_t>(k)]; };
    auto C = [&](int k) { return crole[static_cast<std::size_t>(k)]; };

    // carry sweep; the top unit borrows B_W as its scratch
    for (int k = 0; k < w; ++k)
        uc(c, A(k), B(k), C(k), C(k + 1), k + 2 <= w ? C(k + 2) : B(w));
    c.push(Gate::swap(B(w), C(w), SwapZero::First));
    for (int k = w - 1; k >= 1; --k) {
        us(c, A(k), B(k), C(k));
        uc_dagger(c, A(k - 1), B(k - 1), C(k - 1), C(k), C(k + 1));
    }
    c.push(Gate::cx(A(0), B(0)));
}

void p3_signed(Circuit& c, const std::vector<QubitId>& arole, const std::vector<QubitId>& brole,
               const std::vector<QubitId>& crole) {
    const int v = static_cast<int>(arole.size());
    if (static_cast<int>(brole.size()) != v || static_cast<int>(crole.size()) != v + 1)
        throw std::invalid_argument("p3_signed: role widths must be V, V, V+1");
    auto A = [&](int k) { return arole[static_cast<std::size_t>(k)]; };
    auto B = [&](int k) { return brole[static_cast<std::size_t>(k)]; };
    auto C = [&](int k) { return crole[static_cast<std::size_t>(k)]; };

    if (v == 1) {
        c.push(Gate::cx(A(0), B(0)));
        return;
    }
    for (int k = 0; k < v - 1; ++k)
        uc(c, A(k), B(k), C(k), C(k + 1), C(k + 2));
    // top digit keeps only the sum; the overflow carry is never formed
    c.push(Gate::cx(C(v - 1), B(v - 1)));
    c.push(Gate::cx(A(v - 1), B(v - 1)));
    uc_dagger(c, A(v - 2), B(v - 2), C(v - 2), C(v - 1), C(v));
    for (int k = v - 2; k >= 1; --k) {
        us(c, A(k), B(k), C(k));
        uc_dagger(c, A(k - 1), B(k - 1), C(k - 1), C(k), C(k + 1));
    }
    c.push(Gate::cx(A(0), B(0)));
}

} // namespace emit

namespace {

Circuit onebit_adder(AdderVariant variant) {
    auto lr = make_adder_layout(1, variant);
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    QubitId a = c.registers.qubit("A", 0);
    QubitId b = c.registers.qubit("B", 0);
    QubitId c0 = c.registers.qubit("C", 0);
    QubitId c1 = c.registers.qubit("C", 1);
    QubitId c2 = c.registers.qubit("C", 2);
    if (variant == AdderVariant::I)
        emit::p1_onebit(c, a, b, c0, c1, c2, true);
    else
        emit::p2_onebit(c, a, b, c0, c1, c2, true);
    return c;
}

Circuit multibit_adder(int n, AdderVariant variant) {
    auto lr = make_adder_layout(n, variant);
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    for (int k = 0; k < n; ++k) {
        QubitId a = c.registers.qubit("A", k);
        QubitId b = c.registers.qubit("B", k);
        QubitId c0 = c.registers.qubit("C", k);
        QubitId c1 = c.registers.qubit("C", k + 1);
        QubitId c2 = c.registers.qubit("C", k + 2);
        if (variant == AdderVariant::I)
            emit::p1_onebit(c, a, b, c0, c1, c2, false);
        else
            emit::p2_onebit(c, a, b, c0, c1, c2, false);
        c.mark("digit" + std::to_string(k));
    }
    return c;
}

} // namespace

Circuit build_p1_onebit() { return onebit_adder(AdderVariant::I); }
Circuit build_p2_onebit() { return onebit_adder(AdderVariant::II); }
Circuit build_p1(int n) { return multibit_adder(n, AdderVariant::I); }
Circuit build_p2(int n) { return multibit_adder(n, AdderVariant::II); }

Circuit build_uc() {
    auto lr = make_uc_layout();
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    emit::uc(c, c.registers.qubit("A", 0), c.registers.qubit("B", 0), c.registers.qubit("C", 0),
             c.registers.qubit("C", 1), c.registers.qubit("C", 2));
    return c;
}

Circuit build_us() {
    auto lr = make_us_layout();
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    emit::us(c, c.registers.qubit("A", 0), c.registers.qubit("B", 0), c.registers.qubit("C", 0));
    return c;
}

Circuit build_p3(int n) {
    auto lr = make_adder_layout(n, AdderVariant::III);
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    std::vector<QubitId> arole, brole, crole;
    for (int k = 0; k < n; ++k)
        arole.push_back(c.registers.qubit("A", k));
    for (int k = 0; k <= n; ++k) {
        brole.push_back(c.registers.qubit("B", k));
        crole.push_back(c.registers.qubit("C", k));
    }
    emit::p3(c, arole, brole, crole);
    return c;
}

Circuit build_p3_signed(int n) {
    auto lr = make_adder_layout(n, AdderVariant::III);
    Circuit c;
    c.qubit_count = lr.layout.qubit_count();
    c.layout = std::move(lr.layout);
    c.registers = std::move(lr.registers);
    std::vector<QubitId> arole, brole, crole;
    for (int k = 0; k < n; ++k) {
        arole.push_back(c.registers.qubit("A", k));
        brole.push_back(c.registers.qubit("B", k));
    }
    for (int k = 0; k <= n; ++k)
        crole.push_back(c.registers.qubit("C", k));
    emit::p3_signed(c, arole, brole, crole);
    return c;
}

} // namespace qalu
