#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qalu/adders.hpp"
#include "qalu/complement.hpp"
#include "qalu/sim.hpp"

using namespace qalu;

TEST_CASE("compose with an empty circuit is the identity") {
    Circuit c = build_uc();
    Circuit empty;
    empty.qubit_count = c.qubit_count;
    Circuit both = compose(c, empty);
    CHECK(both.gates.size() == c.gates.size());
    Circuit other;
    other.qubit_count = 3;
    CHECK_THROWS(compose(c, other));
}

TEST_CASE("compose(c, dagger(c)) acts as identity on basis inputs") {
    Circuit c = build_uc();
    Circuit round = compose(c, dagger(c));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 16; ++t) {
        std::uint64_t in = rng() & 31;
        CHECK(test::run_basis(round, in) == in);
    }
}

TEST_CASE("dagger is an involution and maps CSX to CSXDG") {
    Circuit c = build_p1_onebit();
    Circuit dd = dagger(dagger(c));
    REQUIRE(dd.gates.size() == c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i)
        CHECK(dd.gates[i].same_op(c.gates[i]));

    Circuit one;
    one.qubit_count = 2;
    one.push(Gate::csx(0, 1));
    Circuit d = dagger(one);
    CHECK(d.gates[0].kind == GateKind::CSXDG);
}

TEST_CASE("unitary of U_C composed with its dagger is the identity") {
    Circuit c = build_uc();
    auto m = unitary_of(compose(c, dagger(c)));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t k = 0; k < m.size(); ++k)
            CHECK(std::abs(m[r][k] - (r == k ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("lower is a fixed point on the target alphabet") {
    Circuit c = build_p1_onebit();
    Circuit low = lower(c);
    CHECK(low.gates.size() == c.gates.size());
}

TEST_CASE("lowered CSXDG equals CX^{3/2} exactly") {
    Circuit c;
    c.qubit_count = 2;
    c.push(Gate::csxdg(0, 1));
    auto direct = unitary_of(c);
    auto lowered = unitary_of(lower(c));
    // reference: CNOT then CSX on the same pair
    Circuit ref;
    ref.qubit_count = 2;
    ref.push(Gate::cx(0, 1));
    ref.push(Gate::csx(0, 1));
    auto expect = unitary_of(ref);
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(lowered[r][k] - expect[r][k]) < 1e-12);
            CHECK(std::abs(direct[r][k] - expect[r][k]) < 1e-12);
        }
}

TEST_CASE("swap lowering emits two CNOTs when a side is |0>") {
    Circuit c;
    c.qubit_count = 2;
    c.push(Gate::swap(0, 1, SwapZero::Second));
    CHECK(lower(c).gates.size() == 2);
    Circuit plain;
    plain.qubit_count = 2;
    plain.push(Gate::swap(0, 1));
    CHECK(lower(plain).gates.size() == 3);

    // semantics on the annotated subspace
    Circuit low = lower(c);
    CHECK(test::run_basis(low, 0b01) == 0b10);
    CHECK(test::run_basis(low, 0b00) == 0b00);
}

TEST_CASE("adjacent identical CNOT pair cancels") {
    Circuit c;
    c.qubit_count = 2;
    c.push(Gate::cx(0, 1));
    c.push(Gate::cx(0, 1));
    CHECK(cancel_adjacent_pairs(c).gates.empty());
}

TEST_CASE("cancellation is blocked by an intervening operand use") {
    Circuit c;
    c.qubit_count = 3;
    c.push(Gate::cx(0, 1));
    c.push(Gate::x(1));
    c.push(Gate::cx(0, 1));
    CHECK(cancel_adjacent_pairs(c).gates.size() == 3);
    // an untouched spectator does not block
    Circuit d;
    d.qubit_count = 3;
    d.push(Gate::cx(0, 1));
    d.push(Gate::x(2));
    d.push(Gate::cx(0, 1));
    CHECK(cancel_adjacent_pairs(d).gates.size() == 1);
}

TEST_CASE("one-bit adders reach the reference cancelled counts") {
    GateCounts raw1 = gate_counts(build_p1_onebit());
    CHECK(raw1.cnot == 17);
    CHECK(raw1.csx == 3);
    GateCounts opt1 = gate_counts(cancel_adjacent_pairs(build_p1_onebit()));
    CHECK(opt1.cnot == 15);
    CHECK(opt1.csx == 3);

    GateCounts raw2 = gate_counts(build_p2_onebit());
    CHECK(raw2.cnot == 22);
    CHECK(raw2.csx == 3);
    GateCounts opt2 = gate_counts(cancel_adjacent_pairs(build_p2_onebit()));
    CHECK(opt2.cnot == 20);
    CHECK(opt2.csx == 3);
}

TEST_CASE("gate_counts tallies the carry and sum units") {
    GateCounts uc = gate_counts(build_uc());
    CHECK(uc.cnot == 23);
    CHECK(uc.csx == 3);
    CHECK(uc.two_qubit_total == 26);
    GateCounts us = gate_counts(build_us());
    CHECK(us.cnot == 2);
    Circuit empty;
    empty.qubit_count = 1;
    GateCounts zero = gate_counts(empty);
    CHECK(zero.total() == 0);
    CHECK(zero.depth == 0);
}

TEST_CASE("counts sum to the gate list length") {
    for (const Circuit& c : {build_p1_onebit(), build_uc(), build_upm(3)}) {
        GateCounts g = gate_counts(c);
        CHECK(static_cast<std::size_t>(g.total()) == c.gates.size());
    }
}

TEST_CASE("connectivity validation") {
    Circuit p1 = build_p1_onebit();
    CHECK(validate_connectivity(p1).empty());

    auto lr = make_adder_layout(2, AdderVariant::III);
    Circuit bad;
    bad.qubit_count = lr.layout.qubit_count();
    bad.layout = lr.layout;
    bad.registers = lr.registers;
    bad.push(Gate::cx(bad.registers.qubit("A", 0), bad.registers.qubit("C", 0)));
    CHECK(validate_connectivity(bad).size() == 1);

    Circuit empty;
    empty.qubit_count = lr.layout.qubit_count();
    empty.layout = lr.layout;
    CHECK(validate_connectivity(empty).empty());

    Circuit no_layout;
    no_layout.qubit_count = 2;
    no_layout.push(Gate::cx(0, 1));
    CHECK_THROWS(validate_connectivity(no_layout));

    Circuit macro;
    macro.qubit_count = lr.layout.qubit_count();
    macro.layout = lr.layout;
    macro.push(Gate::swap(0, 1));
    CHECK_THROWS(validate_connectivity(macro));
}

TEST_CASE("prefix to a stage marker recombines into the full list") {
    Circuit c = build_p1_onebit();
    std::size_t cut = c.marker_offset("phi_2");
    Circuit head = c.prefix(cut);
    Circuit tail = c;
    tail.gates.assign(c.gates.begin() + static_cast<std::ptrdiff_t>(cut), c.gates.end());
    Circuit whole = compose(head, tail);
    REQUIRE(whole.gates.size() == c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i)
        CHECK(whole.gates[i].same_op(c.gates[i]));
}

TEST_CASE("lower and cancel preserve circuit action") {
    // macro-free circuits: any basis input
    std::mt19937_64 rng(11);
    Circuit c = build_p2_onebit();
    Circuit low = lower(c);
    Circuit opt = cancel_adjacent_pairs(low);
    for (int t = 0; t < 16; ++t) {
        std::uint64_t in = rng() & 31;
        SparseState s0 = run(c, basis_state(5, in));
        SparseState s1 = run(low, basis_state(5, in));
        SparseState s2 = run(opt, basis_state(5, in));
        for (const auto& [k, a] : s0.amplitudes()) {
            CHECK(std::abs(a - s1.amplitude(k)) < 1e-10);
            CHECK(std::abs(a - s2.amplitude(k)) < 1e-10);
        }
    }

    // |0>-annotated swaps restrict equivalence to the declared input space,
    // so macro-bearing builders are compared on their unit cases
    for (const char* name : {"plus1", "upm", "p3"}) {
        const Unit* u = find_unit(name);
        UnitParams p = u->defaults;
        p.n = 2;
        Circuit raw = u->build(p);
        Circuit lowered = lower(raw);
        Circuit cancelled = cancel_adjacent_pairs(lowered);
        for (const auto& vc : u->cases(raw, p)) {
            SparseState s0 = run(raw, basis_state(raw.qubit_count, vc.input));
            SparseState s1 = run(lowered, basis_state(raw.qubit_count, vc.input));
            SparseState s2 = run(cancelled, basis_state(raw.qubit_count, vc.input));
            for (const auto& [k, a] : s0.amplitudes()) {
                CHECK(std::abs(a - s1.amplitude(k)) < 1e-10);
                CHECK(std::abs(a - s2.amplitude(k)) < 1e-10);
            }
        }
    }
}

TEST_CASE("after lower no SWAP or CSXDG remains") {
    for (const Circuit& c : {build_plus1(3), build_p3(3), build_upm(3)}) {
        Circuit low = lower(c);
        for (const auto& g : low.gates) {
            CHECK(g.kind != GateKind::SWAP);
            CHECK(g.kind != GateKind::CSXDG);
        }
    }
}

TEST_CASE("markers survive lowering at the right offsets") {
    Circuit c = build_p1_onebit();
    Circuit low = lower(c);
    CHECK(low.marker_offset("phi_4") == c.marker_offset("phi_4")); // already lowered
    Circuit p = build_plus1(2);
    Circuit lowp = lower(p);
    (void)lowp; // offsets checked implicitly by the prefix-simulation tests
}
