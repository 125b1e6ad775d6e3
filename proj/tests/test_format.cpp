#include <doctest.h>

#include "helpers.hpp"
#include "qalu/adders.hpp"
#include "qalu/format.hpp"
#include "qalu/muldiv.hpp"
#include "qalu/sim.hpp"

using namespace qalu;

TEST_CASE("print/parse round-trips byte-exactly on builder outputs") {
    for (const Circuit& raw : {build_p3(3), build_p1(2), build_uc(),
                               build_divider(2, 2, true, true), build_multiplier(2)}) {
        Circuit c = lower(raw);
        std::string text = print_circuit(c);
        Circuit back = parse_circuit(text);
        CHECK(print_circuit(back) == text);
        CHECK(back.qubit_count == c.qubit_count);
        CHECK(back.gates.size() == c.gates.size());
        CHECK(*back.layout == *c.layout);
        CHECK(back.registers == c.registers);
    }
}

TEST_CASE("parsed circuits simulate identically") {
    Circuit c = lower(build_p3(2));
    Circuit back = parse_circuit(print_circuit(c));
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) {
            std::uint64_t in = set_bits(0, c.registers.at("A").qubits, a);
            in = set_bits(in, c.registers.at("B").slice(1, 0), b);
            CHECK(test::run_basis(back, in) == test::run_basis(c, in));
        }
}

TEST_CASE("header comments survive the round trip") {
    Circuit c = lower(build_us());
    c.header_comments.push_back("unit us");
    std::string text = print_circuit(c);
    CHECK(text.rfind("# unit us\n", 0) == 0);
    Circuit back = parse_circuit(text);
    REQUIRE(back.header_comments.size() == 1);
    CHECK(back.header_comments[0] == "unit us");
    CHECK(print_circuit(back) == text);
}

TEST_CASE("hand-written file with negative rows parses") {
    std::string text =
        "qubits 3\n"
        "layout grid\n"
        "map A[0] -1 0\n"
        "map A[-1] 0 0\n"
        "map C[0] 0 1\n"
        "x 0\n"
        "cx 0 1\n"
        "csx 1 2\n";
    Circuit c = parse_circuit(text);
    CHECK(c.qubit_count == 3);
    CHECK(c.registers.at("A").at_sub(-1) == 1);
    CHECK(c.layout->coord(0).row == -1);
    CHECK(c.gates.size() == 3);
    CHECK(c.gates[2].kind == GateKind::CSX);
}

TEST_CASE("parse rejects malformed files") {
    CHECK_THROWS(parse_circuit("layout grid\n"));
    CHECK_THROWS(parse_circuit("qubits 1\n"));
    CHECK_THROWS(parse_circuit("qubits 2\nlayout grid\nmap A[0] 0 0\n")); // count mismatch
    CHECK_THROWS(parse_circuit("qubits 1\nlayout grid\nmap A[0] 0 0\nfoo 1\n"));
    CHECK_THROWS(parse_circuit("qubits 1\nlayout grid\nmap A[0] 0 0\ncx 0 0\n"));
    CHECK_THROWS(parse_circuit("qubits 1\nlayout grid\nmap A[0] 0 0\ncx 0 5\n"));
    CHECK_THROWS(parse_circuit("qubits 1\nlayout torus\nmap A[0] 0 0\n"));
}

TEST_CASE("printing unlowered circuits is rejected") {
    Circuit c;
    c.qubit_count = 2;
    c.layout = GridLayout({{0, 0}, {0, 1}});
    c.registers.add_range("A", 1, 0, {0, 1});
    c.push(Gate::swap(0, 1));
    CHECK_THROWS(print_circuit(c));
    Circuit d;
    d.qubit_count = 2;
    d.push(Gate::cx(0, 1));
    CHECK_THROWS(print_circuit(d)); // no layout
}

TEST_CASE("long-range gates parse but fail connectivity validation") {
    std::string text =
        "qubits 3\n"
        "layout grid\n"
        "map A[2] 2 0\n"
        "map A[1] 1 0\n"
        "map A[0] 0 0\n"
        "cx 0 2\n";
    Circuit c = parse_circuit(text);
    CHECK(validate_connectivity(c).size() == 1);
}
