#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qalu/adders.hpp"
#include "qalu/complement.hpp"
#include "qalu/sim.hpp"

using namespace qalu;

TEST_CASE("basis_state") {
    SparseState s = basis_state(2, 0b00);
    CHECK(s.support_size() == 1);
    CHECK(std::abs(s.amplitude(0) - 1.0) < 1e-15);
    SparseState t = basis_state(5, 0b11000);
    CHECK(std::abs(t.amplitude(0b11000) - 1.0) < 1e-15);
    CHECK(t.norm_squared() == doctest::Approx(1.0));
    CHECK_THROWS(basis_state(2, 0b100));
}

TEST_CASE("superpose") {
    double r = 1.0 / std::sqrt(2.0);
    SparseState bell = superpose(5, {{r, 0b00000}, {r, 0b00011}});
    CHECK(bell.support_size() == 2);
    SparseState single = superpose(2, {{1.0, 0b01}});
    CHECK(single == basis_state(2, 0b01));
    CHECK_NOTHROW(superpose(2, {{0.6, 0b00}, {0.8, 0b11}}));
    CHECK_THROWS(superpose(2, {{0.6, 0b00}, {0.6, 0b11}}));
    CHECK_THROWS(superpose(2, {{r, 0b00}, {r, 0b00}}));
}

TEST_CASE("CSX semantics match the square root of X") {
    // control is qubit 1, target qubit 0
    SparseState s = apply(basis_state(2, 0b10), Gate::csx(1, 0));
    CHECK(s.support_size() == 2);
    CHECK(std::abs(s.amplitude(0b10) - Amplitude(0.5, 0.5)) < 1e-15);
    CHECK(std::abs(s.amplitude(0b11) - Amplitude(0.5, -0.5)) < 1e-15);

    SparseState idle = apply(basis_state(2, 0b00), Gate::csx(1, 0));
    CHECK(idle == basis_state(2, 0b00));

    SparseState twice = apply(s, Gate::csx(1, 0));
    CHECK(twice.support_size() == 1);
    CHECK(std::abs(twice.amplitude(0b11) - 1.0) < 1e-12);

    SparseState undo = apply(s, Gate::csxdg(1, 0));
    CHECK(undo.support_size() == 1);
    CHECK(std::abs(undo.amplitude(0b10) - 1.0) < 1e-12);
}

TEST_CASE("run applies gates in order") {
    Circuit empty;
    empty.qubit_count = 3;
    SparseState s = basis_state(3, 0b101);
    CHECK(run(empty, s) == s);

    Circuit p1 = build_p1_onebit();
    // spec ordering a=1, b=1, c_in=0: qubits are A=0, C=1..3, B=4
    std::uint64_t in = 0;
    in = set_bits(in, p1.registers.at("A").qubits, 1);
    in = set_bits(in, p1.registers.at("B").qubits, 1);
    std::uint64_t out = test::run_basis(p1, in);
    CHECK(test::read_bits(out, p1.registers.at("C").slice(0, 0)) == 0); // s = 0
    CHECK(test::read_bits(out, p1.registers.at("C").slice(1, 1)) == 1); // carry
    CHECK(test::read_bits(out, p1.registers.at("C").slice(2, 2)) == 0);
}

TEST_CASE("Bell input becomes the GHZ state") {
    Circuit p1 = build_p1_onebit();
    QubitId a = p1.registers.qubit("A", 0);
    QubitId b = p1.registers.qubit("B", 0);
    QubitId cout = p1.registers.qubit("C", 1);
    double r = 1.0 / std::sqrt(2.0);
    std::uint64_t ab = (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
    SparseState in = superpose(5, {{r, 0}, {r, ab}});
    SparseState out = run(p1, in);
    CHECK(out.support_size() == 2);
    CHECK(std::abs(out.amplitude(0) - r) < 1e-9);
    CHECK(std::abs(out.amplitude(ab | (std::uint64_t(1) << cout)) - r) < 1e-9);
}

TEST_CASE("read_register and entangled readout") {
    Circuit p1 = build_p1_onebit();
    const Register& areg = p1.registers.at("A");
    double r = 1.0 / std::sqrt(2.0);
    QubitId a = areg.qubits[0];
    SparseState ghz = superpose(5, {{r, 0}, {r, std::uint64_t(1) << a}});
    CHECK_FALSE(register_definite(ghz, areg));
    CHECK_THROWS(read_register(ghz, areg));

    SparseState def = basis_state(5, std::uint64_t(1) << a);
    CHECK(read_register(def, areg) == 1);

    Register c3{"C", {2, 1, 0}, {0, 1, 2}};
    SparseState s = basis_state(3, 0b110); // qubit0=0, qubit1=1, qubit2=1
    CHECK(read_register(s, c3) == 0b011);
}

TEST_CASE("unitary_of basics") {
    Circuit empty;
    empty.qubit_count = 1;
    auto id = unitary_of(empty);
    CHECK(std::abs(id[0][0] - 1.0) < 1e-15);
    CHECK(std::abs(id[1][1] - 1.0) < 1e-15);
    CHECK(std::abs(id[0][1]) < 1e-15);

    Circuit big;
    big.qubit_count = 13;
    CHECK_THROWS(unitary_of(big));

    // unitarity of the one-bit adder
    auto u = unitary_of(build_p1_onebit());
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            Amplitude dot(0, 0);
            for (int k = 0; k < 32; ++k)
                dot += std::conj(u[k][i]) * u[k][j];
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-9);
        }
}

TEST_CASE("norm is preserved after every gate") {
    Circuit c = build_upm(2);
    SparseState s = basis_state(c.qubit_count, set_bits(0, c.registers.at("A").qubits, 0b110));
    for (const auto& g : c.gates) {
        s = apply(s, g);
        CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
    }
}

TEST_CASE("support never exceeds the loose guard on basis inputs") {
    Circuit c = build_p3(3);
    for (std::uint64_t a = 0; a < 8; a += 3)
        for (std::uint64_t b = 0; b < 8; b += 2) {
            std::uint64_t in = set_bits(0, c.registers.at("A").qubits, a);
            in = set_bits(in, c.registers.at("B").slice(2, 0), b);
            SparseState s = basis_state(c.qubit_count, in);
            std::size_t max_support = 0;
            for (const auto& g : c.gates) {
                s = apply(s, g);
                max_support = std::max(max_support, s.support_size());
            }
            CHECK(max_support <= 16);
            CHECK(s.support_size() == 1);
        }
}

TEST_CASE("linearity on random superpositions") {
    Circuit c = build_p1_onebit();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-1, 1);
    for (int t = 0; t < 8; ++t) {
        std::vector<std::pair<Amplitude, std::uint64_t>> terms;
        std::vector<std::uint64_t> inputs{std::uint64_t(rng() % 16), std::uint64_t(16 + rng() % 16)};
        double norm = 0;
        std::vector<Amplitude> gamma;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            gamma.emplace_back(unif(rng), unif(rng));
            norm += std::norm(gamma.back());
        }
        for (std::size_t i = 0; i < inputs.size(); ++i)
            terms.emplace_back(gamma[i] / std::sqrt(norm), inputs[i]);
        SparseState combined = run(c, superpose(5, terms));
        std::map<std::uint64_t, Amplitude> expect;
        for (auto& [g, in] : terms) {
            SparseState single = run(c, basis_state(5, in));
            for (const auto& [k, a] : single.amplitudes())
                expect[k] += g * a;
        }
        for (const auto& [k, a] : expect)
            CHECK(std::abs(a - combined.amplitude(k)) < 1e-9);
    }
}
