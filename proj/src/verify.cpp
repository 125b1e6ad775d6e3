#include "qalu/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qalu/adders.hpp"
#include "qalu/sim.hpp"

namespace qalu {

namespace {

constexpr double kTol = 1e-9;

std::string bits_str(std::uint64_t v, int w) {
    std::string s = "0b";
    for (int i = w - 1; i >= 0; --i)
        s += char('0' + ((v >> i) & 1));
    return s;
}

std::uint64_t read_bits(std::uint64_t pattern, const std::vector<QubitId>& qubits) {
    std::uint64_t v = 0;
    for (QubitId q : qubits)
        v = (v << 1) | ((pattern >> q) & 1);
    return v;
}

const Unit& required_unit(const std::string& name) {
    const Unit* u = find_unit(name);
    if (!u)
        throw std::invalid_argument("unknown unit: " + name);
    return *u;
}

} // namespace

VerificationReport exhaustive_verify(const std::string& unit, const UnitParams& params) {
    const Unit& u = required_unit(unit);
    auto t0 = std::chrono::steady_clock::now();

    VerificationReport report;
    report.unit = unit;
    report.params = params;
    report.kind = "exhaustive";

    Circuit circuit = u.build(params);
    report.counts = gate_counts(circuit);
    Circuit low = lower(circuit);
    report.lowered_counts = gate_counts(low);
    report.connectivity_violations = static_cast<int>(validate_connectivity(low).size());

    auto cases = u.cases(circuit, params);
    if (cases.size() > (std::size_t(1) << 16))
        throw std::invalid_argument("exhaustive_verify: parameter bounds exceed 2^16 cases");

    // simulate the lowered form so the |0>-conditioned swap decompositions
    // are exercised, not just their macro semantics
    for (const auto& vc : cases) {
        ++report.cases_run;
        SparseState out = run(low, basis_state(circuit.qubit_count, vc.input));
        if (out.support_size() != 1) {
            report.failures.push_back({vc.desc, "support", 1, out.support_size(),
                                       "output is not a single basis state"});
            continue;
        }
        const auto& [pattern, amp] = *out.amplitudes().begin();
        if (std::abs(amp - Amplitude(1.0, 0.0)) > kTol) {
            report.failures.push_back({vc.desc, "amplitude", 0, 0, "residual phase/magnitude"});
            continue;
        }
        for (const auto& chk : vc.checks) {
            std::uint64_t got = read_bits(pattern, chk.qubits);
            if (got == chk.expected)
                continue;
            if (chk.ancilla)
                report.ancilla_violations.push_back("[" + vc.desc + "] " + chk.label + " reads " +
                                                    std::to_string(got));
            else
                report.failures.push_back({vc.desc, chk.label, chk.expected, got, ""});
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

VerificationReport linearity_check(const std::string& unit, const UnitParams& params, int trials,
                                   std::uint64_t seed) {
    const Unit& u = required_unit(unit);
    auto t0 = std::chrono::steady_clock::now();

    VerificationReport report;
    report.unit = unit;
    report.params = params;
    report.kind = "linearity";
    report.seed = seed;

    Circuit circuit = u.build(params);
    report.counts = gate_counts(circuit);
    auto cases = u.cases(circuit, params);
    if (cases.empty())
        throw std::logic_error("linearity_check: unit has no cases");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    for (int t = 0; t < trials; ++t) {
        ++report.cases_run;
        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<std::uint64_t> inputs;
        while (static_cast<int>(inputs.size()) < k) {
            std::uint64_t pick = cases[rng() % cases.size()].input;
            bool dup = false;
            for (std::uint64_t i : inputs)
                dup |= i == pick;
            if (!dup)
                inputs.push_back(pick);
            if (inputs.size() == cases.size())
                break;
        }
        std::vector<Amplitude> gamma;
        double norm = 0.0;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            Amplitude g(unif(rng), unif(rng));
            if (std::abs(g) < 1e-3)
                g = Amplitude(0.5, 0.5);
            gamma.push_back(g);
            norm += std::norm(g);
        }
        double inv = 1.0 / std::sqrt(norm);
        std::vector<std::pair<Amplitude, std::uint64_t>> terms;
        for (std::size_t i = 0; i < inputs.size(); ++i)
            terms.emplace_back(gamma[i] * inv, inputs[i]);

        SparseState combined = run(circuit, superpose(circuit.qubit_count, terms));

        std::map<std::uint64_t, Amplitude> expect;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            SparseState single = run(circuit, basis_state(circuit.qubit_count, inputs[i]));
            for (const auto& [kpat, a] : single.amplitudes())
                expect[kpat] += gamma[i] * inv * a;
        }

        double max_err = 0.0;
        for (const auto& [kpat, a] : expect)
            max_err = std::max(max_err, std::abs(a - combined.amplitude(kpat)));
        for (const auto& [kpat, a] : combined.amplitudes())
            max_err = std::max(max_err, std::abs(a - (expect.count(kpat) ? expect[kpat] : Amplitude())));
        if (max_err > kTol)
            report.failures.push_back({"trial " + std::to_string(t), "linearity", 0, 0,
                                       "entrywise error " + std::to_string(max_err)});
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

using Matrix = std::vector<std::vector<Amplitude>>;

Matrix zeros32() { return Matrix(32, std::vector<Amplitude>(32, Amplitude(0.0, 0.0))); }

// 4x4 blocks on (C', C'') from the reference matrices; sign picks the
// (1 +/- i)/2 diagonal.
Matrix alpha_block(int sign) {
    double s = sign > 0 ? 0.5 : -0.5;
    Matrix b(4, std::vector<Amplitude>(4, Amplitude(0.0, 0.0)));
    b[0][0] = 1.0;
    b[2][1] = 1.0;
    b[1][2] = Amplitude(0.5, s);
    b[3][2] = Amplitude(0.5, -s);
    b[1][3] = Amplitude(0.5, -s);
    b[3][3] = Amplitude(0.5, s);
    return b;
}

Matrix beta_block(int sign) {
    Matrix b = alpha_block(sign);
    b[0][0] = 0.0;
    b[2][1] = 0.0;
    b[0][1] = 1.0;
    b[2][0] = 1.0;
    return b;
}

// sign table shared by both reference matrices, indexed by (a,b,c)
int block_sign(int a, int b, int cin) {
    if ((a ^ b) == 0)
        return a ? +1 : -1;
    return cin ? -1 : +1;
}

bool block_is_beta(int a, int b, int cin) {
    return ((a & b) | (cin & (a ^ b))) != 0; // carry out
}

Matrix expected_p1_matrix() {
    Matrix m = zeros32();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cin = 0; cin < 2; ++cin) {
                int s = a ^ b ^ cin;
                Matrix blk = block_is_beta(a, b, cin) ? beta_block(block_sign(a, b, cin))
                                                      : alpha_block(block_sign(a, b, cin));
                int col0 = a * 16 + b * 8 + cin * 4;
                int row0 = a * 16 + b * 8 + s * 4;
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        m[row0 + r][col0 + c] = blk[r][c];
            }
    return m;
}

Matrix expected_uc_matrix() {
    Matrix m = zeros32();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cin = 0; cin < 2; ++cin) {
                Matrix blk = block_is_beta(a, b, cin) ? beta_block(block_sign(a, b, cin))
                                                      : alpha_block(block_sign(a, b, cin));
                int d = a * 16 + b * 8 + cin * 4;
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        m[d + r][d + c] = blk[r][c];
            }
    return m;
}

bool matrices_close(const Matrix& x, const Matrix& y) {
    if (x.size() != y.size())
        return false;
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c)
            if (std::abs(x[r][c] - y[r][c]) > kTol)
                return false;
    return true;
}

std::vector<QubitId> readout_order(const Circuit& c) {
    // A, B, C, C', C'' from MSB to LSB
    return {c.registers.qubit("A", 0), c.registers.qubit("B", 0), c.registers.qubit("C", 0),
            c.registers.qubit("C", 1), c.registers.qubit("C", 2)};
}

} // namespace

bool matrix_check_p1() {
    Circuit c = build_p1_onebit();
    return matrices_close(unitary_of(c, readout_order(c)), expected_p1_matrix());
}

bool matrix_check_uc() {
    Circuit c = build_uc();
    return matrices_close(unitary_of(c, readout_order(c)), expected_uc_matrix());
}

double complexity_fit(const std::string& unit, const std::vector<int>& n_range) {
    if (n_range.size() < 4)
        throw std::invalid_argument("complexity_fit: need at least 4 points");
    const Unit& u = required_unit(unit);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n : n_range) {
        UnitParams p = u.defaults;
        p.n = n;
        if (u.needs_m)
            p.m = n;
        Circuit low = lower(u.build(p));
        int count = gate_counts(low).two_qubit_total;
        double x = std::log(static_cast<double>(n));
        double y = std::log(static_cast<double>(count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(n_range.size());
    double denom = k * sxx - sx * sx;
    if (std::abs(denom) < 1e-12)
        throw std::invalid_argument("complexity_fit: degenerate range");
    return (k * sxy - sx * sy) / denom;
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "unit: " << r.unit << "\n";
    os << "kind: " << r.kind << "\n";
    os << "params: n=" << r.params.n;
    if (r.params.m)
        os << " m=" << r.params.m;
    if (r.params.zero_safe)
        os << " zero-safe";
    if (!r.params.with_remainder)
        os << " no-remainder";
    os << "\n";
    os << "cases_run: " << r.cases_run << "\n";
    os << "seed: " << r.seed << "\n";
    os << "gate_counts: x=" << r.counts.x << " cnot=" << r.counts.cnot << " csx=" << r.counts.csx
       << " csxdg=" << r.counts.csxdg << " swap=" << r.counts.swap << " depth=" << r.counts.depth
       << "\n";
    os << "two_qubit_lowered: " << r.lowered_counts.two_qubit_total << "\n";
    os << "connectivity_violations: " << r.connectivity_violations << "\n";
    os << "ancilla_violations: " << r.ancilla_violations.size() << "\n";
    os << "failures: " << r.failures.size() << "\n";
    for (const auto& f : r.failures) {
        os << "  [" << f.input << "] " << f.check;
        if (f.note.empty())
            os << ": expected " << f.expected << " (" << bits_str(f.expected, 8) << "), got " << f.got
               << " (" << bits_str(f.got, 8) << ")";
        else
            os << ": " << f.note;
        os << "\n";
    }
    os << "elapsed_seconds: " << r.elapsed_seconds << "\n";
    os << "result: " << (r.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

std::string report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["unit"] = r.unit;
    j["kind"] = r.kind;
    j["params"] = {{"n", r.params.n},
                   {"m", r.params.m},
                   {"zero_safe", r.params.zero_safe},
                   {"with_remainder", r.params.with_remainder}};
    j["cases_run"] = r.cases_run;
    j["seed"] = r.seed;
    j["gate_counts"] = {{"x", r.counts.x},       {"cnot", r.counts.cnot},
                        {"csx", r.counts.csx},   {"csxdg", r.counts.csxdg},
                        {"swap", r.counts.swap}, {"depth", r.counts.depth}};
    j["two_qubit_lowered"] = r.lowered_counts.two_qubit_total;
    j["connectivity_violations"] = r.connectivity_violations;
    j["ancilla_violations"] = r.ancilla_violations;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"input", f.input},
                                 {"check", f.check},
                                 {"expected", f.expected},
                                 {"got", f.got},
                                 {"note", f.note}});
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["pass"] = r.pass();
    return j.dump(2);
}

} // namespace qalu
