#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qalu/format.hpp"
#include "qalu/oracle.hpp"
#include "qalu/sim.hpp"
#include "qalu/units.hpp"
#include "qalu/verify.hpp"

namespace {

using namespace qalu;

struct CommonOpts {
    std::string unit;
    int n = -1;
    int m = -1;
    std::string variant;
    bool zero_safe = false;
    bool with_remainder = false;
    bool no_remainder = false;
};

void add_unit_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("unit", o.unit, "unit name")->required();
    cmd->add_option("--n", o.n, "operand width N");
    cmd->add_option("--m", o.m, "divisor width M");
    cmd->add_option("--variant", o.variant, "adder variant (I, II or III) for unit `adder`");
    cmd->add_flag("--zero-safe", o.zero_safe, "divider: flag-bit variant for zero divisors");
    cmd->add_flag("--with-remainder", o.with_remainder, "divider: keep the remainder stage (default)");
    cmd->add_flag("--no-remainder", o.no_remainder, "divider: drop the remainder stage");
}

const Unit& resolve_unit(CommonOpts& o) {
    if (o.unit == "adder") {
        if (o.variant == "I")
            o.unit = "p1";
        else if (o.variant == "II")
            o.unit = "p2";
        else if (o.variant == "III")
            o.unit = "p3";
        else
            throw CLI::ValidationError("--variant", "expected I, II or III");
    }
    const Unit* u = find_unit(o.unit);
    if (!u)
        throw CLI::ValidationError("unit", "unknown unit: " + o.unit);
    return *u;
}

UnitParams make_params(const Unit& u, const CommonOpts& o) {
    UnitParams p = u.defaults;
    if (o.n >= 0)
        p.n = o.n;
    if (o.m >= 0)
        p.m = o.m;
    p.zero_safe = o.zero_safe;
    if (o.with_remainder && o.no_remainder)
        throw CLI::ValidationError("--no-remainder", "conflicts with --with-remainder");
    p.with_remainder = !o.no_remainder;
    if (u.needs_n && p.n < 1)
        throw CLI::ValidationError("--n", "unit requires --n >= 1");
    if (u.needs_m && p.m < 1)
        throw CLI::ValidationError("--m", "unit requires --m >= 1");
    return p;
}

std::string params_comment(const std::string& name, const UnitParams& p, const Unit& u) {
    std::ostringstream os;
    os << "unit " << name;
    if (u.needs_n)
        os << " --n " << p.n;
    if (u.needs_m)
        os << " --m " << p.m;
    if (p.zero_safe)
        os << " --zero-safe";
    if (!p.with_remainder)
        os << " --no-remainder";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string bits_of(std::uint64_t v, int w) {
    std::string s = "0b";
    for (int i = w - 1; i >= 0; --i)
        s += char('0' + ((v >> i) & 1));
    return s;
}

int cmd_build(CommonOpts& o, const std::string& out_path) {
    const Unit& u = resolve_unit(o);
    UnitParams p = make_params(u, o);
    Circuit c = lower(u.build(p));
    auto violations = validate_connectivity(c);
    if (!violations.empty()) {
        std::cerr << "internal error: " << violations.size() << " connectivity violations\n";
        return 2;
    }
    c.header_comments.push_back(params_comment(o.unit, p, u));
    std::string text = print_circuit(c);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << text;
    }
    return 0;
}

// Semantic output labels for circuits built by this tool, recovered from the
// `# unit ...` header comment.
std::vector<std::pair<std::string, std::vector<QubitId>>> semantic_outputs(const Circuit& c) {
    std::vector<std::pair<std::string, std::vector<QubitId>>> out;
    if (c.header_comments.empty() || c.header_comments[0].rfind("unit ", 0) != 0)
        return out;
    std::istringstream is(c.header_comments[0].substr(5));
    std::string name, tok;
    is >> name;
    int n = 0, m = 0;
    bool zero_safe = false, no_remainder = false;
    while (is >> tok) {
        if (tok == "--n")
            is >> n;
        else if (tok == "--m")
            is >> m;
        else if (tok == "--zero-safe")
            zero_safe = true;
        else if (tok == "--no-remainder")
            no_remainder = true;
    }
    auto reg = [&](const char* r) { return c.registers.at(r); };
    if (name == "p1-onebit" || name == "p2-onebit") {
        out.emplace_back("s", reg("C").slice(0, 0));
        out.emplace_back("c_out", reg("C").slice(1, 1));
    } else if (name == "p1" || name == "p2") {
        out.emplace_back("S", reg("C").slice(n, 0));
    } else if (name == "p3") {
        out.emplace_back("S", reg("B").slice(n, 0));
    } else if (name == "p3-signed") {
        out.emplace_back("S", reg("B").slice(n - 1, 0));
    } else if (name == "uc" || name == "uc-tilde") {
        out.emplace_back("c_out", reg("C").slice(1, 1));
    } else if (name == "us") {
        out.emplace_back("s", reg("B").slice(0, 0));
    } else if (name == "plus1") {
        out.emplace_back("S", reg("A").slice(n, 0));
    } else if (name == "plus1-tilde") {
        out.emplace_back("S", reg("A").slice(n - 1, 0));
    } else if (name == "negate" || name == "upm" || name == "uflip") {
        out.emplace_back("A~", reg("A").slice(n, 0));
    } else if (name == "subtractor") {
        out.emplace_back("D", reg("C").slice(n, 0));
    } else if (name == "multiplier") {
        out.emplace_back("P", reg("C").slice(2 * n, 0));
    } else if (name == "divider") {
        int top = (zero_safe ? n + 1 : n) + m - 1;
        out.emplace_back("Q", reg("C").slice(top, m));
        if (!no_remainder)
            out.emplace_back("R", reg("A").slice(m - 1, 0));
    }
    return out;
}

int cmd_run(const std::string& path, const std::vector<std::string>& sets, const std::string& format) {
    Circuit c = parse_circuit(read_file(path));
    std::uint64_t pattern = 0;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--set expects NAME=VALUE, got " + s);
        std::string name = s.substr(0, eq);
        std::uint64_t value = std::stoull(s.substr(eq + 1));
        const Register* reg = c.registers.find(name);
        if (!reg)
            throw std::runtime_error("no register named " + name);
        pattern = load_register_value(pattern, *reg, value);
    }
    SparseState out = run(c, basis_state(c.qubit_count, pattern));

    bool all_definite = true;
    nlohmann::json j;
    j["registers"] = nlohmann::json::object();
    for (const auto& reg : c.registers.all()) {
        if (register_definite(out, reg)) {
            std::uint64_t v = read_register(out, reg);
            if (format == "json") {
                j["registers"][reg.name] = v;
            } else {
                std::cout << reg.name << " = " << v << " (" << bits_of(v, reg.width()) << ")";
                if (reg.width() >= 2 && (v >> (reg.width() - 1)) & 1)
                    std::cout << " [twos " << twos_value(BitVec::from_unsigned(v, reg.width())) << "]";
                std::cout << "\n";
            }
        } else {
            all_definite = false;
            if (format == "json")
                j["registers"][reg.name] = nullptr;
            else
                std::cout << reg.name << " = (not classically definite)\n";
        }
    }
    nlohmann::json jout = nlohmann::json::object();
    std::ostringstream sem;
    for (const auto& [label, qubits] : semantic_outputs(c)) {
        Register tmp{label, {}, qubits};
        if (!register_definite(out, tmp)) {
            all_definite = false;
            continue;
        }
        std::uint64_t v = read_register(out, tmp);
        jout[label] = v;
        if (sem.tellp() > 0)
            sem << ", ";
        sem << label << " = " << v;
        if (label == "D" || label == "A~") // two's-complement outputs
            sem << " (" << twos_value(BitVec::from_unsigned(v, static_cast<int>(qubits.size()))) << ")";
    }
    if (format == "json") {
        if (!jout.empty())
            j["outputs"] = jout;
        j["support"] = out.support_size();
        j["definite"] = all_definite;
        std::cout << j.dump(2) << "\n";
    } else {
        if (sem.tellp() > 0)
            std::cout << sem.str() << "\n";
        std::cout << "support = " << out.support_size() << "\n";
    }
    return all_definite ? 0 : 1;
}

int cmd_verify(CommonOpts& o, bool linearity, int trials, std::uint64_t seed, const std::string& format) {
    const Unit& u = resolve_unit(o);
    UnitParams p = make_params(u, o);
    VerificationReport r =
        linearity ? linearity_check(o.unit, p, trials, seed) : exhaustive_verify(o.unit, p);
    std::cout << (format == "json" ? report_json(r) : report_text(r));
    return r.pass() ? 0 : 1;
}

int cmd_count(CommonOpts& o, bool lowered, bool cancelled) {
    const Unit& u = resolve_unit(o);
    UnitParams p = make_params(u, o);
    Circuit c = u.build(p);
    if (cancelled)
        c = cancel_adjacent_pairs(c);
    if (lowered)
        c = lower(c);
    GateCounts counts = gate_counts(c);
    std::ostringstream os;
    auto item = [&](const char* name, int v) {
        if (v) {
            if (os.tellp() > 0)
                os << ", ";
            os << name << " " << v;
        }
    };
    item("X", counts.x);
    item("CNOT", counts.cnot);
    item("CSX", counts.csx);
    item("CSXDG", counts.csxdg);
    item("SWAP", counts.swap);
    std::cout << os.str() << "\n";
    std::cout << "two-qubit " << counts.two_qubit_total << ", depth " << counts.depth << "\n";
    return 0;
}

int cmd_check_layout(const std::string& path) {
    Circuit c = parse_circuit(read_file(path));
    auto violations = validate_connectivity(c);
    for (const auto& v : violations)
        std::cout << "violation at gate " << v.gate_index << ": " << kind_name(v.gate.kind) << " "
                  << *v.gate.control << " " << v.gate.target << "\n";
    std::cout << violations.size() << " violation(s)\n";
    return violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum arithmetic circuit toolkit"};
    app.require_subcommand(1);

    CommonOpts build_opts, verify_opts, count_opts;
    std::string out_path, run_file, check_file;
    std::vector<std::string> sets;
    std::string run_format = "text", verify_format = "text";
    bool linearity = false, lowered = false, cancelled = false;
    int trials = 32;
    std::uint64_t seed = 0;

    CLI::App* build = app.add_subcommand("build", "emit a lowered circuit file");
    add_unit_options(build, build_opts);
    build->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* runc = app.add_subcommand("run", "simulate a circuit file on a basis input");
    runc->add_option("file", run_file, "circuit file")->required();
    runc->add_option("--set", sets, "register assignment NAME=VALUE")->take_all();
    runc->add_option("--format", run_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "exhaustive oracle verification");
    add_unit_options(verify, verify_opts);
    verify->add_flag("--linearity", linearity, "superposition linearity trials instead");
    verify->add_option("--trials", trials, "linearity trial count");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* count = app.add_subcommand("count", "gate counts for a unit");
    add_unit_options(count, count_opts);
    count->add_flag("--lowered", lowered, "count after lowering");
    count->add_flag("--cancelled", cancelled, "count after pair cancellation");

    CLI::App* check = app.add_subcommand("check-layout", "validate nearest-neighbor connectivity");
    check->add_option("file", check_file, "circuit file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build(build_opts, out_path);
        if (runc->parsed())
            return cmd_run(run_file, sets, run_format);
        if (verify->parsed())
            return cmd_verify(verify_opts, linearity, trials, seed, verify_format);
        if (count->parsed())
            return cmd_count(count_opts, lowered, cancelled);
        if (check->parsed())
            return cmd_check_layout(check_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
