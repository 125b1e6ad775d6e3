#include "qalu/format.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qalu {

std::string print_circuit(const Circuit& c) {
    if (!c.layout)
        throw std::invalid_argument("print_circuit: no layout attached");
    for (const auto& g : c.gates)
        if (g.kind == GateKind::SWAP || g.kind == GateKind::CSXDG)
            throw std::invalid_argument("print_circuit: circuit not lowered");

    std::ostringstream os;
    for (const auto& line : c.header_comments)
        os << "# " << line << "\n";
    os << "qubits " << c.qubit_count << "\n";
    os << "layout grid\n";

    std::vector<bool> mapped(static_cast<std::size_t>(c.qubit_count), false);
    for (const auto& reg : c.registers.all())
        for (std::size_t i = 0; i < reg.qubits.size(); ++i) {
            QubitId q = reg.qubits[i];
            const GridCoord& at = c.layout->coord(q);
            os << "map " << reg.name << "[" << reg.subs[i] << "] " << at.row << " " << at.col << "\n";
            mapped[static_cast<std::size_t>(q)] = true;
        }
    for (bool m : mapped)
        if (!m)
            throw std::invalid_argument("print_circuit: qubit not covered by any register");

    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::X:
            os << "x " << g.target << "\n";
            break;
        case GateKind::CNOT:
            os << "cx " << *g.control << " " << g.target << "\n";
            break;
        case GateKind::CSX:
            os << "csx " << *g.control << " " << g.target << "\n";
            break;
        default:
            break;
        }
    }
    return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("bad integer: " + s);
    return v;
}

} // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;

    bool saw_qubits = false, saw_layout = false, in_header = true;
    std::map<std::pair<int, int>, QubitId> by_coord;
    std::vector<GridCoord> coords;
    struct PendingReg {
        std::string name;
        std::vector<int> subs;
        std::vector<QubitId> qubits;
    };
    std::vector<PendingReg> regs;

    auto reg_for = [&](const std::string& name) -> PendingReg& {
        for (auto& r : regs)
            if (r.name == name)
                return r;
        regs.push_back({name, {}, {}});
        return regs.back();
    };

    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ')
                body = body.substr(1);
            if (in_header)
                c.header_comments.push_back(body);
            continue;
        }
        auto tok = split_ws(line);
        if (tok.empty())
            continue;
        const std::string& kw = tok[0];
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
        };

        if (kw == "qubits") {
            in_header = false;
            if (tok.size() != 2)
                fail("qubits takes one argument");
            c.qubit_count = parse_int(tok[1]);
            if (c.qubit_count < 1)
                fail("qubit count must be positive");
            saw_qubits = true;
        } else if (kw == "layout") {
            in_header = false;
            if (tok.size() != 2 || tok[1] != "grid")
                fail("only `layout grid` is supported");
            saw_layout = true;
        } else if (kw == "map") {
            in_header = false;
            if (tok.size() != 4)
                fail("map takes name[sub] row col");
            auto lb = tok[1].find('[');
            auto rb = tok[1].find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb != tok[1].size() - 1 || rb < lb)
                fail("bad register reference: " + tok[1]);
            std::string name = tok[1].substr(0, lb);
            int sub = parse_int(tok[1].substr(lb + 1, rb - lb - 1));
            int row = parse_int(tok[2]);
            int col = parse_int(tok[3]);
            auto key = std::make_pair(row, col);
            QubitId q;
            auto it = by_coord.find(key);
            if (it == by_coord.end()) {
                q = static_cast<QubitId>(coords.size());
                by_coord.emplace(key, q);
                coords.push_back({row, col});
            } else {
                q = it->second;
            }
            auto& r = reg_for(name);
            r.subs.push_back(sub);
            r.qubits.push_back(q);
        } else if (kw == "x" || kw == "cx" || kw == "csx") {
            if (!saw_qubits)
                fail("gate before qubits line");
            if (kw == "x") {
                if (tok.size() != 2)
                    fail("x takes one qubit");
                c.gates.push_back(Gate::x(parse_int(tok[1])));
            } else {
                if (tok.size() != 3)
                    fail(kw + " takes control and target");
                int ctl = parse_int(tok[1]);
                int tgt = parse_int(tok[2]);
                c.gates.push_back(kw == "cx" ? Gate::cx(ctl, tgt) : Gate::csx(ctl, tgt));
            }
        } else {
            fail("unknown keyword: " + kw);
        }
    }

    if (!saw_qubits)
        throw std::invalid_argument("missing qubits line");
    if (!saw_layout)
        throw std::invalid_argument("missing layout line");
    if (static_cast<int>(coords.size()) != c.qubit_count)
        throw std::invalid_argument("map lines cover " + std::to_string(coords.size()) +
                                    " qubits, header says " + std::to_string(c.qubit_count));
    for (const auto& g : c.gates) {
        if (g.target < 0 || g.target >= c.qubit_count || (g.control && (*g.control < 0 || *g.control >= c.qubit_count)))
            throw std::invalid_argument("gate operand out of range");
        if (g.control && *g.control == g.target)
            throw std::invalid_argument("gate control equals target");
    }

    c.layout = GridLayout(std::move(coords));
    for (auto& r : regs)
        c.registers.add(r.name, std::move(r.subs), std::move(r.qubits));
    return c;
}

} // namespace qalu
