#include "qalu/units.hpp"

#include <stdexcept>

#include "qalu/adders.hpp"
#include "qalu/complement.hpp"
#include "qalu/muldiv.hpp"
#include "qalu/oracle.hpp"

namespace qalu {

std::uint64_t set_bits(std::uint64_t pattern, const std::vector<QubitId>& qubits, std::uint64_t value) {
    int w = static_cast<int>(qubits.size());
    if (w < 64 && value >> w)
        throw std::invalid_argument("set_bits: value wider than register");
    for (int i = 0; i < w; ++i) {
        std::uint64_t mask = std::uint64_t(1) << qubits[static_cast<std::size_t>(i)];
        if ((value >> (w - 1 - i)) & 1)
            pattern |= mask;
        else
            pattern &= ~mask;
    }
    return pattern;
}

std::uint64_t load_register_value(std::uint64_t pattern, const Register& reg, std::uint64_t value) {
    std::uint64_t placed = 0;
    for (std::size_t i = 0; i < reg.subs.size(); ++i) {
        int s = reg.subs[i];
        std::uint64_t mask = std::uint64_t(1) << reg.qubits[i];
        if (s >= 0 && s < 64 && ((value >> s) & 1)) {
            pattern |= mask;
            placed |= std::uint64_t(1) << s;
        } else {
            pattern &= ~mask;
        }
    }
    if (placed != value)
        throw std::invalid_argument("value does not fit register " + reg.name);
    return pattern;
}

namespace {

using Cases = std::vector<VerifyCase>;

std::vector<QubitId> slice(const Circuit& c, const std::string& reg, int hi, int lo) {
    return c.registers.at(reg).slice(hi, lo);
}

std::vector<QubitId> whole(const Circuit& c, const std::string& reg) {
    return c.registers.at(reg).qubits;
}

std::uint64_t pow2(int e) { return std::uint64_t(1) << e; }

// ---- case generators -------------------------------------------------------

Cases onebit_adder_cases(const Circuit& c, const UnitParams&) {
    Cases out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cin = 0; cin < 2; ++cin) {
                int s = a ^ b ^ cin;
                int co = (a & b) | (cin & (a ^ b));
                VerifyCase vc;
                vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " cin=" + std::to_string(cin);
                vc.input = set_bits(0, whole(c, "A"), static_cast<std::uint64_t>(a));
                vc.input = set_bits(vc.input, whole(c, "B"), static_cast<std::uint64_t>(b));
                vc.input = set_bits(vc.input, slice(c, "C", 0, 0), static_cast<std::uint64_t>(cin));
                vc.checks = {{"A", whole(c, "A"), static_cast<std::uint64_t>(a)},
                             {"B", whole(c, "B"), static_cast<std::uint64_t>(b)},
                             {"C", whole(c, "C"), static_cast<std::uint64_t>(co * 2 + s)}};
                out.push_back(std::move(vc));
            }
    return out;
}

Cases multibit_adder_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a)
        for (std::uint64_t b = 0; b < pow2(p.n); ++b) {
            VerifyCase vc;
            vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
            vc.input = set_bits(vc.input, slice(c, "B", p.n - 1, 0), b);
            vc.checks = {{"A", slice(c, "A", p.n - 1, 0), a},
                         {"B", slice(c, "B", p.n - 1, 0), b},
                         {"C", whole(c, "C"), ref_add(a, b)}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases p3_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a)
        for (std::uint64_t b = 0; b < pow2(p.n); ++b) {
            VerifyCase vc;
            vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
            vc.input = set_bits(vc.input, slice(c, "B", p.n - 1, 0), b);
            vc.checks = {{"A", slice(c, "A", p.n - 1, 0), a},
                         {"B", whole(c, "B"), ref_add(a, b)},
                         {"C", whole(c, "C"), 0, true}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases p3_signed_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a)
        for (std::uint64_t b = 0; b < pow2(p.n); ++b) {
            VerifyCase vc;
            vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
            vc.input = set_bits(vc.input, slice(c, "B", p.n - 1, 0), b);
            vc.checks = {{"A", slice(c, "A", p.n - 1, 0), a},
                         {"B", whole(c, "B"), (a + b) % pow2(p.n)},
                         {"C", whole(c, "C"), 0, true}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases uc_cases(const Circuit& c, const UnitParams&) {
    Cases out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cin = 0; cin < 2; ++cin) {
                int co = (a & b) | (cin & (a ^ b));
                VerifyCase vc;
                vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " cin=" + std::to_string(cin);
                vc.input = set_bits(0, whole(c, "A"), static_cast<std::uint64_t>(a));
                vc.input = set_bits(vc.input, whole(c, "B"), static_cast<std::uint64_t>(b));
                vc.input = set_bits(vc.input, slice(c, "C", 0, 0), static_cast<std::uint64_t>(cin));
                vc.checks = {{"A", whole(c, "A"), static_cast<std::uint64_t>(a)},
                             {"B", whole(c, "B"), static_cast<std::uint64_t>(b)},
                             {"C", whole(c, "C"), static_cast<std::uint64_t>(co * 2 + cin)}};
                out.push_back(std::move(vc));
            }
    return out;
}

Cases us_cases(const Circuit& c, const UnitParams&) {
    Cases out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cin = 0; cin < 2; ++cin) {
                VerifyCase vc;
                vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " cin=" + std::to_string(cin);
                vc.input = set_bits(0, whole(c, "A"), static_cast<std::uint64_t>(a));
                vc.input = set_bits(vc.input, whole(c, "B"), static_cast<std::uint64_t>(b));
                vc.input = set_bits(vc.input, whole(c, "C"), static_cast<std::uint64_t>(cin));
                vc.checks = {{"A", whole(c, "A"), static_cast<std::uint64_t>(a)},
                             {"B", whole(c, "B"), static_cast<std::uint64_t>(a ^ b ^ cin)},
                             {"C", whole(c, "C"), static_cast<std::uint64_t>(cin)}};
                out.push_back(std::move(vc));
            }
    return out;
}

Cases uc_tilde_cases(const Circuit& c, const UnitParams&) {
    Cases out;
    for (int a = 0; a < 2; ++a)
        for (int cin = 0; cin < 2; ++cin) {
            VerifyCase vc;
            vc.desc = "abar=" + std::to_string(a) + " c=" + std::to_string(cin);
            vc.input = set_bits(0, whole(c, "A"), static_cast<std::uint64_t>(a));
            vc.input = set_bits(vc.input, slice(c, "C", 0, 0), static_cast<std::uint64_t>(cin));
            vc.checks = {{"A", whole(c, "A"), static_cast<std::uint64_t>(a)},
                         {"C", whole(c, "C"), static_cast<std::uint64_t>((a & cin) * 2 + cin)}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases plus1_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a) {
        VerifyCase vc;
        vc.desc = "abar=" + std::to_string(a);
        vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
        vc.checks = {{"A", whole(c, "A"), a + 1}, {"C", whole(c, "C"), 0, true}};
        out.push_back(std::move(vc));
    }
    return out;
}

Cases plus1_tilde_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a) {
        VerifyCase vc;
        vc.desc = "abar=" + std::to_string(a);
        vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
        vc.checks = {{"A", whole(c, "A"), (a + 1) % pow2(p.n)}, {"C", whole(c, "C"), 0, true}};
        out.push_back(std::move(vc));
    }
    return out;
}

Cases negate_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a) {
        VerifyCase vc;
        vc.desc = "|a|=" + std::to_string(a);
        vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
        // sign bit always 1; magnitude wraps to 0 for a = 0
        vc.checks = {{"A", whole(c, "A"), pow2(p.n) + (pow2(p.n) - a) % pow2(p.n)},
                     {"C", whole(c, "C"), 0, true}};
        out.push_back(std::move(vc));
    }
    return out;
}

Cases uflip_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (int s = 0; s < 2; ++s)
        for (std::uint64_t a = 0; a < pow2(p.n); ++a) {
            VerifyCase vc;
            vc.desc = "sign=" + std::to_string(s) + " a=" + std::to_string(a);
            vc.input = set_bits(0, whole(c, "A"), s * pow2(p.n) + a);
            std::uint64_t mag = s ? (~a & (pow2(p.n) - 1)) : a;
            vc.checks = {{"A", whole(c, "A"), s * pow2(p.n) + mag},
                         {"C", whole(c, "C"), static_cast<std::uint64_t>(s)}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases ures_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (int s = 0; s < 2; ++s)
        for (std::uint64_t a = 0; a < pow2(p.n); ++a) {
            VerifyCase vc;
            vc.desc = "sign=" + std::to_string(s) + " a=" + std::to_string(a);
            vc.input = set_bits(0, whole(c, "A"), s * pow2(p.n) + a);
            vc.input = set_bits(vc.input, slice(c, "C", 0, 0), static_cast<std::uint64_t>(s));
            vc.checks = {{"A", whole(c, "A"), s * pow2(p.n) + a}, {"C", whole(c, "C"), 0, true}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases upm_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (int s = 0; s < 2; ++s)
        for (std::uint64_t a = 0; a < pow2(p.n); ++a) {
            VerifyCase vc;
            vc.desc = "sign=" + std::to_string(s) + " a=" + std::to_string(a);
            vc.input = set_bits(0, whole(c, "A"), s * pow2(p.n) + a);
            if (s == 1 && a == 0) {
                // complement of zero: the carry clears the sign and the c_0
                // ancilla is left holding the old sign
                vc.checks = {{"A", whole(c, "A"), 0}, {"C", whole(c, "C"), 1}};
            } else {
                std::uint64_t mag = s ? pow2(p.n) - a : a;
                vc.checks = {{"A", whole(c, "A"), s * pow2(p.n) + mag}, {"C", whole(c, "C"), 0, true}};
            }
            out.push_back(std::move(vc));
        }
    return out;
}

Cases subtractor_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a)
        for (std::uint64_t b = 0; b < pow2(p.n); ++b) {
            VerifyCase vc;
            vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            vc.input = set_bits(0, whole(c, "A"), a);
            vc.input = set_bits(vc.input, slice(c, "B", p.n - 1, 0), b);
            std::uint64_t diff = static_cast<std::uint64_t>(ref_sub(a, b)) & (pow2(p.n + 1) - 1);
            vc.checks = {{"A", whole(c, "A"), a},
                         {"C", whole(c, "C"), diff},
                         {"B", whole(c, "B"), (pow2(p.n + 1) - b) % pow2(p.n + 1)}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases multiplier_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a)
        for (std::uint64_t b = 0; b < pow2(p.n); ++b) {
            VerifyCase vc;
            vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            vc.input = set_bits(0, whole(c, "A"), a);
            vc.input = set_bits(vc.input, slice(c, "B", p.n - 1, 0), b);
            vc.checks = {{"product", slice(c, "C", 2 * p.n, 0), ref_mul(a, b)},
                         {"C_-1", slice(c, "C", -1, -1), 0, true},
                         {"D", whole(c, "D"), 0, true},
                         {"E", whole(c, "E"), 0, true},
                         // inputs end in the shifted configuration
                         {"A", whole(c, "A"), b >> 1},
                         {"B", whole(c, "B"), (b & 1) * pow2(p.n) + a}};
            out.push_back(std::move(vc));
        }
    return out;
}

Cases divider_cases(const Circuit& c, const UnitParams& p) {
    Cases out;
    int digits = p.zero_safe ? p.n + 1 : p.n;
    int top = digits + p.m - 1;
    for (std::uint64_t a = 0; a < pow2(p.n); ++a)
        for (std::uint64_t b = 0; b < pow2(p.m); ++b) {
            VerifyCase vc;
            vc.desc = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            vc.input = set_bits(0, slice(c, "A", p.n - 1, 0), a);
            vc.input = set_bits(vc.input, whole(c, "B"), b);
            std::uint64_t q, r;
            if (b == 0) {
                DivZeroPattern pat = ref_divzero_pattern(p.n, p.m, a, p.zero_safe);
                q = pat.quotient.to_unsigned();
                r = pat.remainder.to_unsigned();
            } else {
                auto [qq, rr] = ref_divmod(a, b);
                q = qq;
                r = rr;
            }
            // positive divisors leave the inverted trial signs on the upper
            // B' rows; the last digit's row stays clean without the
            // remainder stage
            std::uint64_t resid = 0;
            for (int k = digits - 1; k >= 0; --k) {
                int bit = (b > 0 && (k > 0 || p.with_remainder)) ? 1 - static_cast<int>((q >> k) & 1) : 0;
                resid = (resid << 1) | static_cast<std::uint64_t>(bit);
            }
            vc.checks.push_back({"quotient", slice(c, "C", top, p.m), q});
            if (p.with_remainder)
                vc.checks.push_back({"remainder", slice(c, "A", p.m - 1, 0), r});
            vc.checks.push_back({"D'", whole(c, "D'"), 0, true});
            vc.checks.push_back({"E", whole(c, "E"), 0, true});
            vc.checks.push_back({"C_low", slice(c, "C", p.m - 1, -1), 0, true});
            vc.checks.push_back({"A_high", slice(c, "A", top, p.m), 0, true});
            vc.checks.push_back({"B'_resid", slice(c, "B'", top, p.m), resid});
            if (p.with_remainder) {
                vc.checks.push_back({"B'_pad", slice(c, "B'", p.m - 1, p.m - 1), 0});
                vc.checks.push_back({"B'_shifted", slice(c, "B'", p.m - 2, -1), b});
                vc.checks.push_back({"A_-1", slice(c, "A", -1, -1), 0, true});
            } else {
                vc.checks.push_back({"B'_shifted", slice(c, "B'", p.m - 1, 0), b});
                vc.checks.push_back({"B'_pad", slice(c, "B'", -1, -1), 0});
            }
            out.push_back(std::move(vc));
        }
    return out;
}

} // namespace

const std::vector<Unit>& unit_registry() {
    static const std::vector<Unit> units = [] {
        std::vector<Unit> u;
        auto add = [&](Unit unit) { u.push_back(std::move(unit)); };

        add({"p1-onebit", false, false, {}, [](const UnitParams&) { return build_p1_onebit(); },
             onebit_adder_cases});
        add({"p2-onebit", false, false, {}, [](const UnitParams&) { return build_p2_onebit(); },
             onebit_adder_cases});
        add({"p1", true, false, {.n = 3}, [](const UnitParams& p) { return build_p1(p.n); },
             multibit_adder_cases});
        add({"p2", true, false, {.n = 3}, [](const UnitParams& p) { return build_p2(p.n); },
             multibit_adder_cases});
        add({"p3", true, false, {.n = 3}, [](const UnitParams& p) { return build_p3(p.n); }, p3_cases});
        add({"p3-signed", true, false, {.n = 3}, [](const UnitParams& p) { return build_p3_signed(p.n); },
             p3_signed_cases});
        add({"uc", false, false, {}, [](const UnitParams&) { return build_uc(); }, uc_cases});
        add({"us", false, false, {}, [](const UnitParams&) { return build_us(); }, us_cases});
        add({"uc-tilde", false, false, {}, [](const UnitParams&) { return build_uc_tilde(); },
             uc_tilde_cases});
        add({"plus1", true, false, {.n = 3}, [](const UnitParams& p) { return build_plus1(p.n); },
             plus1_cases});
        add({"plus1-tilde", true, false, {.n = 3},
             [](const UnitParams& p) { return build_plus1_tilde(p.n); }, plus1_tilde_cases});
        add({"negate", true, false, {.n = 3}, [](const UnitParams& p) { return build_negate(p.n); },
             negate_cases});
        add({"uflip", true, false, {.n = 3}, [](const UnitParams& p) { return build_uflip(p.n); },
             uflip_cases});
        add({"ures", true, false, {.n = 3}, [](const UnitParams& p) { return build_ures(p.n); },
             ures_cases});
        add({"upm", true, false, {.n = 3}, [](const UnitParams& p) { return build_upm(p.n); },
             upm_cases});
        add({"subtractor", true, false, {.n = 3},
             [](const UnitParams& p) { return build_subtractor(p.n); }, subtractor_cases});
        add({"multiplier", true, false, {.n = 2}, [](const UnitParams& p) { return build_multiplier(p.n); },
             multiplier_cases});
        add({"divider", true, true, {.n = 2, .m = 2},
             [](const UnitParams& p) { return build_divider(p.n, p.m, p.zero_safe, p.with_remainder); },
             divider_cases});
        return u;
    }();
    return units;
}

const Unit* find_unit(const std::string& name) {
    for (const auto& u : unit_registry())
        if (u.name == name)
            return &u;
    return nullptr;
}

} // namespace qalu
