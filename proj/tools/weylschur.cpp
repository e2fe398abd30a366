// Command-line front end: exact symplectic/orthogonal/Schur symmetric
// functions by determinant or vertex-operator realization, specializations
// to classical-group characters, and identity verification suites.
//
// Exit codes: 0 success, 1 identity failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weylschur/schur.hpp"
#include "weylschur/specialize.hpp"
#include "weylschur/verify.hpp"
#include "weylschur/vertexops.hpp"

using namespace weylschur;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& text) {
    std::string s = text;
    std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == ' '; });
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad partition entry: " + item);
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rational> parse_point(const std::string& text) {
    std::string s = text;
    std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == ' ' || c == '"'; });
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(rational_from_string(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

enum class Kind { SP, O, SCHUR };

Kind parse_kind(const std::string& s) {
    if (s == "sp") return Kind::SP;
    if (s == "o") return Kind::O;
    if (s == "schur") return Kind::SCHUR;
    throw UsageError("unknown character kind: " + s + " (expected sp|o|schur)");
}

GenFamily parse_family(const std::string& s) {
    if (s == "h") return GenFamily::H;
    if (s == "e") return GenFamily::E;
    if (s == "hhat") return GenFamily::HHAT;
    if (s == "ehat") return GenFamily::EHAT;
    if (s == "hcheck") return GenFamily::HCHECK;
    if (s == "echeck") return GenFamily::ECHECK;
    throw UsageError("unknown generator family: " + s);
}

/// Determinant formula selected by `det:<family>` for the given kind; the
/// shape and conjugation are implied by admissibility.
SymFunc char_by_det(Kind kind, const Partition& lam, GenFamily fam) {
    if (kind == Kind::SCHUR) {
        if (fam != GenFamily::H && fam != GenFamily::E)
            throw UsageError("char schur supports det:h and det:e only");
        return to_p_basis(jacobi_trudi(lam, fam));
    }
    const CharKind ck = kind == Kind::SP ? CharKind::SP : CharKind::O;
    for (DetShape shape : {DetShape::PLUS, DetShape::MINUS})
        for (bool conj : {false, true}) {
            const DetFormula f{ck, fam, shape, conj};
            if (admissible(f)) return char_det(lam, f);
        }
    throw UsageError("generator family not admissible for this character kind");
}

SymFunc compute_char(Kind kind, const Partition& lam, const std::string& via) {
    if (via.rfind("det:", 0) == 0) return char_by_det(kind, lam, parse_family(via.substr(4)));
    if (via == "vertex") {
        switch (kind) {
            case Kind::SP: return sp_vertex(lam);
            case Kind::O: return o_vertex(lam);
            case Kind::SCHUR: return schur_vertex(lam);
        }
    }
    if (via == "dual") {
        switch (kind) {
            case Kind::SP: return sp_dual_vertex(lam);
            case Kind::O: return o_dual_vertex(lam);
            case Kind::SCHUR: return schur_dual_vertex(lam);
        }
    }
    if (via.rfind("frobenius:", 0) == 0) {
        const std::string variant = via.substr(10);
        FrobVariant fv;
        if (variant == "creation")
            fv = FrobVariant::CREATION_FIRST;
        else if (variant == "annihilation")
            fv = FrobVariant::ANNIHILATION_FIRST;
        else
            throw UsageError("frobenius variant must be creation|annihilation");
        const VertexKind vk = kind == Kind::SP    ? VertexKind::SP
                              : kind == Kind::O   ? VertexKind::O
                                                  : VertexKind::SCHUR;
        return frobenius_vertex(vk, to_frobenius(lam), fv);
    }
    throw UsageError("unknown realization selector: " + via);
}

void print_symfunc(const SymFunc& f, Basis basis, const std::string& format) {
    const SymFunc converted = to_basis(f, basis);
    if (format == "json")
        std::cout << to_json(converted).dump() << "\n";
    else
        std::cout << to_text(converted) << "\n";
}

int suite_max_weight(int requested) {
    if (const char* cap = std::getenv("WEYLSCHUR_MAX_WEIGHT")) {
        const int c = std::atoi(cap);
        if (c > 0 && requested > c)
            throw UsageError("--max-weight " + std::to_string(requested) +
                             " exceeds WEYLSCHUR_MAX_WEIGHT=" + std::to_string(c));
    }
    return requested;
}

void report_suite(const SuiteReport& rep, const std::string& format) {
    if (format == "json") {
        json out;
        out["suite"] = rep.suite;
        out["passed"] = rep.passed();
        out["total"] = rep.checks.size();
        out["checks"] = json::array();
        for (const auto& c : rep.checks)
            out["checks"].push_back(
                {{"name", c.name}, {"pass", c.pass}, {"replay", json::parse(c.replay)}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << rep.suite << ": " << (rep.all_pass() ? "PASS" : "FAIL") << " ("
                  << rep.passed() << "/" << rep.checks.size() << " instances)\n";
        for (const auto& c : rep.checks)
            if (!c.pass) std::cout << "  FAIL " << c.name << "  replay: " << c.replay << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact symplectic/orthogonal/Schur symmetric functions"};
    app.require_subcommand(1);

    std::string arg_kind, arg_partition, via = "det:h", basis = "p", format = "text";
    std::string group = "Sp", point_text;
    std::string suite;
    int max_weight = 6, range = 4, van_k = 4, reps = 10;
    std::uint64_t seed = 1;

    auto* cmd_char = app.add_subcommand("char", "Compute a character as a symmetric function");
    cmd_char->add_option("kind", arg_kind, "sp|o|schur")->required();
    cmd_char->add_option("partition", arg_partition, "e.g. [3,1]")->required();
    cmd_char->add_option("--via", via, "det:<h|e|hhat|ehat|hcheck|echeck>|vertex|dual|frobenius:<creation|annihilation>");
    cmd_char->add_option("--basis", basis)->check(CLI::IsMember({"p", "h", "e", "s"}));
    cmd_char->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_expand = app.add_subcommand("expand", "Schur-expansion coefficients");
    cmd_expand->add_option("kind", arg_kind)->required();
    cmd_expand->add_option("partition", arg_partition)->required();
    cmd_expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_dual = app.add_subcommand("dual", "Check omega(sp_l) = o_{l'}");
    cmd_dual->add_option("partition", arg_partition)->required();
    cmd_dual->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_spec = app.add_subcommand("specialize", "Evaluate a character at a point and cross-check");
    cmd_spec->add_option("kind", arg_kind, "sp|o")->required();
    cmd_spec->add_option("partition", arg_partition)->required();
    cmd_spec->add_option("--group", group, "Sp|SOodd|SOeven");
    cmd_spec->add_option("--point", point_text, "comma-separated rationals (square roots y_i for SOodd)")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Run an identity verification suite");
    cmd_verify->add_option("suite", suite,
                           "clifford|dualbasis|dets8|frobenius|vandermonde|duality|characters|all")
        ->required();
    cmd_verify->add_option("--max-weight", max_weight);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--range", range, "mode-index range for clifford");
    cmd_verify->add_option("--k", van_k, "max Vandermonde size");
    cmd_verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_bench = app.add_subcommand("bench", "Time det vs vertex realizations");
    cmd_bench->add_option("kind", arg_kind)->required();
    cmd_bench->add_option("partition", arg_partition)->required();
    cmd_bench->add_option("--reps", reps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_char->parsed()) {
        const Kind kind = parse_kind(arg_kind);
        const Partition lam = parse_partition(arg_partition);
        print_symfunc(compute_char(kind, lam, via), basis_from_letter(basis[0]), format);
        return 0;
    }

    if (cmd_expand->parsed()) {
        const Kind kind = parse_kind(arg_kind);
        const Partition lam = parse_partition(arg_partition);
        const SymFunc f = kind == Kind::SP    ? sp_det(lam)
                          : kind == Kind::O   ? o_det(lam)
                                              : schur(lam);
        const SymFunc expansion = to_schur_expansion(f);
        for (const auto& [mu, c] : expansion.terms())
            if (denominator(c) != 1) {
                std::cerr << "non-integer Schur coefficient at " << mu.str() << "\n";
                return kExitFailure;
            }
        if (format == "json") {
            std::cout << to_json(expansion).dump() << "\n";
        } else {
            for (auto it = expansion.terms().rbegin(); it != expansion.terms().rend(); ++it)
                std::cout << it->first.str() << "  " << to_string(it->second) << "\n";
        }
        return 0;
    }

    if (cmd_dual->parsed()) {
        const Partition lam = parse_partition(arg_partition);
        const SymFunc lhs = omega(sp_det(lam));
        const SymFunc rhs = o_det(lam.conjugate());
        const bool equal = lhs == rhs;
        if (format == "json") {
            std::cout << json{{"lambda", lam.parts()},
                              {"omega_sp", to_json(lhs)},
                              {"o_conjugate", to_json(rhs)},
                              {"verdict", equal ? "EQUAL" : "NOT-EQUAL"}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "omega(sp" << lam.str() << ") = " << to_text(lhs) << "\n";
            std::cout << "o" << lam.conjugate().str() << "       = " << to_text(rhs) << "\n";
            std::cout << (equal ? "EQUAL" : "NOT-EQUAL") << "\n";
        }
        return equal ? 0 : kExitFailure;
    }

    if (cmd_spec->parsed()) {
        const Kind kind = parse_kind(arg_kind);
        const Partition lam = parse_partition(arg_partition);
        const std::vector<Rational> xs = parse_point(point_text);
        GroupKind gk;
        if (group == "Sp")
            gk = GroupKind::SP;
        else if (group == "SOodd")
            gk = GroupKind::O_ODD;
        else if (group == "SOeven")
            gk = GroupKind::O_EVEN;
        else
            throw UsageError("unknown group: " + group);
        if ((gk == GroupKind::SP) != (kind == Kind::SP))
            throw UsageError("kind/group mismatch: sp goes with Sp, o with SOodd|SOeven");
        CrosscheckResult r;
        try {
            r = character_crosscheck(gk, lam, xs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        json pt = json::array();
        for (const auto& x : xs) pt.push_back(to_string(x));
        std::cout << json{{"lambda", lam.parts()},
                          {"group", group},
                          {"rank", xs.size()},
                          {"point", pt},
                          {"universal", to_string(r.universal)},
                          {"oracle", to_string(r.oracle)}}
                         .dump()
                  << "\n";
        return r.universal == r.oracle ? 0 : kExitFailure;
    }

    if (cmd_verify->parsed()) {
        const int mw = suite_max_weight(max_weight);
        std::vector<SuiteReport> reports;
        auto want = [&](const char* s) { return suite == s || suite == "all"; };
        if (want("clifford")) reports.push_back(verify_clifford(range, std::min(mw, 6)));
        if (want("dualbasis")) reports.push_back(verify_dualbasis(mw));
        if (want("dets8")) reports.push_back(verify_dets8(mw));
        if (want("frobenius")) reports.push_back(verify_frobenius(mw));
        if (want("vandermonde")) reports.push_back(verify_vandermonde(van_k, seed));
        if (want("duality")) reports.push_back(verify_duality(mw));
        if (want("characters")) reports.push_back(verify_characters(std::min(mw, 6), seed));
        if (reports.empty()) throw UsageError("unknown suite: " + suite);
        bool all = true;
        for (const auto& rep : reports) {
            report_suite(rep, format);
            all = all && rep.all_pass();
        }
        return all ? 0 : kExitFailure;
    }

    if (cmd_bench->parsed()) {
        const Kind kind = parse_kind(arg_kind);
        const Partition lam = parse_partition(arg_partition);
        auto det_route = [&] {
            return kind == Kind::SP    ? sp_det(lam)
                   : kind == Kind::O   ? o_det(lam)
                                       : schur(lam);
        };
        auto vertex_route = [&] {
            return kind == Kind::SP    ? sp_vertex(lam)
                   : kind == Kind::O   ? o_vertex(lam)
                                       : schur_vertex(lam);
        };
        if (det_route() != vertex_route()) {
            std::cerr << "bench: realizations disagree for " << arg_kind << " " << lam.str()
                      << "\n";
            return kExitFailure;
        }
        auto time_route = [&](auto&& fn) {
            using clock = std::chrono::steady_clock;
            double best = 1e300, total = 0;
            for (int i = 0; i < reps; ++i) {
                const auto t0 = clock::now();
                volatile bool sink = fn().is_zero();
                (void)sink;
                const double ms =
                    std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                best = std::min(best, ms);
                total += ms;
            }
            return std::pair{best, total / reps};
        };
        const auto [det_best, det_mean] = time_route(det_route);
        const auto [vx_best, vx_mean] = time_route(vertex_route);
        std::cout << "results equal: yes (reps=" << reps << ")\n";
        std::cout << "det    best " << det_best << " ms, mean " << det_mean << " ms\n";
        std::cout << "vertex best " << vx_best << " ms, mean " << vx_mean << " ms\n";
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
