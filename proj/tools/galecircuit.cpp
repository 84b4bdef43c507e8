// Command-line front end: analyze circuits, construct witness systems,
// count/extract positive solutions, and render dessin profiles.
//
// Exit codes: 0 success, 1 negative mathematical verdict, 2 bad input,
// 3 internal limit (degree cap, tau budget, precision budget).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "galecircuit/json_io.hpp"

namespace gc = galecircuit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gc::ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw gc::ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw gc::ParseError("cannot write '" + path + "'");
    out << text;
}

std::vector<gc::Rational> parse_relation_arg(const std::string& arg) {
    // Either a comma-separated list "3,-7,6,-3,1" or a JSON file containing
    // an array or {"lambda": [...]}.
    if (arg.find(',') == std::string::npos && std::ifstream(arg).good()) {
        json j = read_json_file(arg);
        if (j.is_array()) return gc::rat_list_from_json(j);
        if (j.is_object() && j.contains("lambda")) return gc::rat_list_from_json(j["lambda"]);
        throw gc::ParseError("relation file must be an array or {\"lambda\": [...]}");
    }
    std::vector<gc::Rational> out;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(gc::parse_rational(tok));
    if (out.empty()) throw gc::ParseError("empty relation");
    return out;
}

std::vector<gc::Rational> parse_slopes(const std::string& arg) {
    std::vector<gc::Rational> out;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(gc::parse_rational(tok));
    return out;
}

long degree_cap_default() {
    if (const char* env = std::getenv("GALECIRCUIT_DEGREE_CAP")) {
        try {
            return std::stol(env);
        } catch (...) {
            throw gc::ParseError("GALECIRCUIT_DEGREE_CAP is not an integer");
        }
    }
    return gc::kDefaultDegreeCap;
}

int cmd_analyze(const std::string& file) {
    gc::Circuit c = gc::circuit_from_json(read_json_file(file));
    gc::AffineRelation rel = gc::affine_relation(c);
    gc::CharacterizationVerdict v = gc::characterize(c);
    std::cout << gc::verdict_json(c, rel, v).dump(2) << "\n";
    return v.supports_max ? kExitOk : kExitNegative;
}

int cmd_construct(const std::string& file, const std::string& slopes_arg, long tau_budget,
                  long cap, const std::string& out_file, const std::string& cert_file) {
    gc::Circuit c = gc::circuit_from_json(read_json_file(file));
    gc::CharacterizationVerdict v = gc::characterize(c);
    if (!v.supports_max) {
        gc::AffineRelation rel = gc::affine_relation(c);
        std::cerr << "circuit does not support n+1 positive solutions: " << v.failure_reason
                  << "\n";
        std::cout << gc::verdict_json(c, rel, v).dump(2) << "\n";
        return kExitNegative;
    }
    std::optional<std::vector<gc::Rational>> slopes;
    if (!slopes_arg.empty()) slopes = parse_slopes(slopes_arg);
    gc::Construction built = gc::construct_system(c, *v.witness, slopes, tau_budget, cap);
    json sys = gc::system_json(built.system);
    json cert = gc::certificate_json(built.cert);
    if (!out_file.empty()) write_text_file(out_file, sys.dump(2) + "\n");
    if (!cert_file.empty()) write_text_file(cert_file, cert.dump(2) + "\n");
    json combined{{"system", sys}, {"certificate", cert}};
    std::cout << combined.dump(2) << "\n";
    return kExitOk;
}

int cmd_count(const std::string& file, const std::string& eps_arg, bool perturb,
              std::uint64_t seed, long cap) {
    gc::SupportedSystem s = gc::system_from_json(read_json_file(file));
    gc::Rational eps = gc::parse_rational(eps_arg);
    gc::SolveReport rep = gc::solve_system(s, eps, cap, perturb, seed);
    std::cout << gc::solve_report_json(rep).dump(2) << "\n";
    return kExitOk;
}

int cmd_dessin(const std::string& input, const std::string& format) {
    gc::DessinProfile prof;
    bool is_file = std::ifstream(input).good();
    if (is_file) {
        json j = read_json_file(input);
        if (j.is_object() && j.contains("points")) {
            gc::Circuit c = gc::circuit_from_json(j);
            gc::CharacterizationVerdict v = gc::characterize(c);
            if (!v.supports_max)
                throw gc::InvalidProfile(0, "circuit has no witness ordering: " + v.failure_reason);
            prof = gc::edge_counts(v.witness->signed_seq);
        } else if (j.is_array()) {
            prof = gc::edge_counts(gc::rat_list_from_json(j));
        } else if (j.is_object() && j.contains("lambda")) {
            prof = gc::edge_counts(gc::rat_list_from_json(j["lambda"]));
        } else {
            throw gc::ParseError("dessin input must be a circuit, an array, or {\"lambda\":[...]}");
        }
    } else {
        prof = gc::edge_counts(parse_relation_arg(input));
    }
    gc::GraphFormat f = (format == "dot") ? gc::GraphFormat::dot : gc::GraphFormat::json_text;
    std::cout << gc::emit_graph(prof, f);
    if (format != "dot") std::cout << "\n";
    return kExitOk;
}

int cmd_realize(const std::string& relation_arg, long n, const std::string& out_file) {
    std::vector<gc::Rational> rel = parse_relation_arg(relation_arg);
    if (n == 0) n = static_cast<long>(rel.size()) - 2;
    gc::Circuit c = gc::realize_circuit(rel, n);
    json j = gc::circuit_json(c);
    if (!out_file.empty()) write_text_file(out_file, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit supports with maximally many positive solutions: "
                 "analyze, construct, count, render"};
    app.require_subcommand(1);

    long cap = 0;
    app.add_option("--degree-cap", cap,
                   "polynomial degree cap (default 20000; env GALECIRCUIT_DEGREE_CAP)");

    std::string an_file;
    auto* analyze = app.add_subcommand("analyze", "decide whether a circuit supports n+1 "
                                                  "positive solutions");
    analyze->add_option("circuit", an_file, "circuit JSON file")->required();

    std::string co_file, co_slopes, co_out, co_cert;
    long co_budget = 64;
    auto* construct = app.add_subcommand("construct", "build an explicit witness system");
    construct->add_option("circuit", co_file, "circuit JSON file")->required();
    construct->add_option("--slopes", co_slopes, "comma-separated lower-hull slopes");
    construct->add_option("--tau-budget", co_budget, "halving budget for tau (default 64)");
    construct->add_option("--out", co_out, "write the system JSON here");
    construct->add_option("--cert", co_cert, "write the certificate JSON here");

    std::string cn_file, cn_eps = "1/1000000000";
    bool cn_perturb = false;
    std::uint64_t cn_seed = 0;
    auto* count = app.add_subcommand("count", "count and lift positive solutions of a system");
    count->add_option("system", cn_file, "system JSON file")->required();
    count->add_option("--eps", cn_eps, "residual tolerance (rational, default 1/10^9)");
    count->add_flag("--perturb", cn_perturb, "apply a documented random rational perturbation");
    count->add_option("--seed", cn_seed, "seed for --perturb (default 0)");

    std::string de_input, de_format = "json";
    auto* dessin = app.add_subcommand("dessin", "emit the dessin d'enfant profile");
    dessin->add_option("input", de_input, "relation (comma list or file) or circuit file")
        ->required();
    dessin->add_option("--format", de_format, "dot or json (default json)")
        ->check(CLI::IsMember({"dot", "json"}));

    std::string re_rel, re_out;
    long re_n = 0;
    auto* realize = app.add_subcommand("realize", "realize a relation as a circuit");
    realize->add_option("relation", re_rel, "comma-separated relation or JSON file")->required();
    realize->add_option("--n", re_n, "ambient dimension (default: entries - 2)");
    realize->add_option("--out", re_out, "write the circuit JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap == 0) cap = degree_cap_default();
        if (*analyze) return cmd_analyze(an_file);
        if (*construct) return cmd_construct(co_file, co_slopes, co_budget, cap, co_out, co_cert);
        if (*count) return cmd_count(cn_file, cn_eps, cn_perturb, cn_seed, cap);
        if (*dessin) return cmd_dessin(de_input, de_format);
        if (*realize) return cmd_realize(re_rel, re_n, re_out);
    } catch (const gc::InvalidProfile& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const gc::NotStrictlyIncreasing& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const gc::DegreeCapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitLimit;
    } catch (const gc::SmallTExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitLimit;
    } catch (const gc::ResidualTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitLimit;
    } catch (const gc::NoDiagonalization& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const gc::NotACircuit& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const gc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const gc::PreconditionViolated& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const gc::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitLimit;
    }
    return kExitOk;
}
