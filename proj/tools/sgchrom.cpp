// sgchrom: chromatic invariants of signed graphs from the command line.
//
// Subcommands: chromatic, unlabeled-chromatic, automorphisms, quotient,
// acyclic, unlabeled-acyclic, flats, selfcheck. Input is the graph text
// format (see README); `quotient` additionally needs a `perm` line.
//
// Exit codes: 0 success, 1 domain/validation error, 2 capacity/budget error,
// 3 selfcheck failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgc/action.hpp"
#include "sgc/chromatic.hpp"
#include "sgc/corpus.hpp"
#include "sgc/io.hpp"
#include "sgc/quotient.hpp"
#include "sgc/selfcheck.hpp"
#include "sgc/unlabeled.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string input_path;
    std::vector<std::string> selfcheck_paths;
    std::string format = "text"; // text | json
    std::string sign_rule = "derived";
    int k_min = 0;
    int k_max = 3;
    int n_max = 8;
    long long budget = sgc::kDefaultBruteBudget;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw sgc::ValidationError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const RunConfig& cfg, const ordered_json& json, const std::string& text) {
    if (cfg.format == "json")
        std::cout << json.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_chromatic(const RunConfig& cfg) {
    sgc::SignedGraph g = sgc::parse_graph(read_input(cfg.input_path));
    sgc::ExactPolynomial chi = sgc::chromatic_polynomial(g, cfg.n_max);
    ordered_json out;
    out["labeled_chromatic"] = sgc::polynomial_to_json(chi);
    emit(cfg, out, "chi(k) = " + chi.pretty() + "\n");
    return 0;
}

int cmd_unlabeled_chromatic(const RunConfig& cfg, bool via_flats) {
    sgc::SignedGraph g = sgc::parse_graph(read_input(cfg.input_path));
    sgc::ExactPolynomial chi_hat = via_flats
                                       ? sgc::unlabeled_chromatic_via_flats(g, cfg.n_max)
                                       : sgc::unlabeled_chromatic_via_quotients(g, cfg.n_max);
    auto group_order = sgc::automorphism_group(g, cfg.n_max).size();
    ordered_json out;
    out["unlabeled_chromatic"] = sgc::polynomial_to_json(chi_hat);
    out["aut_group_order"] = group_order;
    emit(cfg, out,
         "chi-hat(k) = " + chi_hat.pretty() + "\n|B| = " + std::to_string(group_order) + "\n");
    return 0;
}

int cmd_automorphisms(const RunConfig& cfg) {
    sgc::SignedGraph g = sgc::parse_graph(read_input(cfg.input_path));
    auto group = sgc::automorphism_group(g, cfg.n_max);
    ordered_json out;
    out["aut_group_order"] = group.size();
    auto list = ordered_json::array();
    std::string text = "|B| = " + std::to_string(group.size()) + "\n";
    for (const auto& beta : group) {
        list.push_back(sgc::print_perm(beta));
        text += sgc::print_perm(beta) + "\n";
    }
    out["automorphisms"] = std::move(list);
    emit(cfg, out, text);
    return 0;
}

int cmd_quotient(const RunConfig& cfg) {
    sgc::ParsedInput in = sgc::parse_input(read_input(cfg.input_path));
    if (!in.perm.has_value())
        throw sgc::ValidationError("quotient needs a 'perm' line in the input");
    auto rule = cfg.sign_rule == "paper-figure" ? sgc::QuotientSignRule::paper_figure
                                                : sgc::QuotientSignRule::derived;
    sgc::QuotientResult q = sgc::quotient(in.graph, *in.perm, rule);
    ordered_json out;
    out["graph"] = sgc::print_graph(q.graph);
    out["vertex_map"] = q.vertex_map;
    out["edge_map"] = q.edge_map;
    out["sign_rule"] = cfg.sign_rule;
    std::string text = sgc::print_graph(q.graph);
    text += "vertex_map " + ordered_json(q.vertex_map).dump() + "\n";
    text += "edge_map " + ordered_json(q.edge_map).dump() + "\n";
    emit(cfg, out, text);
    return 0;
}

int cmd_acyclic(const RunConfig& cfg, bool unlabeled) {
    sgc::SignedGraph g = sgc::parse_graph(read_input(cfg.input_path));
    ordered_json out;
    std::string text;
    if (unlabeled) {
        long long count = sgc::unlabeled_acyclic_count(g, cfg.n_max);
        out["unlabeled_acyclic"] = count;
        out["aut_group_order"] = sgc::automorphism_group(g, cfg.n_max).size();
        text = "unlabeled acyclic orientations: " + std::to_string(count) + "\n";
    } else {
        long long count = sgc::acyclic_count(g, cfg.n_max);
        out["acyclic"] = count;
        text = "acyclic orientations: " + std::to_string(count) + "\n";
    }
    emit(cfg, out, text);
    return 0;
}

int cmd_flats(const RunConfig& cfg) {
    sgc::SignedGraph g = sgc::parse_graph(read_input(cfg.input_path));
    auto ideal = sgc::p_sigma(g, cfg.n_max);
    auto whitney = sgc::whitney_numbers(g, cfg.n_max);
    ordered_json out;
    out["n"] = g.n();
    out["lattice_size"] = sgc::enumerate_flats(g.n(), cfg.n_max).size();
    auto list = ordered_json::array();
    for (const auto& f : ideal) list.push_back(sgc::flat_to_json(f));
    out["p_sigma"] = std::move(list);
    out["whitney"] = whitney;
    std::string text = "|L| = " + out["lattice_size"].dump() +
                       ", |P(Sigma)| = " + std::to_string(ideal.size()) + "\n";
    for (const auto& f : ideal) text += sgc::flat_to_json(f).dump() + "\n";
    text += "whitney " + ordered_json(whitney).dump() + "\n";
    emit(cfg, out, text);
    return 0;
}

int cmd_selfcheck(const RunConfig& cfg) {
    std::vector<sgc::CorpusEntry> extra;
    for (const auto& path : cfg.selfcheck_paths)
        extra.push_back({path, sgc::parse_graph(read_input(path))});
    sgc::SelfCheckOptions options;
    options.k_min = cfg.k_min;
    options.k_max = cfg.k_max;
    options.n_max = cfg.n_max;
    options.budget = cfg.budget;
    auto results = sgc::run_selfcheck(extra, options);

    bool all_passed = true;
    ordered_json checks = ordered_json::array();
    std::string text;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name +
                (r.detail.empty() ? "" : " -- " + r.detail) + "\n";
    }
    ordered_json out;
    out["checks"] = std::move(checks);
    out["passed"] = all_passed;
    text += all_passed ? "selfcheck passed\n" : "selfcheck FAILED\n";
    emit(cfg, out, text);
    return all_passed ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic invariants of signed graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--n-max", cfg.n_max, "enumeration bound on the vertex count")
        ->envname("SGCHROM_N_MAX")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "brute-force budget on (2k+1)^n")
        ->envname("SGCHROM_BRUTE_BUDGET")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--k-min", cfg.k_min, "smallest k for oracle checks")
        ->envname("SGCHROM_K_MIN")
        ->capture_default_str();
    app.add_option("--k-max", cfg.k_max, "largest k for oracle checks")
        ->envname("SGCHROM_K_MAX")
        ->capture_default_str();

    std::string method = "quotients";
    auto add_input = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("input", cfg.input_path, "graph file ('-' for stdin)");
        if (required) opt->required();
    };

    auto* chromatic = app.add_subcommand("chromatic", "labeled chromatic polynomial");
    add_input(chromatic, true);
    auto* unlabeled = app.add_subcommand("unlabeled-chromatic", "chromatic polynomial up to "
                                                                "signed automorphisms");
    add_input(unlabeled, true);
    unlabeled->add_option("--method", method, "quotients | flats")
        ->check(CLI::IsMember({"quotients", "flats"}))
        ->capture_default_str();
    auto* automorphisms = app.add_subcommand("automorphisms", "signed automorphism group");
    add_input(automorphisms, true);
    auto* quotient = app.add_subcommand("quotient", "quotient by the bundled 'perm' line");
    add_input(quotient, true);
    quotient->add_option("--sign-rule", cfg.sign_rule, "derived | paper-figure")
        ->check(CLI::IsMember({"derived", "paper-figure"}))
        ->capture_default_str();
    auto* acyclic = app.add_subcommand("acyclic", "count of acyclic orientations");
    add_input(acyclic, true);
    auto* unlabeled_acyclic =
        app.add_subcommand("unlabeled-acyclic", "acyclic orientations up to automorphisms");
    add_input(unlabeled_acyclic, true);
    auto* flats = app.add_subcommand("flats", "the order ideal P(Sigma) and Whitney numbers");
    add_input(flats, true);
    auto* selfcheck = app.add_subcommand(
        "selfcheck", "run every formula against its oracle over the bundled corpus");
    selfcheck->add_option("inputs", cfg.selfcheck_paths,
                          "extra graph files to fold into the corpus");

    CLI11_PARSE(app, argc, argv);

    auto fail = [&](const sgc::Error& err, int code) {
        if (cfg.format == "json") {
            ordered_json out;
            out["error"] = {{"code", err.code()}, {"message", err.what()}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "error (" << err.code() << "): " << err.what() << "\n";
        }
        return code;
    };

    try {
        if (chromatic->parsed()) return cmd_chromatic(cfg);
        if (unlabeled->parsed()) return cmd_unlabeled_chromatic(cfg, method == "flats");
        if (automorphisms->parsed()) return cmd_automorphisms(cfg);
        if (quotient->parsed()) return cmd_quotient(cfg);
        if (acyclic->parsed()) return cmd_acyclic(cfg, false);
        if (unlabeled_acyclic->parsed()) return cmd_acyclic(cfg, true);
        if (flats->parsed()) return cmd_flats(cfg);
        if (selfcheck->parsed()) return cmd_selfcheck(cfg);
    } catch (const sgc::CapacityError& err) {
        return fail(err, 2);
    } catch (const sgc::Error& err) {
        return fail(err, 1);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
