// psi: domination cover pebbling workbench
//
// Subcommands: formula, exact, check, worst, verify, proptest, bench.
// Exit codes: 0 success/agreement, 1 disagreement or property failure,
// 2 usage/parse error, 3 node budget exhausted (unknown).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcp/extremal.hpp"
#include "dcp/formulas.hpp"
#include "dcp/graph.hpp"
#include "dcp/psi_exact.hpp"
#include "dcp/solver.hpp"
#include "dcp/verify.hpp"
#include "dcp/version.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool compact_json = false;
    std::uint64_t seed = 0;
    int threads = 1;
    std::uint64_t max_nodes = 100'000'000;
    unsigned long long max_configs = 10'000'000;
};

void print_json(const json& j, const GlobalOpts& g) {
    if (g.compact_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

json base_json(const char* command, const GlobalOpts& g) {
    json j;
    j["version"] = dcp::kVersion;
    j["command"] = command;
    j["seed"] = g.seed;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw dcp::Error(dcp::ErrorKind::MalformedInput, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dcp::Graph load_graph(const std::string& family, const std::string& graph_path) {
    if (!family.empty() && !graph_path.empty())
        throw dcp::Error(dcp::ErrorKind::MalformedInput, "--family and --graph are exclusive");
    if (!family.empty()) return dcp::build_family(dcp::FamilySpec::parse(family));
    if (!graph_path.empty()) return dcp::parse_edge_list(read_file(graph_path));
    throw dcp::Error(dcp::ErrorKind::MalformedInput, "need --family or --graph");
}

dcp::Configuration load_config(const std::string& value, int n) {
    std::string text = value;
    {
        std::ifstream probe(value);
        if (probe.good()) text = read_file(value);
    }
    // JSON object or compact "v:count" form
    auto first = text.find_first_not_of(" \t\r\n");
    dcp::Configuration c;
    if (first != std::string::npos && text[first] == '{') {
        c = dcp::config_from_json(text);
        if (c.size() != n)
            throw dcp::Error(dcp::ErrorKind::SizeMismatch,
                             "configuration has " + std::to_string(c.size()) +
                                 " entries, graph has " + std::to_string(n));
    } else {
        std::string trimmed = text;
        while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                                    trimmed.back() == ' '))
            trimmed.pop_back();
        c = dcp::config_from_compact(trimmed, n);
    }
    return c;
}

json stats_json(const dcp::SearchStats& s) {
    json j;
    j["nodes_expanded"] = s.nodes_expanded;
    j["memo_hits"] = s.memo_hits;
    j["peak_frontier"] = s.peak_frontier;
    j["dominance_prunes"] = s.dominance_prunes;
    j["potential_prunes"] = s.potential_prunes;
    j["visited_states"] = s.visited_states;
    return j;
}

json row_json(const dcp::InstanceRow& row) {
    json r;
    r["instance"] = row.spec.to_string();
    r["mode"] = dcp::verify_mode_name(row.mode);
    r["formula"] = row.formula;
    if (row.exact) r["exact"] = *row.exact;
    if (row.lower) r["lower"] = *row.lower;
    r["agree"] = row.agree;
    r["worst_certified"] = row.worst_certified;
    r["has_worst"] = row.has_worst;
    r["seconds"] = row.seconds;
    if (!row.note.empty()) r["note"] = row.note;
    return r;
}

int cmd_formula(const GlobalOpts& g, const std::string& family, bool show_terms) {
    auto spec = dcp::FamilySpec::parse(family);
    json out = base_json("formula", g);
    out["family"] = spec.to_string();
    out["psi"] = dcp::psi_formula(spec);
    if (show_terms && spec.family == dcp::Family::BTree) {
        auto t = dcp::psi_btree_terms(spec.params[0]);
        out["terms"] = {{"t1", t.t1}, {"t2", t.t2}, {"t3", t.t3}, {"t4", t.t4},
                        {"gamma", t.gamma}};
    }
    print_json(out, g);
    return 0;
}

int cmd_exact(const GlobalOpts& g, const std::string& family, const std::string& graph_path,
              std::optional<long long> hint, int sample, bool no_symmetry) {
    dcp::Graph graph = load_graph(family, graph_path);
    dcp::PsiOptions opts;
    opts.hint = hint;
    opts.max_configs = g.max_configs;
    opts.seed = g.seed;
    if (sample > 0) opts.sample_trials = sample;
    opts.symmetry_reduction = !no_symmetry;
    opts.solver.max_nodes = g.max_nodes;
    dcp::PsiResult r = dcp::psi_exact(graph, opts);

    json out = base_json("exact", g);
    if (graph.family) out["family"] = graph.family->to_string();
    out["method"] = dcp::psi_method_name(r.method);
    if (r.value) out["psi"] = *r.value;
    out["lower"] = r.lower;
    if (r.upper) out["upper"] = *r.upper;
    if (r.witness_bad_config)
        out["witness_bad_config"] = {{"counts", r.witness_bad_config->counts}};
    out["stats"] = {{"configs_tested", r.stats.configs_tested},
                    {"solver_nodes_total", r.stats.solver_nodes_total}};
    if (r.sample) out["sample"] = {{"trials", r.sample->trials}, {"seed", r.sample->seed}};
    print_json(out, g);
    return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& family, const std::string& graph_path,
              const std::string& config, const std::string& witness_path, bool no_dom,
              bool no_pot) {
    dcp::Graph graph = load_graph(family, graph_path);
    dcp::Configuration c = load_config(config, graph.n);
    dcp::SolverOptions opts;
    opts.max_nodes = g.max_nodes;
    opts.prune_dominance = !no_dom;
    opts.prune_potential = !no_pot;
    dcp::Decision d = dcp::solvable(graph, c, opts);

    json out = base_json("check", g);
    out["outcome"] = dcp::outcome_name(d.outcome);
    out["total_pebbles"] = c.total();
    out["stats"] = stats_json(d.stats);
    if (d.witness) {
        out["witness_moves"] = d.witness->moves.size();
        std::string diag;
        out["witness_verified"] = dcp::verify_strategy(graph, c, *d.witness, &diag);
        if (!witness_path.empty()) {
            std::ofstream f(witness_path);
            f << dcp::strategy_to_json(*d.witness) << "\n";
            out["witness_file"] = witness_path;
        }
    }
    print_json(out, g);
    return d.outcome == dcp::Outcome::Unknown ? 3 : 0;
}

int cmd_worst(const GlobalOpts& g, const std::string& family, const std::string& emit_path) {
    auto spec = dcp::FamilySpec::parse(family);
    dcp::ExtremalConfig w;
    switch (spec.family) {
        case dcp::Family::Path: w = dcp::path_worst(spec.params[0]); break;
        case dcp::Family::Cycle: w = dcp::cycle_worst(spec.params[0]); break;
        case dcp::Family::Wheel: w = dcp::wheel_worst(spec.params[0]); break;
        case dcp::Family::Multipartite: w = dcp::multipartite_worst(spec.params); break;
        case dcp::Family::BTree: w = dcp::btree_worst(spec.params[0]); break;
        case dcp::Family::Complete:
            w = {dcp::Configuration::zeros(static_cast<int>(spec.params[0])), true};
            break;
    }
    json out = base_json("worst", g);
    out["family"] = spec.to_string();
    out["counts"] = w.config.counts;
    out["compact"] = dcp::config_to_compact(w.config);
    out["total"] = w.config.total();
    out["degenerate"] = w.degenerate;
    if (!emit_path.empty()) {
        std::ofstream f(emit_path);
        f << dcp::config_to_json(w.config) << "\n";
        out["file"] = emit_path;
    }
    print_json(out, g);
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& family, const std::string& range,
               int sample, bool lower_bound_only) {
    dcp::Family fam = dcp::family_from_name(family);
    long long lo = 0, hi = -1;
    if (fam != dcp::Family::Multipartite) {
        auto dots = range.find("..");
        if (dots == std::string::npos)
            throw dcp::Error(dcp::ErrorKind::MalformedInput, "--range needs lo..hi");
        lo = std::stoll(range.substr(0, dots));
        hi = std::stoll(range.substr(dots + 2));
    }
    std::optional<dcp::VerifyMode> mode;
    if (lower_bound_only) mode = dcp::VerifyMode::LowerBoundOnly;
    else if (sample > 0) mode = dcp::VerifyMode::Sampled;

    dcp::VerifyOptions opts;
    opts.seed = g.seed;
    opts.threads = g.threads;
    opts.solver.max_nodes = g.max_nodes;
    opts.max_configs = g.max_configs;
    if (sample > 0) opts.sample_trials = sample;

    dcp::VerificationReport rep = dcp::verify_family(fam, lo, hi, mode, opts);

    json out = base_json("verify", g);
    out["family"] = dcp::family_name(fam);
    if (fam != dcp::Family::Multipartite) out["range"] = {lo, hi};
    json rows = json::array();
    for (const auto& row : rep.rows) rows.push_back(row_json(row));
    out["rows"] = rows;
    out["overall_pass"] = rep.overall_pass;
    print_json(out, g);
    return rep.overall_pass ? 0 : 1;
}

int cmd_proptest(const GlobalOpts& g, const std::string& suite, int trials) {
    json out = base_json("proptest", g);
    json results = json::array();
    bool all_pass = true;
    std::vector<std::string> names =
        suite == "all" ? dcp::suite_names() : std::vector<std::string>{suite};
    for (const auto& name : names) {
        dcp::SuiteResult r = dcp::run_suite(name, trials, g.seed);
        all_pass = all_pass && r.pass;
        json jr;
        jr["suite"] = r.name;
        jr["pass"] = r.pass;
        jr["checks"] = r.checks;
        jr["seed"] = r.seed;
        if (!r.detail.empty()) jr["detail"] = r.detail;
        results.push_back(jr);
    }
    out["trials"] = trials;
    out["results"] = results;
    out["pass"] = all_pass;
    print_json(out, g);
    return all_pass ? 0 : 1;
}

int cmd_bench(const GlobalOpts& g) {
    struct Item {
        std::string name;
        dcp::FamilySpec spec;
        dcp::Configuration config;
    };
    std::vector<Item> items;
    for (long long n = 5; n <= 7; ++n)
        items.push_back({"path_worst(" + std::to_string(n) + ")", {dcp::Family::Path, {n}},
                         dcp::path_worst(n).config});
    for (long long n = 5; n <= 7; ++n)
        items.push_back({"cycle_worst(" + std::to_string(n) + ")", {dcp::Family::Cycle, {n}},
                         dcp::cycle_worst(n).config});
    items.push_back({"btree_worst(2)", {dcp::Family::BTree, {2}}, dcp::btree_worst(2).config});
    items.push_back({"btree_worst(3)", {dcp::Family::BTree, {3}}, dcp::btree_worst(3).config});

    json rows = json::array();
    for (const auto& item : items) {
        dcp::Graph graph = dcp::build_family(item.spec);
        dcp::SolverOptions opts;
        opts.max_nodes = g.max_nodes;
        auto t0 = std::chrono::steady_clock::now();
        dcp::Decision d = dcp::solvable(graph, item.config, opts);
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back({{"instance", item.name},
                        {"outcome", dcp::outcome_name(d.outcome)},
                        {"nodes", d.stats.nodes_expanded},
                        {"seconds", sec}});
    }
    json out = base_json("bench", g);
    out["rows"] = rows;
    print_json(out, g);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination cover pebbling workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_flag("--json", g.compact_json, "compact single-line JSON output");
    app.add_option("--seed", g.seed, "seed for sampled/randomized runs");
    app.add_option("--threads", g.threads, "worker threads for verify sweeps");
    app.add_option("--max-nodes", g.max_nodes, "solver node budget");
    app.add_option("--max-configs", g.max_configs, "enumeration cap per layer");

    std::string family, graph_path, config, range, witness_path, emit_path;
    std::string suite = "all";
    bool show_terms = false, no_dom = false, no_pot = false, no_symmetry = false;
    bool lower_bound_only = false;
    int sample = 0, trials = 1000;
    long long hint_val = -1;

    auto* formula = app.add_subcommand("formula", "closed-form psi for a family instance");
    formula->add_option("--family", family, "family spec, e.g. btree:5")->required();
    formula->add_flag("--show-terms", show_terms, "include the btree term breakdown");

    auto* exact = app.add_subcommand("exact", "exact psi by exhaustive enumeration");
    exact->add_option("--family", family, "family spec");
    exact->add_option("--graph", graph_path, "edge-list file");
    exact->add_option("--hint", hint_val, "starting layer for the scan");
    exact->add_option("--sample", sample, "trials per layer in sampled mode");
    exact->add_flag("--no-symmetry", no_symmetry, "disable orbit filtering");

    auto* check = app.add_subcommand("check", "decide one configuration");
    check->add_option("--family", family, "family spec");
    check->add_option("--graph", graph_path, "edge-list file");
    check->add_option("--config", config, "JSON file/text or compact 'v:count,...'")->required();
    check->add_option("--emit-witness", witness_path, "write the witness strategy JSON here");
    check->add_flag("--no-prune-dominance", no_dom, "disable dominance pruning");
    check->add_flag("--no-prune-potential", no_pot, "disable the potential bound");

    auto* worst = app.add_subcommand("worst", "lower-bound configuration for a family");
    worst->add_option("--family", family, "family spec")->required();
    worst->add_option("--emit", emit_path, "write the configuration JSON here");

    auto* verify = app.add_subcommand("verify", "formula-vs-oracle sweep");
    verify->add_option("--family", family, "family name: path|cycle|wheel|complete|multipartite|btree")
        ->required();
    verify->add_option("--range", range, "instance range lo..hi");
    verify->add_option("--sample", sample, "sampled mode with this many trials");
    verify->add_flag("--lower-bound-only", lower_bound_only, "certify the worst configuration only");

    auto* proptest = app.add_subcommand("proptest", "run property suites");
    proptest->add_option("--suite", suite,
                         "monotonicity|witness-replay|pruning-equivalence|single-vertex-worst|all");
    proptest->add_option("--trials", trials, "seeded trials for randomized suites");

    app.add_subcommand("bench", "solver timings on the standard worst configurations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("formula")) return cmd_formula(g, family, show_terms);
        if (app.got_subcommand("exact"))
            return cmd_exact(g, family, graph_path,
                             hint_val >= 0 ? std::optional<long long>(hint_val) : std::nullopt,
                             sample, no_symmetry);
        if (app.got_subcommand("check"))
            return cmd_check(g, family, graph_path, config, witness_path, no_dom, no_pot);
        if (app.got_subcommand("worst")) return cmd_worst(g, family, emit_path);
        if (app.got_subcommand("verify"))
            return cmd_verify(g, family, range, sample, lower_bound_only);
        if (app.got_subcommand("proptest")) return cmd_proptest(g, suite, trials);
        if (app.got_subcommand("bench")) return cmd_bench(g);
    } catch (const dcp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == dcp::ErrorKind::Budget ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
