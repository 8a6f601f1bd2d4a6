// rigikit: rigidity and global-rigidity analysis of graphs from the command
// line. Inputs are graph files (text or JSON) or stdin; every randomized
// command records its seed so reports are reproducible.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigikit/builders.hpp"
#include "rigikit/certify.hpp"
#include "rigikit/io.hpp"
#include "rigikit/oracle.hpp"
#include "rigikit/packing.hpp"
#include "rigikit/rigidity.hpp"
#include "rigikit/sparsity.hpp"

using nlohmann::json;
using namespace rigikit;

namespace {

struct CommonOpts {
    std::string input = "-";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int dim = 2;
    int trials = 3;
    int depth = 8;
    bool as_json = false;
    bool deterministic = false;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RIGIKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ParseError("RIGIKIT_SEED is not a number");
        }
    }
    return 20240817ull;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", o.input, "graph file (or - for stdin)");
    cmd->add_option("--seed", o.seed, "random seed (default: RIGIKIT_SEED or fixed)")
        ->each([&o](const std::string&) { o.seed_given = true; });
    cmd->add_option("--dim,-d", o.dim, "ambient dimension")->check(CLI::Range(1, 12));
    cmd->add_option("--trials", o.trials, "randomized test repetitions");
    cmd->add_option("--depth", o.depth, "removal-lemma recursion depth");
    cmd->add_flag("--json", o.as_json, "machine-readable report");
    cmd->add_flag("--deterministic", o.deterministic,
                  "suppress the timestamp field in reports");
}

void finish_report(json& report, const CommonOpts& o) {
    report["seed"] = o.seed;
    if (!o.deterministic) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        report["timestamp"] =
            std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
}

int emit(json report, const CommonOpts& o, int exit_code = 0) {
    finish_report(report, o);
    if (o.as_json) {
        std::cout << report.dump(2) << "\n";
        return exit_code;
    }
    // Human mode: a compact summary plus the JSON body for detail-seekers.
    if (report.contains("summary"))
        std::cout << report["summary"].get<std::string>() << "\n";
    else
        std::cout << report.dump(2) << "\n";
    return exit_code;
}

int emit_verdict(const SimpleGraph& g, const Verdict& v, const CommonOpts& o,
                 json extra = json::object()) {
    json report = verdict_to_json(v);
    report["graph"] = graph_to_json(g);
    for (auto& [key, value] : extra.items()) report[key] = value;
    std::ostringstream summary;
    summary << status_name(v.status) << " (dim " << v.dim << ")";
    if (!v.steps.empty()) summary << " via " << rule_name(v.steps.front().rule);
    report["summary"] = summary.str();
    return emit(std::move(report), o,
                v.status == Status::Unknown ? 2 : 0);
}

json packing_report(const PackingResult& r) {
    if (std::holds_alternative<TreePacking>(r)) {
        const auto& p = std::get<TreePacking>(r);
        return {{"feasible", true}, {"k", p.k}, {"assignment", p.assignment}};
    }
    const auto& w = std::get<PartitionWitness>(r);
    return {{"feasible", false},
            {"blocks", w.blocks},
            {"block_of", w.block_of},
            {"cross_edges", w.cross_edges},
            {"required", w.required}};
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

json config_json(const FloatConfig& c) {
    json arr = json::array();
    for (const auto& p : c) arr.push_back(p);
    return arr;
}

// ---------------------------------------------------------------------------

int cmd_rank(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    int r = generic_rank(g, o.dim, o.seed, o.trials);
    json report{{"command", "rank"},
                {"dim", o.dim},
                {"rank", r},
                {"edges", g.edge_count()},
                {"max_rank", o.dim * g.vertex_count() -
                                 (o.dim + 1) * o.dim / 2},
                {"summary", "generic rank " + std::to_string(r)}};
    if (o.dim == 2) report["pebble_rank"] = pebble_rank(g).rank;
    return emit(std::move(report), o);
}

int cmd_rigid(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    bool rigid = is_rigid(g, o.dim, o.seed);
    return emit({{"command", "rigid"},
                 {"dim", o.dim},
                 {"rigid", rigid},
                 {"summary", rigid ? "rigid" : "not rigid"}},
                o);
}

int cmd_redundant(const CommonOpts& o, bool vertex) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    json report{{"command", vertex ? "vredundant" : "redundant"},
                {"dim", o.dim}};
    if (vertex) {
        auto res = is_vertex_redundantly_rigid(g, o.dim, o.seed);
        report["vertex_redundantly_rigid"] = res.redundant;
        if (res.failing_vertex) report["failing_vertex"] = *res.failing_vertex;
        report["summary"] = res.redundant ? "vertex-redundantly rigid"
                                          : "not vertex-redundantly rigid";
    } else {
        auto res = is_redundantly_rigid(g, o.dim, o.seed);
        report["redundantly_rigid"] = res.redundant;
        if (res.failing_edge)
            report["failing_edge"] = {res.failing_edge->first,
                                      res.failing_edge->second};
        report["summary"] =
            res.redundant ? "redundantly rigid" : "not redundantly rigid";
    }
    return emit(std::move(report), o);
}

int cmd_laman(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    bool rigid = is_laman_rigid(g);
    auto pr = pebble_rank(g);
    return emit({{"command", "laman"},
                 {"rigid_2d", rigid},
                 {"pebble_rank", pr.rank},
                 {"target", 2 * g.vertex_count() - 3},
                 {"summary", rigid ? "Laman rigid" : "not rigid in the plane"}},
                o);
}

int cmd_circuit(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    bool circuit = is_circuit_r2(g);
    return emit({{"command", "circuit"},
                 {"circuit_r2", circuit},
                 {"summary", circuit ? "rigidity circuit in the plane"
                                     : "not a rigidity circuit"}},
                o);
}

int cmd_mcomp(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    auto classes = m_components(g);
    json cls = json::array();
    for (const auto& c : classes) {
        json edges = json::array();
        for (int i : c)
            edges.push_back({g.edges()[i].first, g.edges()[i].second});
        cls.push_back(edges);
    }
    return emit({{"command", "mcomp"},
                 {"components", cls},
                 {"m_connected", classes.size() == 1 && g.edge_count() > 0},
                 {"summary", std::to_string(classes.size()) + " matroid component(s)"}},
                o);
}

int cmd_ears(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    auto dec = ear_decomposition(g);
    bool ok = verify_ear_decomposition(g, dec);
    json ears = json::array();
    for (const auto& c : dec.circuits) {
        json edges = json::array();
        for (int i : c)
            edges.push_back({g.edges()[i].first, g.edges()[i].second});
        ears.push_back(edges);
    }
    return emit({{"command", "ears"},
                 {"ears", ears},
                 {"verified", ok},
                 {"summary", std::to_string(dec.circuits.size()) +
                                 " ear(s), verifier " +
                                 (ok ? "passed" : "FAILED")}},
                o, ok ? 0 : 3);
}

int cmd_global(const CommonOpts& o, bool deconstruct) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    EngineOptions opts;
    opts.depth = o.depth;
    opts.trials = o.trials;
    Verdict v = o.dim == 2 ? global_rigidity_2d(g)
                           : global_rigidity_nd(g, o.dim, opts, o.seed);
    v.seed = o.seed;
    json extra = json::object();
    if (deconstruct) {
        if (o.dim != 2)
            throw std::invalid_argument("--deconstruct is a d=2 certificate");
        if (v.status == Status::GloballyRigid && g.vertex_count() >= 4) {
            auto steps = deconstruction_certificate_2d(g);
            if (!verify_deconstruction_2d(g, steps))
                throw InvariantFault(
                    "deconstruction failed independent re-verification");
            json chain = json::array();
            for (const auto& s : steps)
                chain.push_back({{"rule", rule_name(s.rule)},
                                 {"theorem", theorem_name(s.rule)},
                                 {"payload", s.payload}});
            extra["deconstruction"] = chain;
            extra["deconstruction_verified"] = true;
        }
    }
    return emit_verdict(g, v, o, extra);
}

int cmd_hendrickson(const CommonOpts& o) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    auto r = hendrickson_check(g, o.dim, o.seed);
    json report{{"command", "hendrickson"},
                {"dim", o.dim},
                {"pass", r.pass},
                {"connectivity", r.connectivity}};
    if (!r.pass) report["violated"] = r.condition;
    if (r.failing_edge)
        report["failing_edge"] = {r.failing_edge->first, r.failing_edge->second};
    if (!r.separator.empty()) report["separator"] = r.separator;
    report["summary"] = r.pass ? "necessary condition holds"
                               : "fails: " + r.condition;
    return emit(std::move(report), o);
}

int cmd_pack(const CommonOpts& o, int trees) {
    Multigraph h = load_multigraph(o.input);
    auto result = tree_packing(h, trees);
    json report{{"command", "pack"},
                {"k", trees},
                {"result", packing_report(result)}};
    report["summary"] = packing_feasible(result)
                            ? std::to_string(trees) + " edge-disjoint spanning trees"
                            : "infeasible; violating partition attached";
    return emit(std::move(report), o);
}

int cmd_bodybar(const CommonOpts& o, const std::string& mode) {
    Multigraph h = load_multigraph(o.input);
    if (mode == "build") {
        auto layout = body_bar_graph(h, o.dim);
        json bodies = json::array();
        for (const auto& b : layout.body_of) bodies.push_back(b);
        json bars = json::array();
        for (auto [u, v] : layout.bar_of) bars.push_back({u, v});
        return emit({{"command", "bodybar build"},
                     {"dim", o.dim},
                     {"graph", graph_to_json(layout.graph)},
                     {"body_map", bodies},
                     {"bar_map", bars},
                     {"summary", "body-bar graph with " +
                                     std::to_string(layout.graph.vertex_count()) +
                                     " vertices"}},
                    o);
    }
    if (mode == "check") {
        auto check = body_bar_rigid_check(h, o.dim);
        return emit({{"command", "bodybar check"},
                     {"dim", o.dim},
                     {"rigid", check.rigid},
                     {"certificate", packing_report(check.certificate)},
                     {"summary", check.rigid ? "body-bar rigid"
                                             : "not body-bar rigid"}},
                    o);
    }
    // global
    Verdict v = body_bar_verdict(h, o.dim, o.seed);
    auto layout = body_bar_graph(h, o.dim);
    return emit_verdict(layout.graph, v, o, {{"h", multigraph_json(h)}});
}

int cmd_bodyhinge(const CommonOpts& o, const std::string& mode, int edge_copy) {
    Multigraph h = load_multigraph(o.input);
    if (mode == "build") {
        auto layout = body_hinge_graph(h, o.dim);
        json bodies = json::array();
        for (const auto& b : layout.body_of) bodies.push_back(b);
        json hinges = json::array();
        for (const auto& x : layout.hinge_of) hinges.push_back(x);
        return emit({{"command", "bodyhinge build"},
                     {"dim", o.dim},
                     {"graph", graph_to_json(layout.graph)},
                     {"body_map", bodies},
                     {"hinge_map", hinges},
                     {"summary", "body-hinge graph with " +
                                     std::to_string(layout.graph.vertex_count()) +
                                     " vertices"}},
                    o);
    }
    if (mode == "check") {
        auto check = body_hinge_rigid_check(h, o.dim);
        return emit({{"command", "bodyhinge check"},
                     {"dim", o.dim},
                     {"rigid", check.rigid},
                     {"certificate", packing_report(check.certificate)},
                     {"summary", check.rigid ? "body-hinge rigid"
                                             : "not body-hinge rigid"}},
                    o);
    }
    if (mode == "global") {
        EngineOptions opts;
        opts.depth = o.depth;
        opts.trials = o.trials;
        Verdict v = body_hinge_verdict(h, o.dim, opts, o.seed);
        auto layout = body_hinge_graph(h, o.dim);
        return emit_verdict(layout.graph, v, o, {{"h", multigraph_json(h)}});
    }
    // witness: the exact standard-basis configuration for one deleted hinge
    auto check = body_hinge_global_check(h, o.dim);
    if (!check.globally_rigid)
        throw std::invalid_argument(
            "bodyhinge witness: the hinge-count condition fails, no standard "
            "configuration exists");
    const HingeEdgeCertificate* cert = nullptr;
    for (const auto& pe : check.per_edge)
        if (h.edges[pe.copy] == h.edges[edge_copy]) cert = &pe;
    if (!cert) throw std::invalid_argument("bodyhinge witness: bad edge index");
    auto config = standard_body_hinge_config(
        h, o.dim, cert->copy, std::get<TreePacking>(cert->certificate),
        cert->parent_of);
    bool rigid = verify_standard_config_rigid(config);
    json coords = json::array();
    for (const auto& p : config.framework.config) {
        json point = json::array();
        for (const auto& c : p) {
            std::ostringstream os;
            os << c;
            point.push_back(os.str());
        }
        coords.push_back(point);
    }
    return emit({{"command", "bodyhinge witness"},
                 {"dim", o.dim},
                 {"edge", edge_copy},
                 {"removed_vertex", config.removed_vertex},
                 {"graph", graph_to_json(config.framework.graph)},
                 {"config", coords},
                 {"infinitesimally_rigid", rigid},
                 {"summary", rigid ? "standard configuration verified rigid"
                                   : "standard configuration NOT rigid"}},
                o, rigid ? 0 : 3);
}

int cmd_kchain(const CommonOpts& o, const std::string& mode,
               const std::string& sizes_csv) {
    auto sizes = parse_int_list(sizes_csv);
    if (mode == "build") {
        SimpleGraph chain = k_chain(sizes);
        return emit({{"command", "kchain build"},
                     {"sizes", sizes},
                     {"graph", graph_to_json(chain)},
                     {"summary", "k-chain with " +
                                     std::to_string(chain.vertex_count()) +
                                     " vertices, " +
                                     std::to_string(chain.edge_count()) +
                                     " edges"}},
                    o);
    }
    EngineOptions opts;
    opts.depth = o.depth;
    opts.trials = o.trials;
    Verdict v = kchain_global_check(sizes, o.dim, opts, o.seed);
    return emit_verdict(k_chain(sizes), v, o, {{"sizes", sizes}});
}

int cmd_extend(const CommonOpts& o, bool one, const std::string& at,
               const std::string& nbrs_csv) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    auto nbrs = parse_int_list(nbrs_csv);
    SimpleGraph out = [&] {
        if (!one) return zero_extension(g, o.dim, nbrs);
        auto at_pair = parse_int_list(at);
        if (at_pair.size() != 2)
            throw std::invalid_argument("--at expects an edge 'u,v'");
        return one_extension(g, o.dim, {at_pair[0], at_pair[1]}, nbrs);
    }();
    return emit({{"command", one ? "extend --one" : "extend --zero"},
                 {"dim", o.dim},
                 {"graph", graph_to_json(out)},
                 {"summary", "extended graph has " +
                                 std::to_string(out.vertex_count()) +
                                 " vertices, " +
                                 std::to_string(out.edge_count()) + " edges"}},
                o);
}

int cmd_combine(const CommonOpts& o) {
    // Input: one JSON object describing the two pieces and the witness.
    std::string text;
    {
        std::ostringstream buf;
        if (o.input == "-")
            buf << std::cin.rdbuf();
        else {
            std::ifstream file(o.input);
            if (!file) throw ParseError("cannot open input file: " + o.input);
            buf << file.rdbuf();
        }
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    int n = j.at("n").get<int>();
    auto graph_of = [&](const json& part) {
        std::vector<EdgePair> edges;
        for (const auto& e : part.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return SimpleGraph(n, std::move(edges));
    };
    CombineInput input;
    input.g1 = graph_of(j.at("g1"));
    input.g2 = graph_of(j.at("g2"));
    input.v1 = j.at("g1").at("vertices").get<std::vector<int>>();
    input.v2 = j.at("g2").at("vertices").get<std::vector<int>>();
    for (const auto& e : j.at("h_edges"))
        input.h_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    input.witness.root_of = j.at("witness").get<std::vector<int>>();
    EngineOptions opts;
    opts.depth = o.depth;
    opts.trials = o.trials;
    Verdict v = combine_check(input, o.dim, opts, o.seed);
    auto edges = input.g1.edges();
    for (auto e : input.g2.edges()) edges.push_back(e);
    return emit_verdict(SimpleGraph(n, edges), v, o);
}

int cmd_oracle(const CommonOpts& o, const std::string& mode, int restarts,
               double tol_residual, double tol_class) {
    SimpleGraph g = require_simple(load_multigraph(o.input));
    OracleOptions opts;
    opts.restarts = restarts;
    opts.tol_residual = tol_residual;
    opts.tol_class = tol_class;
    if (mode == "probe") {
        auto probe = numeric_globally_rigid_probe(g, o.dim, opts, o.seed);
        json report{{"command", "oracle probe"},
                    {"dim", o.dim},
                    {"consistent_with_global_rigidity", probe.consistent},
                    {"classes", probe.report.classes.size()},
                    {"converged", probe.report.converged},
                    {"restarts", probe.report.restarts}};
        if (probe.witness_pair) {
            report["witness_first"] = config_json(probe.witness_pair->first);
            report["witness_second"] = config_json(probe.witness_pair->second);
        }
        report["summary"] = probe.consistent
                                ? "ConsistentWithGR (single class found)"
                                : "FoundSecondClass";
        return emit(std::move(report), o);
    }
    // enumerate on a seeded random configuration
    SplitMix64 rng(derive_seed(o.seed, 0xEEE));
    FloatConfig config(g.vertex_count(), std::vector<double>(o.dim));
    for (auto& p : config)
        for (auto& c : p)
            c = static_cast<double>(rng.below(2000001)) / 1000000.0 - 1.0;
    auto report = enumerate_equivalent(g, o.dim, config, opts, o.seed);
    json classes = json::array();
    for (const auto& cls : report.classes)
        classes.push_back({{"fingerprint", cls.fingerprint},
                           {"representative", config_json(cls.representative)},
                           {"hits", cls.hits}});
    return emit({{"command", "oracle enumerate"},
                 {"dim", o.dim},
                 {"flexible", report.flexible},
                 {"classes", classes},
                 {"class_count", report.classes.size()},
                 {"converged", report.converged},
                 {"restarts", report.restarts},
                 {"tol_residual", report.tol_residual},
                 {"tol_class", report.tol_class},
                 {"summary",
                  report.flexible
                      ? "flexible (enumeration skipped)"
                      : std::to_string(report.classes.size()) +
                            " congruence class(es) found"}},
                o);
}

int cmd_sweep(const CommonOpts& o, int max_n) {
    // Exhaustive small-n property suite: pebble rank against algebraic rank,
    // and the exact planar verdict against the stress-rank prediction on
    // 3-connected graphs.
    long long graphs = 0, rank_checked = 0, verdicts = 0;
    for (int n = 2; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<EdgePair> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            std::vector<EdgePair> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            SimpleGraph g(n, edges);
            ++graphs;
            int pr = pebble_rank(g).rank;
            int gr = generic_rank(g, 2, derive_seed(o.seed, mask));
            if (pr != gr) {
                std::cerr << "sweep: pebble/algebra mismatch on n=" << n
                          << " mask=" << mask << "\n";
                return 3;
            }
            ++rank_checked;
            if (n >= 4 && g.connected() && vertex_connectivity(g).k >= 3) {
                auto verdict = global_rigidity_2d(g);
                bool predicted =
                    predicts_globally_rigid(g, 2, derive_seed(o.seed, mask ^ 0xAB));
                bool exact = verdict.status == Status::GloballyRigid;
                if (predicted != exact) {
                    std::cerr << "sweep: verdict/prediction mismatch on n=" << n
                              << " mask=" << mask << "\n";
                    return 3;
                }
                ++verdicts;
            }
        }
    }
    return emit({{"command", "sweep"},
                 {"max_n", max_n},
                 {"graphs", graphs},
                 {"rank_agreements", rank_checked},
                 {"verdict_agreements", verdicts},
                 {"summary", "sweep clean: " + std::to_string(graphs) +
                                 " graphs, no disagreements"}},
                o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigikit: graph rigidity and global rigidity toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string mode, at, nbrs, sizes;
    int trees = 2, edge_copy = 0, max_n = 5, restarts = 200;
    double tol_residual = 1e-10, tol_class = 1e-6;
    bool deconstruct = false, extend_one = false, extend_zero = false;

    auto* rank = app.add_subcommand("rank", "generic rigidity-matrix rank");
    auto* rigid = app.add_subcommand("rigid", "generic rigidity");
    auto* redundant = app.add_subcommand("redundant", "redundant rigidity");
    auto* vredundant =
        app.add_subcommand("vredundant", "vertex-redundant rigidity");
    auto* laman = app.add_subcommand("laman", "planar rigidity (pebble game)");
    auto* circuit = app.add_subcommand("circuit", "planar rigidity circuit test");
    auto* mcomp = app.add_subcommand("mcomp", "rigidity-matroid components");
    auto* ears = app.add_subcommand("ears", "ear decomposition (verified)");
    auto* global = app.add_subcommand("global", "global rigidity verdict");
    auto* certify = app.add_subcommand(
        "certify", "global rigidity with deconstruction certificate");
    auto* hendrickson =
        app.add_subcommand("hendrickson", "necessary-condition check");
    auto* pack = app.add_subcommand("pack", "spanning-tree packing");
    auto* bodybar = app.add_subcommand("bodybar", "body-bar graphs");
    auto* bodyhinge = app.add_subcommand("bodyhinge", "body-hinge graphs");
    auto* kchain = app.add_subcommand("kchain", "layered complete bipartite");
    auto* extend = app.add_subcommand("extend", "Henneberg extensions");
    auto* combine = app.add_subcommand("combine", "combination theorem");
    auto* oracle = app.add_subcommand("oracle", "numeric realization oracle");
    auto* sweep = app.add_subcommand("sweep", "exhaustive small-n suite");

    for (auto* cmd : {rank, rigid, redundant, vredundant, laman, circuit, mcomp,
                      ears, global, certify, hendrickson, pack, extend})
        add_common(cmd, o);
    for (auto* cmd : {bodybar, bodyhinge, kchain, combine, oracle})
        add_common(cmd, o, cmd != kchain);
    add_common(sweep, o, false);

    certify->add_flag("--deconstruct", deconstruct,
                      "emit the reduction chain to K4");
    pack->add_option("--trees", trees, "number of trees")->required();
    bodybar->add_option("mode", mode, "build|check|global")->required();
    bodyhinge->add_option("mode", mode, "build|check|global|witness")
        ->required();
    bodyhinge->add_option("--edge", edge_copy, "edge copy for the witness");
    kchain->add_option("mode", mode, "build|check")->required();
    kchain->add_option("--sizes", sizes, "part sizes, e.g. 3,3")->required();
    extend->add_flag("--one", extend_one, "1-extension");
    extend->add_flag("--zero", extend_zero, "0-extension");
    extend->add_option("--at", at, "edge 'u,v' replaced by a 1-extension");
    extend->add_option("--nbrs", nbrs, "attachment vertices, comma-separated");
    oracle->add_option("mode", mode, "enumerate|probe")->required();
    oracle->add_option("--restarts", restarts, "solver restarts");
    oracle->add_option("--tol-residual", tol_residual, "solver residual");
    oracle->add_option("--tol-class", tol_class, "class-merge distance");
    sweep->add_option("--max-n", max_n, "largest vertex count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!o.seed_given) o.seed = default_seed();
        if (rank->parsed()) return cmd_rank(o);
        if (rigid->parsed()) return cmd_rigid(o);
        if (redundant->parsed()) return cmd_redundant(o, false);
        if (vredundant->parsed()) return cmd_redundant(o, true);
        if (laman->parsed()) return cmd_laman(o);
        if (circuit->parsed()) return cmd_circuit(o);
        if (mcomp->parsed()) return cmd_mcomp(o);
        if (ears->parsed()) return cmd_ears(o);
        if (global->parsed()) return cmd_global(o, false);
        if (certify->parsed()) return cmd_global(o, deconstruct);
        if (hendrickson->parsed()) return cmd_hendrickson(o);
        if (pack->parsed()) return cmd_pack(o, trees);
        if (bodybar->parsed()) return cmd_bodybar(o, mode);
        if (bodyhinge->parsed()) return cmd_bodyhinge(o, mode, edge_copy);
        if (kchain->parsed()) return cmd_kchain(o, mode, sizes);
        if (extend->parsed()) {
            if (extend_one == extend_zero)
                throw std::invalid_argument(
                    "extend: choose exactly one of --zero / --one");
            return cmd_extend(o, extend_one, at, nbrs);
        }
        if (combine->parsed()) return cmd_combine(o);
        if (oracle->parsed())
            return cmd_oracle(o, mode, restarts, tol_residual, tol_class);
        if (sweep->parsed()) return cmd_sweep(o, max_n);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantFault& e) {
        std::cerr << "internal invariant fault: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant fault: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
