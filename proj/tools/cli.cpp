#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgebetti/betti.hpp"
#include "edgebetti/census.hpp"
#include "edgebetti/error.hpp"
#include "edgebetti/io.hpp"
#include "edgebetti/verify.hpp"

namespace edgebetti::cli {
namespace {

struct InputFlags {
    std::string edges_path;
    std::string json_path;
    std::optional<std::size_t> complete;
    std::vector<std::size_t> complete_bipartite;
    std::optional<std::size_t> cycle;
    std::optional<std::size_t> path;
    std::optional<std::size_t> wheel;
    std::vector<std::string> random;
    std::vector<std::string> random_tree;
};

struct CommonFlags {
    InputFlags input;
    std::uint32_t field = 0;
    std::string format = "table";
    std::optional<std::size_t> max_i;
    std::size_t cap = kDefaultOracleCap;
    std::size_t vertex_cap = kDefaultVertexCap;
    std::size_t threads = 0;
};

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size() || s.starts_with('-')) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(what + " must be a non-negative integer, got '" + s + "'");
    }
}

double parse_probability(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("edge probability must be a number, got '" + s + "'");
    }
}

void add_input_options(CLI::App& cmd, CommonFlags& f) {
    cmd.add_option("--edges", f.input.edges_path, "Edge-list text file");
    cmd.add_option("--json", f.input.json_path, "JSON graph file");
    cmd.add_option("--complete", f.input.complete, "Complete graph K_n");
    cmd.add_option("--complete-bipartite", f.input.complete_bipartite, "Complete bipartite graph K_{a,b}")
        ->expected(2);
    cmd.add_option("--cycle", f.input.cycle, "Cycle C_n");
    cmd.add_option("--path", f.input.path, "Path on n vertices");
    cmd.add_option("--wheel", f.input.wheel, "Wheel W_n (n + 1 vertices)");
    cmd.add_option("--random", f.input.random, "Erdos-Renyi G(n, p) with 64-bit seed: n p seed")->expected(3);
    cmd.add_option("--random-tree", f.input.random_tree, "Uniform random labeled tree: n seed")->expected(2);
    cmd.add_option("--vertex-cap", f.vertex_cap, "Reject graphs with more vertices than this")
        ->capture_default_str();
}

void add_engine_options(CLI::App& cmd, CommonFlags& f) {
    cmd.add_option("--field", f.field, "Coefficient field: 0 for the rationals or a prime p")->capture_default_str();
    cmd.add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd.add_option("--max-i", f.max_i, "Largest homological index to report");
    cmd.add_option("--cap", f.cap, "Largest vertex count for the Hochster oracle")->capture_default_str();
    cmd.add_option("--threads", f.threads, "Engine threads (0 = all cores)")->capture_default_str();
}

Graph load_graph(const CommonFlags& f) {
    const InputFlags& in = f.input;
    const int sources = !in.edges_path.empty() + !in.json_path.empty() + in.complete.has_value() +
                        !in.complete_bipartite.empty() + in.cycle.has_value() + in.path.has_value() +
                        in.wheel.has_value() + !in.random.empty() + !in.random_tree.empty();
    if (sources != 1) throw InputError("exactly one graph source is required, got " + std::to_string(sources));

    if (!in.edges_path.empty()) return read_edge_list(in.edges_path, f.vertex_cap);
    if (!in.json_path.empty()) return read_json_graph(in.json_path, f.vertex_cap);

    using Family = GeneratorSpec::Family;
    GeneratorSpec spec;
    if (in.complete) {
        spec.family = Family::complete;
        spec.sizes = {*in.complete};
    } else if (!in.complete_bipartite.empty()) {
        spec.family = Family::complete_bipartite;
        spec.sizes = in.complete_bipartite;
    } else if (in.cycle) {
        spec.family = Family::cycle;
        spec.sizes = {*in.cycle};
    } else if (in.path) {
        spec.family = Family::path;
        spec.sizes = {*in.path};
    } else if (in.wheel) {
        spec.family = Family::wheel;
        spec.sizes = {*in.wheel};
    } else if (!in.random.empty()) {
        spec.family = Family::random;
        spec.sizes = {static_cast<std::size_t>(parse_u64(in.random[0], "random n"))};
        spec.p = parse_probability(in.random[1]);
        spec.seed = parse_u64(in.random[2], "random seed");
    } else {
        spec.family = Family::random_tree;
        spec.sizes = {static_cast<std::size_t>(parse_u64(in.random_tree[0], "random-tree n"))};
        spec.seed = parse_u64(in.random_tree[1], "random-tree seed");
    }
    return generate(spec, f.vertex_cap);
}

OracleOptions oracle_options(const CommonFlags& f) {
    OracleOptions o;
    o.cap = f.cap;
    o.threads = f.threads;
    return o;
}

int run_betti(const CommonFlags& f, std::ostream& out) {
    const Graph g = load_graph(f);
    const BettiTable table = betti_table_hochster(g, Field(f.field), oracle_options(f));
    if (f.format == "json") {
        out << to_json(table).dump() << "\n";
    } else if (f.format == "csv") {
        out << render_betti_csv(table);
    } else {
        out << render_betti_table(table);
    }
    return kOk;
}

int run_strand(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(f);
    StrandOptions options;
    options.max_i = f.max_i;
    options.oracle = oracle_options(f);
    const StrandReport report = strand_report(g, Field(f.field), options);
    if (f.format == "json") {
        out << to_json(report).dump() << "\n";
    } else if (f.format == "csv") {
        out << render_strand_csv(report);
    } else {
        out << render_strand_table(report);
    }
    const auto problems = strand_inconsistencies(report);
    for (const auto& p : problems) err << "inconsistency: " << p << "\n";
    return problems.empty() ? kOk : kInvariantViolation;
}

int run_census(const CommonFlags& f, std::ostream& out) {
    const Graph g = load_graph(f);
    const CensusReport census = take_census(g);
    if (f.format == "table") {
        for (const auto& [r, count] : census.cliques) out << "k" << r << " " << count << "\n";
        for (const auto& [ab, count] : census.bipartite) out << "k" << ab.first << "," << ab.second << " " << count << "\n";
        out << "c4 " << census.c4 << "\nw4 " << census.w4 << "\nd " << census.d << "\n";
    } else {
        out << to_json(census).dump() << "\n";
    }
    return kOk;
}

int run_check(const CommonFlags& f, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(f);
    if (g.vertex_count() > f.cap) {
        throw ResourceError("check runs the Hochster oracle; " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the oracle cap of " + std::to_string(f.cap) + " (raise it with --cap)");
    }
    VerifyOptions options;
    options.field = Field(f.field);
    const auto failures = check_graph(g, options);
    for (const auto& fail : failures) err << "FAIL " << fail.check << ": " << fail.detail << "\n";
    out << (failures.empty() ? "all checks passed" : "checks failed") << " (n=" << g.vertex_count()
        << ", edges=" << g.edge_count() << ")\n";
    return failures.empty() ? kOk : kInvariantViolation;
}

int run_bounds(const CommonFlags& f, std::ostream& out) {
    const Graph g = load_graph(f);
    const LexSegment seg = lex_segment(g.edge_count(), g.vertex_count());
    const std::size_t n = g.vertex_count();
    std::size_t top = n >= 2 ? n - 2 : 0;
    if (f.max_i) top = std::min(top, *f.max_i);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream text;
    text << "lex segment: j=" << seg.rows_full << " l=" << seg.tail << "\n";
    text << "i,lower,upper\n";
    if (n >= 2) {
        for (std::size_t i = 0; i <= top; ++i) {
            const Count lo = lower_bound(g, i);
            const Count hi = upper_bound(g, i);
            rows.push_back({{"i", i}, {"lower", lo}, {"upper", hi}});
            text << i << "," << lo << "," << hi << "\n";
        }
    }
    if (f.format == "json") {
        out << nlohmann::ordered_json{{"j", seg.rows_full}, {"l", seg.tail}, {"rows", rows}}.dump() << "\n";
    } else {
        out << text.str();
    }
    return kOk;
}

int run_triangles(const CommonFlags& f, std::ostream& out) {
    const Graph g = load_graph(f);
    const Count bound = triangle_lower_bound(g);
    const Count k3 = count_cliques(g, 3);
    if (f.format == "json") {
        out << nlohmann::ordered_json{{"lower_bound", bound}, {"k3", k3}}.dump() << "\n";
    } else {
        out << "triangle lower bound " << bound << " <= k3 = " << k3 << "\n";
    }
    if (bound > k3) throw InvariantViolation("triangle bound exceeds the triangle count");
    return kOk;
}

int run_resolution(const CommonFlags& f, bool certify, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(f);
    // no certificate above the cap
    const bool within_cap = g.vertex_count() <= f.cap;
    const auto report = has_linear_resolution(g, Field(f.field), certify && within_cap, oracle_options(f));
    if (f.format == "json") {
        nlohmann::ordered_json j{{"linear", report.complement_chordal}, {"complement_chordal", report.complement_chordal}};
        j["oracle_linear"] = report.oracle_linear ? nlohmann::ordered_json(*report.oracle_linear) : nlohmann::ordered_json(nullptr);
        out << j.dump() << "\n";
    } else {
        out << "linear resolution: " << (report.complement_chordal ? "yes" : "no") << " (complement "
            << (report.complement_chordal ? "is" : "is not") << " chordal)\n";
        if (report.oracle_linear) {
            out << "certificate: oracle table " << (*report.oracle_linear ? "is" : "is not") << " linear\n";
        } else if (certify) {
            out << "certificate: skipped, " << g.vertex_count() << " vertices exceeds the oracle cap\n";
        }
    }
    if (!report.agrees()) {
        err << "inconsistency: chordality and the oracle certificate disagree\n";
        return kInvariantViolation;
    }
    return kOk;
}

struct VerifyFlags {
    std::size_t max_n = 5;
    std::uint32_t field = 0;
    std::size_t threads = 0;
    std::size_t sample_n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

int run_verify(const VerifyFlags& v, std::ostream& out, std::ostream& err) {
    if (v.max_n > 7) throw InputError("--max-n must be at most 7");
    VerifyOptions options;
    options.field = Field(v.field);
    options.threads = v.threads;
    const auto start = std::chrono::steady_clock::now();
    VerifySummary summary = verify_exhaustive(v.max_n, options);
    if (summary.ok() && v.samples > 0) {
        VerifySummary sampled = verify_sample(v.sample_n, v.samples, v.seed, options);
        for (const auto& [n, c] : sampled.graphs_checked) summary.graphs_checked[n] += c;
        summary.failures = std::move(sampled.failures);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& [n, count] : summary.graphs_checked) out << "n=" << n << ": " << count << " graphs checked\n";
    out << "total " << summary.total() << " graphs, " << summary.failures.size() << " failures, field "
        << options.field.characteristic() << ", " << secs << " s\n";
    for (const auto& fail : summary.failures) {
        err << "FAIL n=" << fail.n << " edge_mask=" << fail.edge_mask << " " << fail.check << ": " << fail.detail
            << "\n";
    }
    return summary.ok() ? kOk : kInvariantViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graded Betti numbers of edge ideals: Hochster oracle, linear-strand formulas and bounds"};
    app.require_subcommand(1);

    CommonFlags flags;
    VerifyFlags vflags;
    bool no_certify = false;

    struct Verb {
        const char* name;
        const char* help;
    };
    const std::vector<Verb> verbs{
        {"betti", "Full Betti table via Hochster's formula"},
        {"strand", "Linear strand: oracle, every formula, both bounds"},
        {"census", "Induced-subgraph counts used by the formulas"},
        {"check", "Run every cross-check on one graph"},
        {"bounds", "Lower and lex upper bounds on the linear strand"},
        {"triangles", "Triangle lower bound against the triangle count"},
        {"resolution", "Linear-resolution test (chordal complement) with oracle certificate"},
    };
    std::vector<CLI::App*> commands;
    for (const Verb& verb : verbs) {
        CLI::App* cmd = app.add_subcommand(verb.name, verb.help);
        add_input_options(*cmd, flags);
        add_engine_options(*cmd, flags);
        commands.push_back(cmd);
    }
    commands.back()->add_flag("--no-certify", no_certify, "Skip the oracle certificate");

    CLI::App* verify = app.add_subcommand("verify", "Exhaustive small-graph verification of every identity");
    verify->add_option("--max-n", vflags.max_n, "Enumerate all labeled graphs on 1..max-n vertices (<= 7)")
        ->capture_default_str();
    verify->add_option("--field", vflags.field, "Primary field; strands are also compared against a second field")
        ->capture_default_str();
    verify->add_option("--threads", vflags.threads, "Worker threads (0 = all cores)")->capture_default_str();
    verify->add_option("--sample-n", vflags.sample_n, "Vertex count for an additional random sample");
    verify->add_option("--samples", vflags.samples, "Number of sampled graphs");
    verify->add_option("--seed", vflags.seed, "Sample seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        if (verb == "betti") return run_betti(flags, out);
        if (verb == "strand") return run_strand(flags, out, err);
        if (verb == "census") return run_census(flags, out);
        if (verb == "check") return run_check(flags, out, err);
        if (verb == "bounds") return run_bounds(flags, out);
        if (verb == "triangles") return run_triangles(flags, out);
        if (verb == "resolution") return run_resolution(flags, !no_certify, out, err);
        if (verb == "verify") return run_verify(vflags, out, err);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedPattern& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceError;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariantViolation;
    }
    return kInputError;
}

}  // namespace edgebetti::cli
