// loosesat: command-line front end.
//
// Exit codes: 0 property holds / success, 1 property refuted, 2 usage or I/O error,
// 3 search budget exhausted.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "loosesat/canonical.hpp"
#include "loosesat/construction.hpp"
#include "loosesat/discharge.hpp"
#include "loosesat/errors.hpp"
#include "loosesat/io.hpp"
#include "loosesat/lemmas.hpp"
#include "loosesat/saturation.hpp"
#include "loosesat/search.hpp"
#include "loosesat/triangle.hpp"

using namespace loosesat;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kTimeout = 3;

struct Timer {
    bool enabled = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void report(const std::string& what) const {
        if (!enabled) return;
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << what << ": " << s << " s\n";
    }
};

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

int cmd_construct(std::size_t n, const std::string& out) {
    const auto g = construct_gn(n).graph;
    if (out.empty() || out == "-") {
        std::cout << write_h3(g);
    } else {
        write_h3_file(out, g);
    }
    return kOk;
}

int cmd_greedy(std::size_t n, std::uint64_t seed, const std::string& start, const std::string& out) {
    const auto base = start.empty() ? Hypergraph3::build(n, std::span<const Triple>{}) : read_h3_file(start);
    const auto g = saturate_greedy(base, corpus_seed(seed));
    if (out.empty() || out == "-") {
        std::cout << write_h3(g);
    } else {
        write_h3_file(out, g);
    }
    return kOk;
}

int cmd_check(const std::string& file, bool want_free, unsigned jobs, bool json) {
    const auto g = read_h3_file(file);
    SaturationCertificate cert;
    if (want_free) {
        if (auto w = find_triangle(g)) {
            cert.verdict = Verdict::NotFree;
            cert.witness = *w;
        }
    } else {
        cert = verify_saturated(g, jobs);
    }
    if (!want_free || cert.verdict == Verdict::NotFree) {
        if (!certificate_holds(g, cert)) throw std::logic_error("certificate failed independent re-validation");
    }
    const bool holds = want_free ? cert.verdict != Verdict::NotFree : cert.verdict == Verdict::Saturated;

    if (json) {
        Json j = to_json(cert);
        if (want_free) {
            j["verdict"] = holds ? "free" : "not-free";
            j.erase("checked_nonedges");
        }
        std::cout << j.dump(2) << "\n";
        return holds ? kOk : kRefuted;
    }
    if (want_free) {
        std::cout << (holds ? "free" : "not-free") << "\n";
    } else {
        std::cout << to_string(cert.verdict) << "\n";
    }
    if (const auto* w = std::get_if<TriangleWitness>(&cert.witness)) {
        std::cout << "triangle " << to_string(*w) << "\n";
    } else if (const auto* t = std::get_if<Triple>(&cert.witness)) {
        std::cout << "uncovered e " << (*t)[0] << " " << (*t)[1] << " " << (*t)[2] << "\n";
    } else if (!want_free) {
        std::cout << "checked_nonedges " << cert.checked_nonedges << "\n";
    }
    return holds ? kOk : kRefuted;
}

struct SatnumArgs {
    std::size_t n = 0;
    std::optional<std::size_t> max_edges;
    unsigned jobs = 1;
    std::optional<double> budget_secs;
    std::optional<std::uint64_t> budget_nodes;
    bool enumerate = false;
    std::string strategy = "coverage";
    bool no_symmetry = false;
    std::string witness_out;
    std::string json_out;
};

int cmd_satnum(const SatnumArgs& a, const Timer& timer) {
    SearchOptions opt;
    opt.jobs = a.jobs;
    opt.strategy = a.strategy == "lexicographic" ? SearchStrategy::Lexicographic : SearchStrategy::Coverage;
    opt.symmetry_pruning = !a.no_symmetry;
    if (a.budget_secs) opt.budget.wall_clock = std::chrono::milliseconds(std::llround(*a.budget_secs * 1000.0));
    opt.budget.max_nodes = a.budget_nodes;

    SearchOutcome outcome;
    try {
        outcome = min_saturation(a.n, opt, a.max_edges);
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: proven infeasible up to m = " << e.exhausted_upto() << "\n";
        return kTimeout;
    }
    timer.report("search");
    if (!outcome.min_edges) {
        std::cout << "none\n";
        std::cout << "exhausted_upto " << outcome.exhausted_upto << "\n";
        if (!a.json_out.empty()) write_json_file(a.json_out, to_json(outcome));
        return kRefuted;
    }
    if (verify_saturated(*outcome.witness).verdict != Verdict::Saturated)
        throw std::logic_error("witness failed independent re-validation");

    const std::string path = a.witness_out.empty() ? "sat" + std::to_string(a.n) + "_witness.h3" : a.witness_out;
    write_h3_file(path, *outcome.witness);
    std::cout << *outcome.min_edges << "\n" << path << "\n";

    Json j = to_json(outcome);
    if (a.enumerate) {
        std::vector<std::string> forms;
        try {
            forms = enumerate_extremal(a.n, *outcome.min_edges, opt);
        } catch (const TimeoutError&) {
            std::cerr << "timeout during enumeration\n";
            return kTimeout;
        }
        timer.report("enumerate");
        std::cout << "extremal " << forms.size() << "\n";
        Json jf = Json::array();
        for (const auto& f : forms) {
            std::cout << to_hex(f) << "\n";
            jf.push_back(to_hex(f));
        }
        j["extremal"] = jf;
    }
    if (!a.json_out.empty()) write_json_file(a.json_out, j);
    return kOk;
}

int cmd_discharge(const std::string& file, std::optional<std::size_t> ell_opt, const std::string& d5,
                  const std::string& json_out) {
    const auto g = read_h3_file(file);
    const std::size_t ell = ell_opt.value_or(default_ell(g.vertex_count()));
    DischargeOptions opt;
    opt.d5 = d5 == "per-neighbor" ? D5Multiplicity::PerNeighbor : D5Multiplicity::PerIncidence;
    const auto report = run_discharge(g, ell, opt);
    const auto s = audit_summary(report);

    std::cout << "n " << s.vertex_count << "\n";
    std::cout << "edges " << s.edge_count << "\n";
    std::cout << "ell " << s.ell << "\n";
    std::cout << "low " << s.low << " nonlow " << s.nonlow << " high " << s.high << "\n";
    std::cout << "total_charge " << render_half_units(s.total_charge) << "\n";
    for (std::size_t i = 0; i < s.rule_totals.size(); ++i)
        std::cout << "D" << i + 1 << " moved " << render_half_units(s.rule_totals[i]) << "\n";
    std::cout << "helpful " << s.helpful << " half_helpful " << s.half_helpful << "\n";
    std::cout << "deficient " << s.deficient << "/" << s.low << "\n";

    // Floors every report must satisfy.
    bool ok = s.total_charge == HalfUnits(6 * g.edge_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!report.partition.low_vertex(v) && report.charge[v] < 0) ok = false;
        const auto& p = report.profiles[v];
        if ((p.is_helpful || p.is_half_helpful) && report.charge[v] < kTargetCharge) {
            std::cout << "floor-violation " << v << " " << render_half_units(report.charge[v]) << "\n";
            ok = false;
        }
    }
    std::cout << (ok ? "floors hold" : "floors violated") << "\n";
    if (!json_out.empty()) write_json_file(json_out, to_json(report));
    return ok ? kOk : kRefuted;
}

int cmd_lemmas(const std::string& file, std::vector<std::size_t> js, unsigned jobs, const std::string& json_out) {
    const auto g = read_h3_file(file);
    if (js.empty()) js = {2, 3, 4};
    const auto report = run_all(g, js, jobs);
    std::cout << "free " << (report.free ? "yes" : "no") << "\n";
    std::cout << "saturated " << (report.saturated ? "yes" : "no") << "\n";
    for (const auto& c : report.checks) {
        if (c.ran) {
            std::cout << c.name << " " << (c.violations ? "violations " + std::to_string(c.violations) : "clean")
                      << "\n";
        } else {
            std::cout << c.name << " skipped (" << c.skipped_reason << ")\n";
        }
    }
    for (const auto& v : report.violations) {
        std::cout << "violation " << to_string(v.lemma);
        for (Vertex x : v.vertices) std::cout << " " << x;
        std::cout << ": " << v.detail << "\n";
    }
    if (!json_out.empty()) write_json_file(json_out, to_json(report));
    return report.violations.empty() ? kOk : kRefuted;
}

int cmd_stats(const std::string& file) {
    std::cout << stats_json(read_h3_file(file)).dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loose-triangle saturation toolkit for 3-uniform hypergraphs"};
    app.require_subcommand(1);
    Timer timer;
    app.add_flag("--timing", timer.enabled, "Report elapsed time on stderr");

    std::size_t n = 0;
    std::string out, file, start, json_out;
    unsigned jobs = 1;
    std::uint64_t seed = 1;

    auto* construct = app.add_subcommand("construct", "Write the brick construction G_n");
    construct->add_option("-n", n, "Vertex count (>= 14)")->required();
    construct->add_option("-o,--output", out, "Output file (default stdout)");

    auto* greedy = app.add_subcommand("greedy", "Greedily saturate a graph (empty by default)");
    greedy->add_option("-n", n, "Vertex count when starting from the empty graph");
    greedy->add_option("--seed", seed, "Insertion-order seed; LOOSESAT_SEED overrides");
    greedy->add_option("--from", start, "Start from this .h3 file")->check(CLI::ExistingFile);
    greedy->add_option("-o,--output", out, "Output file (default stdout)");

    bool want_free = false, want_saturated = false, as_json = false;
    auto* check = app.add_subcommand("check", "Certify triangle-freeness or saturation");
    check->add_option("file", file, ".h3 file")->required();
    auto* free_flag = check->add_flag("--free", want_free, "Check triangle-freeness");
    auto* sat_flag = check->add_flag("--saturated", want_saturated, "Check saturation");
    free_flag->excludes(sat_flag);
    check->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    check->add_flag("--json", as_json, "Print the certificate as JSON");

    SatnumArgs sa;
    auto* satnum = app.add_subcommand("satnum", "Exact saturation number by exhaustive search");
    satnum->add_option("-n", sa.n, "Vertex count")->required()->check(CLI::Range(1, 16));
    satnum->add_option("--max-edges", sa.max_edges, "Give up after this edge count");
    satnum->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
    satnum->add_option("--budget-secs", sa.budget_secs, "Wall-clock budget")->check(CLI::PositiveNumber);
    satnum->add_option("--budget-nodes", sa.budget_nodes, "Search-node budget");
    satnum->add_flag("--enumerate", sa.enumerate, "List all extremal graphs up to isomorphism");
    satnum->add_option("--strategy", sa.strategy, "Search strategy")
        ->check(CLI::IsMember({"coverage", "lexicographic"}));
    satnum->add_flag("--no-symmetry", sa.no_symmetry, "Disable first-edges symmetry pruning");
    satnum->add_option("-o,--witness", sa.witness_out, "Witness file (default satN_witness.h3)");
    satnum->add_option("--json", sa.json_out, "Write the outcome as JSON");

    std::optional<std::size_t> ell;
    std::string d5 = "per-incidence";
    auto* discharge = app.add_subcommand("discharge", "Run the discharging audit");
    discharge->add_option("file", file, ".h3 file")->required();
    discharge->add_option("--ell", ell, "Low-degree threshold (default max(3, floor(log2 n)))")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    discharge->add_option("--d5", d5, "D5 multiplicity")->check(CLI::IsMember({"per-incidence", "per-neighbor"}));
    discharge->add_option("--json", json_out, "Write the full report as JSON");

    std::vector<std::size_t> js;
    auto* lemmas = app.add_subcommand("lemmas", "Check the structural lemmas");
    lemmas->add_option("file", file, ".h3 file")->required();
    lemmas->add_option("--jfar", js, "j values for the j-far bound (default 2 3 4)")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    lemmas->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    lemmas->add_option("--json", json_out, "Write the report as JSON");

    auto* stats = app.add_subcommand("stats", "Degree statistics and canonical form");
    stats->add_option("file", file, ".h3 file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        int code = kOk;
        if (*construct) {
            code = cmd_construct(n, out);
        } else if (*greedy) {
            if (start.empty() && !greedy->count("-n")) throw CLI::RequiredError("-n or --from");
            code = cmd_greedy(n, seed, start, out);
        } else if (*check) {
            if (!want_free && !want_saturated) throw CLI::RequiredError("--free or --saturated");
            code = cmd_check(file, want_free, jobs, as_json);
        } else if (*satnum) {
            code = cmd_satnum(sa, timer);
        } else if (*discharge) {
            code = cmd_discharge(file, ell, d5, json_out);
        } else if (*lemmas) {
            code = cmd_lemmas(file, js, jobs, json_out);
        } else if (*stats) {
            code = cmd_stats(file);
        }
        timer.report("total");
        return code;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
