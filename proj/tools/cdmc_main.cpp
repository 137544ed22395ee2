// cdmc — max-cut solver and benchmark driver.
//
// Subcommands:
//   solve  run one or more algorithms on TSPLIB instances, emit reports
//   bench  compare runs against a reference table of expected cut values
//
// Exit codes: 0 success, 2 usage, 3 parse, 4 numeric/size, 5 benchmark gate.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cdmc/drivers.hpp"
#include "cdmc/report_io.hpp"
#include "cdmc/tsplib.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitGate = 5;

struct CommonOptions {
    std::vector<std::string> instances;
    std::vector<std::string> algorithms{"CDA1"};
    std::string alpha_mode = "GERSHGORIN";
    double delta = 1.0;
    std::string beta_mode = "CONSTANT";
    double beta_scale = 500.0;
    double linear_s = 0.9;
    double tau = 0.05;
    double eps = 1e-8;
    int max_iters = 5000;
    std::uint64_t seed = 20139;
    int oracle_limit = 26;
    std::string coord_dist = "file";
    std::string format = "table";
    std::string out_path;
    int jobs = 0;
    bool no_timing = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("instances", opt.instances, "TSPLIB instance files")
        ->required()
        ->expected(-1);
    cmd->add_option("--alg", opt.algorithms,
                    "algorithms to run: CDA1, CDA2, CDA3, ORACLE")
        ->delimiter(',');
    cmd->add_option("--alpha-mode", opt.alpha_mode,
                    "alpha choice: GERSHGORIN, SPECTRAL")
        ->check(CLI::IsMember({"GERSHGORIN", "SPECTRAL"}));
    cmd->add_option("--delta", opt.delta, "alpha slack (default 1.0)");
    cmd->add_option("--beta-mode", opt.beta_mode, "beta choice: CONSTANT, PROPORTIONAL")
        ->check(CLI::IsMember({"CONSTANT", "PROPORTIONAL"}));
    cmd->add_option("--beta-scale", opt.beta_scale, "beta scale (default 500)");
    cmd->add_option("--linear-s", opt.linear_s,
                    "target sum of |delta_c| for CDA2/CDA3 (default 0.9)");
    cmd->add_option("--tau", opt.tau, "feasibility rounding tolerance (default 0.05)");
    cmd->add_option("--eps", opt.eps, "convergence precision (default 1e-8)");
    cmd->add_option("--max-iters", opt.max_iters, "dual ascent iteration cap");
    cmd->add_option("--seed", opt.seed, "rng seed for the linear perturbation");
    cmd->add_option("--oracle-limit", opt.oracle_limit,
                    "vertex cap for the brute-force oracle (default 26)");
    cmd->add_option("--coord-dist", opt.coord_dist,
                    "coordinate instances: 'file' distance semantics or 'euc2d' override")
        ->check(CLI::IsMember({"file", "euc2d"}));
    cmd->add_option("--format", opt.format, "output format: json, csv, table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--out", opt.out_path, "write the report to this path (default stdout)");
    cmd->add_option("--jobs", opt.jobs, "worker threads (default: logical cores)");
    cmd->add_flag("--no-timing", opt.no_timing,
                  "zero the wall-time column for byte-reproducible output");
}

cdmc::PerturbationPolicy make_policy(const CommonOptions& opt) {
    cdmc::PerturbationPolicy policy;
    policy.alpha_mode = cdmc::alpha_mode_from_string(opt.alpha_mode);
    policy.alpha_slack = opt.delta;
    policy.beta_mode = cdmc::beta_mode_from_string(opt.beta_mode);
    policy.beta_scale = opt.beta_scale;
    policy.linear_magnitude = opt.linear_s;
    policy.rng_seed = opt.seed;
    policy.epsilon = opt.eps;
    policy.tau = opt.tau;
    policy.max_iters = opt.max_iters;
    policy.oracle_limit = opt.oracle_limit;
    policy.validate();
    return policy;
}

std::string instance_label(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

/// Runs every (instance, algorithm) pair on a bounded pool; records land in
/// a pre-sized vector so the output order never depends on scheduling.
std::vector<cdmc::RunRecord> run_batch(const CommonOptions& opt) {
    const cdmc::PerturbationPolicy policy = make_policy(opt);
    const auto coord_mode = opt.coord_dist == "euc2d"
                                ? cdmc::tsplib::CoordDistance::ForceEuc2d
                                : cdmc::tsplib::CoordDistance::FromFile;

    struct Job {
        std::string path;
        std::string alg;
    };
    std::vector<Job> jobs;
    for (const auto& path : opt.instances) {
        for (const auto& alg : opt.algorithms) {
            jobs.push_back({path, alg});
        }
    }

    std::vector<cdmc::RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::max(1, opt.jobs > 0
                                        ? opt.jobs
                                        : static_cast<int>(std::thread::hardware_concurrency()));

    auto worker = [&]() {
        for (std::size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1)) {
            cdmc::RunRecord& rec = records[k];
            rec.instance = instance_label(jobs[k].path);
            rec.algorithm = jobs[k].alg;
            try {
                const cdmc::WeightedGraph graph =
                    cdmc::tsplib::parse_file(jobs[k].path, coord_mode);
                const cdmc::Algorithm alg = cdmc::algorithm_from_string(jobs[k].alg);
                rec.report = cdmc::solve_graph(graph, alg, policy);
                rec.ok = true;
            } catch (const cdmc::ParseError& e) {
                rec.ok = false;
                rec.error = std::string("parse: ") + e.what();
            } catch (const cdmc::SizeError& e) {
                rec.ok = false;
                rec.error = std::string("size: ") + e.what();
            } catch (const cdmc::NumericError& e) {
                rec.ok = false;
                rec.error = std::string("numeric: ") + e.what();
            } catch (const cdmc::Error& e) {
                rec.ok = false;
                rec.error = std::string("input: ") + e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < std::min<std::size_t>(workers, jobs.size()); ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) t.join();
    return records;
}

int error_exit_code(const std::vector<cdmc::RunRecord>& records) {
    bool any_parse = false;
    bool any_other = false;
    for (const auto& rec : records) {
        if (rec.ok) continue;
        if (rec.error.rfind("parse:", 0) == 0) any_parse = true;
        else any_other = true;
    }
    if (any_other) return kExitNumeric;
    if (any_parse) return kExitParse;
    return kExitOk;
}

int emit(const CommonOptions& opt, const std::vector<cdmc::RunRecord>& records,
         const std::string& extra = "") {
    std::string text;
    if (opt.format == "json") {
        text = cdmc::reports_to_json(records);
    } else if (opt.format == "csv") {
        text = cdmc::reports_to_csv(records, !opt.no_timing);
    } else {
        text = cdmc::reports_to_table(records);
    }
    text += extra;
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "cannot write to " << opt.out_path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    return kExitOk;
}

int cmd_solve(const CommonOptions& opt) {
    const std::vector<cdmc::RunRecord> records = run_batch(opt);
    const int emit_rc = emit(opt, records);
    if (emit_rc != kExitOk) return emit_rc;
    return error_exit_code(records);
}

struct ReferenceRow {
    double expected = 0.0;
    bool gate = false;
};

std::map<std::string, ReferenceRow> load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw cdmc::ParseError("cannot open reference file '" + path + "'");
    }
    std::map<std::string, ReferenceRow> ref;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("instance,", 0) == 0) continue; // header
        std::istringstream ss(line);
        std::string instance, expected, gate;
        if (!std::getline(ss, instance, ',') || !std::getline(ss, expected, ',') ||
            !std::getline(ss, gate, ',')) {
            throw cdmc::ParseError("reference row needs instance,expected_cut,gate",
                                   line_no);
        }
        try {
            ref[instance] = {std::stod(expected), std::stoi(gate) != 0};
        } catch (const std::exception&) {
            throw cdmc::ParseError("bad number in reference row", line_no);
        }
    }
    return ref;
}

int cmd_bench(const CommonOptions& opt, const std::string& ref_path) {
    std::map<std::string, ReferenceRow> ref;
    try {
        ref = load_reference(ref_path);
    } catch (const cdmc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const std::vector<cdmc::RunRecord> records = run_batch(opt);

    // best cut per instance decides gate rows; per-algorithm rows are shown
    std::map<std::string, double> best;
    for (const auto& rec : records) {
        if (rec.ok && rec.algorithm != "ORACLE") {
            auto [it, inserted] =
                best.try_emplace(rec.instance, rec.report.solution.cut_weight);
            if (!inserted) it->second = std::max(it->second, rec.report.solution.cut_weight);
        }
        if (rec.ok && rec.algorithm == "ORACLE") {
            auto [it, inserted] =
                best.try_emplace(rec.instance, rec.report.solution.cut_weight);
            if (!inserted) it->second = std::max(it->second, rec.report.solution.cut_weight);
        }
    }

    std::ostringstream cmp;
    cmp << "\ninstance       algorithm        cut      expected  match  time_s\n";
    bool gate_failed = false;
    for (const auto& rec : records) {
        const auto it = ref.find(rec.instance);
        cmp << "  " << rec.instance;
        for (std::size_t pad = rec.instance.size(); pad < 13; ++pad) cmp << ' ';
        cmp << rec.algorithm << "    ";
        if (!rec.ok) {
            cmp << "error: " << rec.error << "\n";
            continue;
        }
        const double cut = rec.report.solution.cut_weight;
        cmp << cut << "  ";
        if (it == ref.end()) {
            cmp << "(no reference)";
        } else {
            cmp << it->second.expected << "  "
                << (cut == it->second.expected ? "yes" : "no");
        }
        cmp << "  " << rec.report.wall_time_seconds << "\n";
    }
    for (const auto& [instance, row] : ref) {
        if (!row.gate) continue;
        const auto it = best.find(instance);
        if (it == best.end()) continue; // not part of this run
        if (it->second != row.expected) {
            gate_failed = true;
            cmp << "GATE MISMATCH: " << instance << " best " << it->second
                << " != expected " << row.expected << "\n";
        }
    }
    // gated instances that errored out entirely also fail the gate
    for (const auto& rec : records) {
        if (rec.ok) continue;
        const auto it = ref.find(rec.instance);
        if (it != ref.end() && it->second.gate && best.find(rec.instance) == best.end()) {
            gate_failed = true;
        }
    }

    const int emit_rc = emit(opt, records, opt.format == "table" ? cmp.str() : "");
    if (emit_rc != kExitOk) return emit_rc;
    if (opt.format != "table") std::cerr << cmp.str();
    if (gate_failed) return kExitGate;
    return error_exit_code(records);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical-dual max-cut solver and benchmark driver"};
    app.require_subcommand(1);

    CommonOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "solve instances and report cuts");
    add_common_flags(solve, solve_opt);

    CommonOptions bench_opt;
    std::string ref_path;
    CLI::App* bench =
        app.add_subcommand("bench", "compare cuts against a reference table");
    add_common_flags(bench, bench_opt);
    bench->add_option("--ref", ref_path, "CSV reference: instance,expected_cut,gate")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto algorithms_valid = [](const std::vector<std::string>& algs) {
        if (algs.empty()) {
            std::cerr << "no algorithms selected\n";
            return false;
        }
        for (const auto& a : algs) {
            try {
                cdmc::algorithm_from_string(a);
            } catch (const cdmc::InputError& e) {
                std::cerr << e.what() << "\n";
                return false;
            }
        }
        return true;
    };

    try {
        if (solve->parsed()) {
            if (!algorithms_valid(solve_opt.algorithms)) return kExitUsage;
            return cmd_solve(solve_opt);
        }
        if (bench->parsed()) {
            if (!algorithms_valid(bench_opt.algorithms)) return kExitUsage;
            return cmd_bench(bench_opt, ref_path);
        }
    } catch (const cdmc::InputError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const cdmc::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
