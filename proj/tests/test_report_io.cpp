#include <doctest.h>

#include "cdmc/report_io.hpp"
#include "test_helpers.hpp"

using namespace cdmc;

namespace {

std::vector<RunRecord> sample_records() {
    std::mt19937_64 rng(31);
    std::vector<RunRecord> records;
    PerturbationPolicy policy;
    policy.linear_magnitude = 0.9;
    for (int k = 0; k < 3; ++k) {
        const WeightedGraph g = cdmc::testing::random_graph(rng, 5 + k);
        for (const Algorithm alg :
             {Algorithm::Cda1, Algorithm::Cda2, Algorithm::Cda3, Algorithm::Oracle}) {
            RunRecord rec;
            rec.instance = g.name();
            rec.algorithm = to_string(alg);
            rec.report = solve_graph(g, alg, policy);
            records.push_back(std::move(rec));
        }
    }
    RunRecord failed;
    failed.instance = "missing.tsp";
    failed.algorithm = "CDA1";
    failed.ok = false;
    failed.error = "parse: cannot open instance file";
    records.push_back(std::move(failed));
    return records;
}

} // namespace

TEST_CASE("JSON reports round-trip with identical values") {
    const std::vector<RunRecord> records = sample_records();
    const std::string text = reports_to_json(records);
    const std::vector<RunRecord> back = parse_reports_json(text);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].instance == records[i].instance);
        CHECK(back[i].algorithm == records[i].algorithm);
        CHECK(back[i].ok == records[i].ok);
        if (!records[i].ok) continue;
        const SolveReport& a = records[i].report;
        const SolveReport& b = back[i].report;
        CHECK(a.solution.cut_weight == b.solution.cut_weight);
        CHECK(a.solution.primal_value == b.solution.primal_value);
        CHECK(a.solution.x == b.solution.x);
        CHECK(a.solution.certified_global == b.solution.certified_global);
        CHECK(a.iterations_total == b.iterations_total);
        CHECK(a.reductions == b.reductions);
        CHECK(a.compensation_passes == b.compensation_passes);
        CHECK(a.wall_time_seconds == b.wall_time_seconds);
        CHECK(a.config.alpha == b.config.alpha);
        CHECK(a.config.beta == b.config.beta);
        CHECK(a.config.delta_c == b.config.delta_c);
        CHECK(a.policy.rng_seed == b.policy.rng_seed);
        CHECK(a.policy.beta_scale == b.policy.beta_scale);
    }
    // re-serialization is byte-identical
    std::vector<RunRecord> back_copy = back;
    CHECK(reports_to_json(back_copy) == text);
}

TEST_CASE("CSV is deterministic for identical runs when timing is redacted") {
    std::mt19937_64 rng(32);
    const WeightedGraph g = cdmc::testing::random_graph(rng, 7);
    PerturbationPolicy policy;
    policy.rng_seed = 99;
    auto run = [&]() {
        std::vector<RunRecord> records;
        for (const Algorithm alg : {Algorithm::Cda2, Algorithm::Cda3}) {
            RunRecord rec;
            rec.instance = g.name();
            rec.algorithm = to_string(alg);
            rec.report = solve_graph(g, alg, policy);
            records.push_back(std::move(rec));
        }
        return reports_to_csv(records, /*include_timing=*/false);
    };
    const std::string first = run();
    CHECK(run() == first);
    CHECK(first.find("random7,CDA2") != std::string::npos);
    CHECK(first.substr(0, 9) == "instance,"); // header row
}

TEST_CASE("error rows keep the batch format") {
    std::vector<RunRecord> records(1);
    records[0].instance = "broken, name";
    records[0].algorithm = "CDA1";
    records[0].ok = false;
    records[0].error = "parse: bad header";
    const std::string csv = reports_to_csv(records);
    CHECK(csv.find("\"broken, name\"") != std::string::npos);
    const std::string table = reports_to_table(records);
    CHECK(table.find("error: parse: bad header") != std::string::npos);
}
