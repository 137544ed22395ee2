#pragma once

#include <string>
#include <vector>

#include "cdmc/drivers.hpp"

namespace cdmc {

/// One reporting record per (instance, algorithm). `error` is set instead
/// of the usual fields when a run failed; batches keep going.
struct RunRecord {
    std::string instance;
    std::string algorithm;
    bool ok = true;
    std::string error;        // "parse", "numeric", "size", ... with message
    SolveReport report;
};

/// JSON array of flat records; parse_reports_json reads it back with
/// identical field values (doubles are printed with round-trip precision).
std::string reports_to_json(const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_reports_json(const std::string& text);

/// CSV with a header row; scalar fields plus the policy echo. Vectors
/// (alpha, beta, delta_c, the solution itself) are JSON-only.
/// include_timing=false zeroes the wall-time column so identical runs
/// produce byte-identical files.
std::string reports_to_csv(const std::vector<RunRecord>& records,
                           bool include_timing = true);

/// Fixed-width human table.
std::string reports_to_table(const std::vector<RunRecord>& records);

} // namespace cdmc
