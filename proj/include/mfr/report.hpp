#pragma once

#include <string>
#include <vector>

#include "mfr/bigcount.hpp"
#include "mfr/network.hpp"

namespace mfr {

enum class ReportFormat { json, csv };

struct AllLevelsReport {
    int d_max = 0;
    std::vector<double> r;  // r[d-1] = exact-level mass for level d
    std::vector<double> R;  // R[d-1] = at-least-level reliability
    double pr_disconnected = 1.0;
    u128 n_total = 0;
    u128 n_processed = 0;
    StateVector x_fc;  // empty when the network is disconnected
    int workers = 1;
    double elapsed_s = 0.0;

    double level_r(int d) const { return r.at(d - 1); }
    double level_R(int d) const { return R.at(d - 1); }
};

// JSON carries every field; CSV is "d,r_d,R_d" rows with footer rows
// pr_disconnected, n_total, n_processed, elapsed_s. Probabilities are
// printed with 9 decimal places. Output is byte-stable for identical
// reports.
std::string serialize_report(const AllLevelsReport& rep, ReportFormat format);

AllLevelsReport parse_report_json(const std::string& text);

}  // namespace mfr
