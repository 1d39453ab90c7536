#include "mfr/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace mfr {

namespace {

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

}  // namespace

std::string serialize_report(const AllLevelsReport& rep, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json doc;
        doc["d_max"] = rep.d_max;
        doc["r"] = rep.r;
        doc["R"] = rep.R;
        doc["pr_disconnected"] = rep.pr_disconnected;
        doc["n_total"] = to_string(rep.n_total);
        doc["n_processed"] = to_string(rep.n_processed);
        doc["x_fc"] = rep.x_fc;
        doc["workers"] = rep.workers;
        doc["elapsed_s"] = rep.elapsed_s;
        return doc.dump();
    }

    std::ostringstream out;
    out << "d,r_d,R_d\n";
    for (int d = 1; d <= rep.d_max; ++d)
        out << d << "," << fixed9(rep.level_r(d)) << "," << fixed9(rep.level_R(d)) << "\n";
    out << "pr_disconnected," << fixed9(rep.pr_disconnected) << "\n";
    out << "n_total," << to_string(rep.n_total) << "\n";
    out << "n_processed," << to_string(rep.n_processed) << "\n";
    out << "elapsed_s," << rep.elapsed_s << "\n";
    return out.str();
}

AllLevelsReport parse_report_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    AllLevelsReport rep;
    rep.d_max = doc.at("d_max").get<int>();
    rep.r = doc.at("r").get<std::vector<double>>();
    rep.R = doc.at("R").get<std::vector<double>>();
    rep.pr_disconnected = doc.at("pr_disconnected").get<double>();
    rep.n_total = u128_from_string(doc.at("n_total").get<std::string>());
    rep.n_processed = u128_from_string(doc.at("n_processed").get<std::string>());
    rep.x_fc = doc.at("x_fc").get<StateVector>();
    rep.workers = doc.at("workers").get<int>();
    rep.elapsed_s = doc.at("elapsed_s").get<double>();
    return rep;
}

}  // namespace mfr
