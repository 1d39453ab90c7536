// Batch front end for multistate flow network reliability runs.
//
//   mfr run bridge.json --format csv
//   mfr check bridge.json --samples 100000
//   mfr bench --builtin --workers 4
//   mfr gen --n 5 --m 7 --seed 3 > instance.json

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfr/enumeration.hpp"
#include "mfr/generate.hpp"
#include "mfr/reliability.hpp"
#include "mfr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // validation or I/O error
constexpr int kExitCheckFail = 2; // oracle or statistical check failed
constexpr int kExitRefused = 3;   // budget or limit refusal

struct CommonOptions {
    std::string input;
    std::string format = "json";
    int workers = 1;
    int uniform_max_state = -1;  // override document distributions
    bool budget_override = false;
    bool normalize = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kBuiltinBridge = R"({
  "n": 4,
  "edges": [[1,2],[1,3],[2,3],[2,4],[3,4]],
  "dist": [[0.10,0.20,0.70],
           [0.05,0.10,0.85],
           [0.01,0.19,0.80],
           [0.10,0.15,0.75],
           [0.025,0.075,0.900]]
})";

mfr::ParsedNetwork load_instance(const CommonOptions& opts) {
    std::string text = slurp(opts.input);
    if (opts.normalize) {
        auto doc = nlohmann::json::parse(text);
        doc["normalize"] = true;
        text = doc.dump();
    }
    auto parsed = mfr::parse_network(text);
    if (opts.uniform_max_state >= 0)
        parsed.dist = mfr::uniform_distribution(parsed.net, opts.uniform_max_state);
    return parsed;
}

int cmd_run(const CommonOptions& opts) {
    auto inst = load_instance(opts);
    mfr::EngineOptions engine;
    engine.workers = opts.workers;
    engine.budget_override = opts.budget_override;
    auto rep = mfr::all_levels_reliability(inst.net, inst.dist, engine);
    auto format = opts.format == "csv" ? mfr::ReportFormat::csv : mfr::ReportFormat::json;
    std::cout << mfr::serialize_report(rep, format);
    if (format == mfr::ReportFormat::json) std::cout << "\n";
    return kExitOk;
}

int cmd_check(const CommonOptions& opts, std::int64_t samples, std::uint64_t seed,
              int random_n, int random_m, int random_max_state) {
    mfr::ParsedNetwork inst;
    if (random_n > 0) {
        mfr::GenerateOptions gen;
        gen.n = random_n;
        gen.m = random_m;
        gen.max_state = random_max_state;
        gen.seed = seed;
        gen.random_dist = true;
        inst = mfr::generate_network(gen);
        std::cout << "generated instance: n=" << gen.n << " m=" << gen.m << " seed=" << seed
                  << "\n";
    } else {
        inst = load_instance(opts);
    }

    mfr::EngineOptions engine;
    engine.workers = opts.workers;
    engine.budget_override = opts.budget_override;
    auto rep = mfr::all_levels_reliability(inst.net, inst.dist, engine);
    mfr::AllLevelsReport oracle;
    try {
        oracle = mfr::exhaustive_oracle(inst.net, inst.dist);
    } catch (const std::invalid_argument& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    }

    bool ok = rep.d_max == oracle.d_max;
    double max_delta = 0.0;
    std::cout << "d,engine_R,oracle_R,delta\n";
    for (int d = 1; d <= std::min(rep.d_max, oracle.d_max); ++d) {
        double delta = std::abs(rep.level_R(d) - oracle.level_R(d));
        max_delta = std::max(max_delta, delta);
        std::printf("%d,%.9f,%.9f,%.3e\n", d, rep.level_R(d), oracle.level_R(d), delta);
    }
    if (max_delta > 1e-9) ok = false;
    std::cout << "oracle max delta: " << max_delta << "\n";

    auto mc = mfr::monte_carlo(inst.net, inst.dist, samples, seed);
    if (samples < 1000)
        std::cout << "warning: only " << samples << " samples, low statistical power\n";
    for (int d = 1; d <= std::min(rep.d_max, mc.d_max); ++d) {
        double se = std::max(mc.std_errors[d - 1], 1e-12);
        double sigmas = std::abs(mc.estimates[d - 1] - rep.level_R(d)) / se;
        std::printf("mc d=%d estimate=%.6f sigma=%.2f\n", d, mc.estimates[d - 1], sigmas);
        if (sigmas > 4.0) ok = false;
    }

    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitCheckFail;
}

int cmd_bench(const CommonOptions& opts, const std::vector<std::string>& inputs, bool builtin,
              double limit_s) {
    std::vector<std::pair<std::string, mfr::ParsedNetwork>> instances;
    if (builtin) instances.push_back({"bridge", mfr::parse_network(kBuiltinBridge)});
    for (const auto& path : inputs) {
        CommonOptions one = opts;
        one.input = path;
        instances.push_back({path, load_instance(one)});
    }
    if (instances.empty()) {
        std::cerr << "bench: no instances (pass --builtin or input files)\n";
        return kExitInvalid;
    }

    std::cout << "id,n,m,d_max,x_fc,elapsed_s,n_total,n_processed,r_1,r_2,r_3,r_4\n";
    for (auto& [id, inst] : instances) {
        if (opts.uniform_max_state >= 0)
            inst.dist = mfr::uniform_distribution(inst.net, opts.uniform_max_state);
        mfr::EngineOptions engine;
        engine.workers = opts.workers;
        engine.budget_override = opts.budget_override;
        engine.time_limit_s = limit_s;
        try {
            auto rep = mfr::all_levels_reliability(inst.net, inst.dist, engine);
            std::cout << id << "," << inst.net.n << "," << inst.net.edge_count() << ","
                      << rep.d_max << ",\"" << mfr::format_state_vector(rep.x_fc) << "\","
                      << rep.elapsed_s << "," << mfr::to_string(rep.n_total) << ","
                      << mfr::to_string(rep.n_processed);
            for (int d = 1; d <= 4; ++d) {
                std::cout << ",";
                if (d <= rep.d_max) std::printf("%.9f", rep.level_r(d));
            }
            std::cout << "\n";
        } catch (const mfr::TimeoutError&) {
            std::cout << id << "," << inst.net.n << "," << inst.net.edge_count()
                      << ",TIMEOUT\n";
        }
    }
    return kExitOk;  // bench is informational
}

int cmd_gen(const mfr::GenerateOptions& gen) {
    auto inst = mfr::generate_network(gen);
    std::cout << mfr::serialize_network(inst.net, inst.dist) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"All-levels reliability of multistate flow networks"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    int random_n = 0, random_m = 0, random_max_state = 2;
    std::vector<std::string> bench_inputs;
    bool builtin = false;
    double limit_s = 3600.0;
    mfr::GenerateOptions gen;
    bool gen_random_dist = false;

    auto* run = app.add_subcommand("run", "evaluate all levels of one instance");
    run->add_option("input", opts.input, "network document (JSON)")->required();
    run->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--workers", opts.workers, "parallel sweep workers");
    run->add_option("--uniform", opts.uniform_max_state,
                    "replace distributions with uniform states 0..max");
    run->add_flag("--budget-override", opts.budget_override, "allow huge state spaces");
    run->add_flag("--normalize", opts.normalize, "rescale distributions that do not sum to 1");

    auto* check = app.add_subcommand("check", "cross-check engine vs oracle and Monte-Carlo");
    check->add_option("input", opts.input, "network document (JSON)");
    check->add_option("--samples", samples, "Monte-Carlo sample count");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--workers", opts.workers, "parallel sweep workers");
    check->add_option("--uniform", opts.uniform_max_state, "uniform distribution override");
    check->add_option("--random-n", random_n, "check a generated instance with n vertices");
    check->add_option("--random-m", random_m, "edge count for the generated instance");
    check->add_option("--random-max-state", random_max_state, "max state for generated instance");
    check->add_flag("--budget-override", opts.budget_override, "allow huge state spaces");
    check->add_flag("--normalize", opts.normalize, "rescale distributions");

    auto* bench = app.add_subcommand("bench", "timing table over benchmark instances");
    bench->add_option("inputs", bench_inputs, "network documents");
    bench->add_flag("--builtin", builtin, "include the built-in bridge benchmark");
    bench->add_option("--limit", limit_s, "wall-clock limit per instance, seconds");
    bench->add_option("--workers", opts.workers, "parallel sweep workers");
    bench->add_option("--uniform", opts.uniform_max_state, "uniform distribution override");
    bench->add_flag("--budget-override", opts.budget_override, "allow huge state spaces");

    auto* generate = app.add_subcommand("gen", "emit a random connected instance");
    generate->add_option("--n", gen.n, "vertex count")->required();
    generate->add_option("--m", gen.m, "edge count")->required();
    generate->add_option("--seed", gen.seed, "random seed")->required();
    generate->add_option("--max-state", gen.max_state, "largest edge state");
    generate->add_flag("--random-dist", gen_random_dist, "random instead of uniform probabilities");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(opts);
        if (check->parsed()) {
            if (random_n == 0 && opts.input.empty()) {
                std::cerr << "check: give an input file or --random-n/--random-m\n";
                return kExitInvalid;
            }
            return cmd_check(opts, samples, seed, random_n, random_m, random_max_state);
        }
        if (bench->parsed()) return cmd_bench(opts, bench_inputs, builtin, limit_s);
        gen.random_dist = gen_random_dist;
        return cmd_gen(gen);
    } catch (const mfr::BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const mfr::TimeoutError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
