#include "mfr/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mfr {

namespace {

constexpr double kSumTolerance = 1e-9;

std::pair<int, int> ordered(const Edge& e) {
    return {std::min(e.u, e.v), std::max(e.u, e.v)};
}

}  // namespace

void validate(const Network& net, const EdgeStateDistribution& dist) {
    if (net.n < 2) throw ValidationError("vertex count must be at least 2");
    if (net.edges.empty()) throw ValidationError("edge list is empty");
    if (dist.edge_count() != net.edge_count())
        throw ValidationError("distribution rows do not match edge count");

    std::set<std::pair<int, int>> seen;
    for (int k = 0; k < net.edge_count(); ++k) {
        const Edge& e = net.edges[k];
        std::ostringstream label;
        label << "edge a_" << (k + 1) << " = {" << e.u << "," << e.v << "}";
        if (e.u < 1 || e.u > net.n || e.v < 1 || e.v > net.n)
            throw ValidationError(label.str() + ": vertex out of range 1.." + std::to_string(net.n));
        if (e.u == e.v) throw ValidationError(label.str() + ": self-loop");
        if (!seen.insert(ordered(e)).second)
            throw ValidationError(label.str() + ": parallel edge");

        const auto& row = dist.p[k];
        if (row.empty()) throw ValidationError(label.str() + ": empty state distribution");
        double sum = 0.0;
        for (double q : row) {
            if (q < 0.0 || q > 1.0)
                throw ValidationError(label.str() + ": probability outside [0,1]");
            sum += q;
        }
        if (std::abs(sum - 1.0) > kSumTolerance)
            throw ValidationError(label.str() + ": probabilities sum to " + std::to_string(sum) +
                                  ", not 1");
    }
}

void canonicalize(Network& net, EdgeStateDistribution& dist) {
    const int m = net.edge_count();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ordered(net.edges[a]) < ordered(net.edges[b]);
    });

    std::vector<Edge> edges(m);
    std::vector<std::vector<double>> p(m);
    for (int k = 0; k < m; ++k) {
        const Edge& e = net.edges[order[k]];
        edges[k] = {std::min(e.u, e.v), std::max(e.u, e.v)};
        p[k] = std::move(dist.p[order[k]]);
    }
    net.edges = std::move(edges);
    dist.p = std::move(p);
}

ParsedNetwork parse_network(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }

    ParsedNetwork out;
    try {
        out.net.n = doc.at("n").get<int>();
        for (const auto& pair : doc.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ValidationError("each edge must be a [u,v] pair");
            out.net.edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        out.dist.p = doc.at("dist").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }

    if (doc.value("normalize", false)) {
        for (auto& row : out.dist.p) {
            double sum = std::accumulate(row.begin(), row.end(), 0.0);
            if (sum <= 0.0) throw ValidationError("cannot normalize a zero-mass distribution");
            for (double& q : row) q /= sum;
        }
    }
    if (!doc.value("preserve_order", false)) canonicalize(out.net, out.dist);
    validate(out.net, out.dist);
    return out;
}

std::string serialize_network(const Network& net, const EdgeStateDistribution& dist) {
    nlohmann::json doc;
    doc["n"] = net.n;
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const Edge& e : net.edges) edges.push_back({e.u, e.v});
    doc["dist"] = dist.p;
    return doc.dump();
}

EdgeStateDistribution uniform_distribution(const Network& net, int max_state) {
    if (max_state < 0) throw ValidationError("max_state must be non-negative");
    EdgeStateDistribution dist;
    dist.p.assign(net.edge_count(),
                  std::vector<double>(max_state + 1, 1.0 / (max_state + 1)));
    return dist;
}

double pr_vector(const StateVector& x, const EdgeStateDistribution& dist) {
    if (static_cast<int>(x.size()) != dist.edge_count())
        throw ValidationError("state vector length does not match edge count");
    double pr = 1.0;
    for (int k = 0; k < dist.edge_count(); ++k) {
        if (x[k] < 0 || x[k] > dist.max_state(k))
            throw ValidationError("state out of bounds at coordinate " + std::to_string(k + 1));
        pr *= dist.p[k][x[k]];
    }
    return pr;
}

std::string format_state_vector(const StateVector& x) {
    std::string s = "(";
    for (size_t k = 0; k < x.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(x[k]);
    }
    return s + ")";
}

}  // namespace mfr
