#include "pinning/generators.hpp"

#include <algorithm>
#include <random>

#include "pinning/error.hpp"

namespace pinning {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(std::string(what) + " must lie in [0,1]");
}

}  // namespace

Graph gen_star(std::size_t n) {
    if (n < 3) throw Error("star needs at least 3 nodes, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::build(n, edges);
}

Graph gen_double_star(std::size_t k) {
    if (k < 1) throw Error("double star needs at least one leaf per hub");
    const std::size_t n = 2 * k + 3;
    const NodeId hub_a = 1;
    const NodeId hub_b = k + 2;
    std::vector<Edge> edges{{0, hub_a}, {0, hub_b}};
    for (std::size_t i = 0; i < k; ++i) {
        edges.emplace_back(hub_a, hub_a + 1 + i);
        edges.emplace_back(hub_b, hub_b + 1 + i);
    }
    return Graph::build(n, edges);
}

Graph gen_complete(std::size_t n) {
    if (n < 2) throw Error("complete graph needs at least 2 nodes");
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph gen_path(std::size_t n) {
    if (n < 1) throw Error("path needs at least 1 node");
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::build(n, edges);
}

Graph gen_ba(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed) {
    if (m < 1 || m > m0 || m0 >= n)
        throw Error("BA requires 1 <= m <= m0 < n (got n=" + std::to_string(n) + ", m0=" + std::to_string(m0) +
                    ", m=" + std::to_string(m) + ")");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    // every edge endpoint appears once, so a uniform draw is degree-proportional
    std::vector<NodeId> urn;
    for (NodeId u = 0; u < m0; ++u)
        for (NodeId v = u + 1; v < m0; ++v) {
            edges.emplace_back(u, v);
            urn.push_back(u);
            urn.push_back(v);
        }

    std::vector<NodeId> targets;
    for (NodeId v = m0; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            NodeId t;
            if (urn.empty()) {
                // K_1 seed has no degree mass yet
                t = std::uniform_int_distribution<NodeId>(0, v - 1)(rng);
            } else {
                t = urn[std::uniform_int_distribution<std::size_t>(0, urn.size() - 1)(rng)];
            }
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, v);
            urn.push_back(t);
            urn.push_back(v);
        }
    }
    return Graph::build(n, edges);
}

Graph gen_nw(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    if (k % 2 != 0 || k >= n) throw Error("NW requires an even K < n");
    check_probability(p, "NW shortcut probability");
    std::vector<char> adj(n * n, 0);
    std::vector<Edge> edges;
    auto add = [&](NodeId u, NodeId v) {
        if (adj[u * n + v]) return;
        adj[u * n + v] = adj[v * n + u] = 1;
        edges.emplace_back(u, v);
    };
    for (NodeId v = 0; v < n; ++v)
        for (std::size_t j = 1; j <= k / 2; ++j) add(v, (v + j) % n);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            if (adj[u * n + v]) continue;
            if (coin(rng) < p) add(u, v);
        }
    return Graph::build(n, edges);
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p, "edge probability");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Family parse_family(std::string_view name) {
    if (name == "star") return Family::star;
    if (name == "double_star") return Family::double_star;
    if (name == "complete") return Family::complete;
    if (name == "path") return Family::path;
    if (name == "ba") return Family::ba;
    if (name == "nw") return Family::nw;
    if (name == "erdos_renyi") return Family::erdos_renyi;
    throw Error("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::star: return "star";
        case Family::double_star: return "double_star";
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::ba: return "ba";
        case Family::nw: return "nw";
        case Family::erdos_renyi: return "erdos_renyi";
    }
    return "unknown";
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::star: return gen_star(spec.n);
        case Family::double_star: return gen_double_star(spec.k);
        case Family::complete: return gen_complete(spec.n);
        case Family::path: return gen_path(spec.n);
        case Family::ba: return gen_ba(spec.n, spec.m0, spec.m, spec.seed);
        case Family::nw: return gen_nw(spec.n, spec.ring_k, spec.p, spec.seed);
        case Family::erdos_renyi: return gen_erdos_renyi(spec.n, spec.p, spec.seed);
    }
    throw Error("unknown graph family");
}

}  // namespace pinning
