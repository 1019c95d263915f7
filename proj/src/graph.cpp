#include "pinning/graph.hpp"

#include <algorithm>
#include <string>

#include "pinning/error.hpp"

namespace pinning {

namespace {

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.first >= n || e.second >= n)
            throw Error("edge " + edge_text(e) + " has an endpoint outside 0.." +
                        std::to_string(n == 0 ? 0 : n - 1));
        if (e.first == e.second) throw Error("edge " + edge_text(e) + " is a self-loop");
        g.edges_.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= size() || v >= size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(size());
    for (NodeId v = 0; v < size(); ++v) d[v] = degree(v);
    return d;
}

std::size_t Graph::min_degree() const {
    std::size_t m = size() == 0 ? 0 : degree(0);
    for (NodeId v = 1; v < size(); ++v) m = std::min(m, degree(v));
    return m;
}

std::size_t Graph::max_degree() const {
    std::size_t m = 0;
    for (NodeId v = 0; v < size(); ++v) m = std::max(m, degree(v));
    return m;
}

bool Graph::connected() const {
    if (size() == 0) return true;
    std::vector<char> seen(size(), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == size();
}

PinSet::PinSet(std::size_t n, std::vector<NodeId> ids) : n_(n), ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] >= n) throw Error("pinned node " + std::to_string(ids_[i]) + " is not in the graph");
        if (i > 0 && ids_[i] == ids_[i - 1])
            throw Error("pinned node " + std::to_string(ids_[i]) + " listed twice");
    }
}

bool PinSet::contains(NodeId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::vector<NodeId> PinSet::complement() const {
    std::vector<NodeId> rest;
    rest.reserve(n_ - ids_.size());
    auto it = ids_.begin();
    for (NodeId v = 0; v < n_; ++v) {
        if (it != ids_.end() && *it == v) {
            ++it;
            continue;
        }
        rest.push_back(v);
    }
    return rest;
}

Matrix laplacian(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    Matrix l = Matrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        const auto iu = static_cast<Eigen::Index>(u);
        const auto iv = static_cast<Eigen::Index>(v);
        l(iu, iv) = -1.0;
        l(iv, iu) = -1.0;
        l(iu, iu) += 1.0;
        l(iv, iv) += 1.0;
    }
    return l;
}

std::vector<std::size_t> boundary_weights(const Graph& g, const PinSet& s) {
    if (s.universe() != g.size()) throw Error("pin set was built for a different graph size");
    std::vector<std::size_t> w;
    for (NodeId p : s.complement()) {
        std::size_t count = 0;
        for (NodeId u : g.neighbors(p))
            if (s.contains(u)) ++count;
        w.push_back(count);
    }
    return w;
}

GroundedLaplacian ground(const Graph& g, const PinSet& s) {
    if (s.universe() != g.size()) throw Error("pin set was built for a different graph size");
    if (s.empty()) throw Error("cannot ground on an empty pin set");
    if (s.size() >= g.size()) throw Error("cannot ground on a pin set containing every node");

    GroundedLaplacian out;
    out.retained = s.complement();
    const auto m = static_cast<Eigen::Index>(out.retained.size());

    // position of each original node in the retained order, or npos
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos(g.size(), npos);
    for (std::size_t j = 0; j < out.retained.size(); ++j) pos[out.retained[j]] = j;

    out.matrix = Matrix::Zero(m, m);
    out.boundary.assign(out.retained.size(), 0);
    for (std::size_t j = 0; j < out.retained.size(); ++j) {
        const NodeId p = out.retained[j];
        const auto jj = static_cast<Eigen::Index>(j);
        out.matrix(jj, jj) = static_cast<double>(g.degree(p));
        for (NodeId u : g.neighbors(p)) {
            if (pos[u] == npos)
                ++out.boundary[j];
            else
                out.matrix(jj, static_cast<Eigen::Index>(pos[u])) = -1.0;
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos(g.size(), npos);
    for (std::size_t j = 0; j < keep.size(); ++j) {
        if (keep[j] >= g.size()) throw Error("node " + std::to_string(keep[j]) + " is not in the graph");
        if (pos[keep[j]] != npos) throw Error("node " + std::to_string(keep[j]) + " listed twice");
        pos[keep[j]] = j;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (pos[u] != npos && pos[v] != npos) edges.emplace_back(pos[u], pos[v]);
    return {Graph::build(keep.size(), edges), std::vector<NodeId>(keep.begin(), keep.end())};
}

}  // namespace pinning
