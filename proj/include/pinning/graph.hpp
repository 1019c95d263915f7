#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pinning {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;
using Matrix = Eigen::MatrixXd;

/// Undirected simple graph on nodes 0..n-1.
///
/// Edges are stored normalized (u < v), sorted and unique. Neighbor lists are
/// sorted ascending so iteration order is deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, collapsing duplicate edges. Throws pinning::Error on a
    /// self-loop or an endpoint >= n, naming the offending edge.
    static Graph build(std::size_t n, std::span<const Edge> edges);
    static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    std::size_t degree(NodeId v) const { return adj_[v].size(); }
    bool has_edge(NodeId u, NodeId v) const;

    std::vector<std::size_t> degrees() const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.size() == b.size(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adj_;
};

/// Sorted set of distinct controlled node ids.
class PinSet {
public:
    PinSet() = default;

    /// Sorts and validates; throws on ids >= n or repeated ids.
    PinSet(std::size_t n, std::vector<NodeId> ids);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<NodeId>& ids() const { return ids_; }
    bool contains(NodeId v) const;
    std::size_t universe() const { return n_; }

    /// Nodes of 0..n-1 not in the set, ascending.
    std::vector<NodeId> complement() const;

    friend bool operator==(const PinSet&, const PinSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<NodeId> ids_;
};

/// L(S|S) with its decomposition L(H) + diag(w).
struct GroundedLaplacian {
    Matrix matrix;
    std::vector<NodeId> retained;        // original id of row j, ascending
    std::vector<std::size_t> boundary;   // w_j = |neighbors(retained[j]) ∩ S|
};

struct InducedSubgraph {
    Graph graph;
    std::vector<NodeId> index_map;  // new id -> original id
};

Matrix laplacian(const Graph& g);

/// Principal submatrix of the Laplacian on the uncontrolled nodes.
/// Requires 1 <= |s| <= n-1.
GroundedLaplacian ground(const Graph& g, const PinSet& s);

/// Number of pinned neighbors of every uncontrolled node, in ascending
/// uncontrolled-id order.
std::vector<std::size_t> boundary_weights(const Graph& g, const PinSet& s);

/// Keeps the listed nodes (any order, no repeats) relabeled 0..|keep|-1 in
/// the order given, together with all edges between them.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

}  // namespace pinning
