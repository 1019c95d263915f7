#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pinning/graph.hpp"

namespace pinning {

// Random families are deterministic for a given seed on a given standard
// library; bit-compatibility across implementations is not promised.

/// Node 0 is the center. n >= 3.
Graph gen_star(std::size_t n);

/// Two stars with k leaves each, hubs joined through a bridge node.
/// N = 2k+3: bridge 0, hubs 1 and k+2, leaves 2..k+1 and k+3..2k+2.
Graph gen_double_star(std::size_t k);

Graph gen_complete(std::size_t n);

Graph gen_path(std::size_t n);

/// Barabasi-Albert preferential attachment from a K_{m0} seed; each new node
/// attaches to m distinct existing nodes with probability proportional to
/// degree. Requires 1 <= m <= m0 < n.
Graph gen_ba(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed);

/// Newman-Watts small world: ring lattice with K/2 neighbors per side, plus
/// each absent pair added independently with probability p.
/// Requires K even, K < n, 0 <= p <= 1.
Graph gen_nw(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// G(n, p): every pair independently with probability p.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

enum class Family { star, double_star, complete, path, ba, nw, erdos_renyi };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

struct GenSpec {
    Family family = Family::star;
    std::size_t n = 0;
    std::size_t k = 0;   // leaves per hub (double_star)
    std::size_t m0 = 0;  // seed clique (ba)
    std::size_t m = 0;   // edges per new node (ba)
    std::size_t ring_k = 0;  // lattice degree (nw)
    double p = 0.0;      // shortcut (nw) or edge (erdos_renyi) probability
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

}  // namespace pinning
