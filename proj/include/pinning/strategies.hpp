#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinning/graph.hpp"

namespace pinning {

struct StrategyConfig {
    std::size_t l = 1;
    double q = 1.0;  // fraction of pins taken from the high-degree end
    std::uint64_t seed = 0;
    std::size_t runs = 5;
};

struct SelectionResult {
    std::string strategy;
    std::size_t l = 0;
    std::optional<double> q;
    std::uint64_t seed = 0;
    PinSet pin_set;                     // the first run's set
    double lambda1 = 0.0;               // mean of lambda1_runs
    std::vector<double> lambda1_runs;
};

/// Default enumeration budget for brute_force_max_lambda1.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Round to nearest integer, ties to even.
std::size_t round_half_even(double x);

/// lambda1(L(S|S)); +infinity when S holds every node.
double pinned_lambda1(const Graph& g, const PinSet& s);

/// One draw of the degree-mix rule: round(q*l) highest-degree nodes, then the
/// l - round(q*l) lowest-degree nodes among the rest. Equal degrees are
/// ordered by a shuffle seeded from (seed, run).
PinSet degree_mix_draw(const Graph& g, std::size_t l, double q, std::uint64_t seed, std::size_t run);

/// Averages lambda1 of degree_mix_draw over cfg.runs runs.
SelectionResult select_degree_mix(const Graph& g, const StrategyConfig& cfg);

/// Shortest-path betweenness of every node, unweighted, over unordered pairs
/// with endpoints excluded (Brandes accumulation).
std::vector<double> betweenness_centrality(const Graph& g);

/// The l nodes of largest betweenness; equal scores go to the lower id.
SelectionResult select_betweenness(const Graph& g, std::size_t l);

/// Pins a set such that every uncontrolled node has a pinned neighbor, so
/// lambda1 >= 1. Random choices are seeded.
SelectionResult dominating_partition(const Graph& g, std::uint64_t seed);

/// Exact max over all |S| = l of lambda1, lexicographically first argmax.
/// Throws BudgetExceeded when C(N, l) > budget.
SelectionResult brute_force_max_lambda1(const Graph& g, std::size_t l,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Adds, l times, the node that maximizes lambda1 of the grown set.
SelectionResult greedy_max_lambda1(const Graph& g, std::size_t l);

}  // namespace pinning
