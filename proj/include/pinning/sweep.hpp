#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pinning/graph.hpp"
#include "pinning/strategies.hpp"

namespace pinning {

enum class SweepStrategy { degree_mix, betweenness, greedy, brute_force };

SweepStrategy parse_sweep_strategy(const std::string& name);
std::string sweep_strategy_name(SweepStrategy s);

struct SweepOptions {
    SweepStrategy strategy = SweepStrategy::degree_mix;
    std::vector<double> qs{1.0};  // degree_mix only
    std::size_t l_first = 1;
    std::size_t l_last = 1;
    std::size_t step = 1;
    std::size_t runs = 5;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

/// One (l, q) cell. Bound columns are averaged over the same runs as lambda1,
/// so every row keeps lower_min_boundary <= lambda1_mean <= each upper bound.
struct SweepRow {
    std::size_t l = 0;
    std::optional<double> q;
    double lambda1_mean = 0.0;
    double lambda1_std = 0.0;  // population standard deviation over runs
    double upper_spectrum = 0.0;
    double upper_kmin = 0.0;
    double upper_avg_boundary = 0.0;
    double lower_min_boundary = 0.0;
    std::optional<double> lambda1_max;  // exhaustive optimum, when affordable
};

struct SweepResult {
    std::string strategy;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t runs = 0;
    std::vector<SweepRow> rows;  // sorted by (l, q)
};

/// Throws pinning::Error on an empty or out-of-range l range, and
/// BudgetExceeded when the brute_force strategy cannot afford some l.
SweepResult run_sweep(const Graph& g, const SweepOptions& opt);

/// Comment lines carry metadata; the header is
/// l,q,lambda1_mean,lambda1_std,upper_spectrum,upper_kmin,upper_avg_boundary,lower_min_boundary
/// plus a trailing lambda1_max column when every row has one.
void write_sweep_csv(std::ostream& out, const SweepResult& r);
SweepResult read_sweep_csv(std::istream& in);

}  // namespace pinning
