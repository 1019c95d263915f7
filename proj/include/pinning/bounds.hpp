#pragma once

#include <optional>

#include "pinning/graph.hpp"
#include "pinning/spectra.hpp"

namespace pinning {

/// lambda1 of L(S|S) next to every topological bound on it.
///
/// For a connected graph and valid pin set:
///   lower_min_boundary <= lambda1 <= min(upper_spectrum, upper_kmin, upper_avg_boundary)
/// and, when exactly one node is pinned, lambda1 <= upper_single_pin <= 1.
struct BoundReport {
    double lambda1 = 0.0;
    double upper_spectrum = 0.0;      // lambda_{l+1}(L_N)
    double upper_kmin = 0.0;          // min degree over uncontrolled nodes
    double upper_avg_boundary = 0.0;  // mean of w
    double lower_min_boundary = 0.0;  // min of w
    std::optional<double> upper_single_pin;  // k_i / (N-1), only when l = 1
    std::optional<double> alpha_over_c;
    std::optional<bool> satisfied;           // lambda1 > alpha_over_c
};

/// (l+1)-th smallest Laplacian eigenvalue; 1 <= l <= N-1.
double upper_by_spectrum(const Graph& g, std::size_t l);
/// Same, reusing an already computed Laplacian spectrum.
double upper_by_spectrum(const Spectrum& laplacian_spectrum, std::size_t l);

double upper_by_min_degree(const Graph& g, const PinSet& s);

struct BoundaryBounds {
    double lower;  // min_j w_j
    double upper;  // mean_j w_j
};
BoundaryBounds boundary_bounds(const Graph& g, const PinSet& s);

/// degree(i) / (N-1).
double upper_single_pin(const Graph& g, NodeId i);

/// True iff lambda_2(L_N) > alpha_over_c. When false, no single pinned node
/// can satisfy lambda1 > alpha_over_c.
bool necessary_lambda2(const Graph& g, double alpha_over_c);

/// Threshold d* on the linear feedback gain: any d > d* makes
/// -alpha*I + c*(L_N + d*D_S) positive definite, where D_S marks the pinned
/// diagonal. Throws CriterionNotMet unless c * lambda1(L(S|S)) > alpha.
double feedback_gain_bound(const Graph& g, const PinSet& s, double alpha, double c);

BoundReport bound_report(const Graph& g, const PinSet& s, std::optional<double> alpha_over_c = std::nullopt);

}  // namespace pinning
