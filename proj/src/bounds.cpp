#include "pinning/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <Eigen/Cholesky>

#include "pinning/error.hpp"

namespace pinning {

namespace {

void check_pin_count(std::size_t n, std::size_t l) {
    if (l < 1 || l + 1 > n)
        throw Error("pin count " + std::to_string(l) + " outside 1.." + std::to_string(n == 0 ? 0 : n - 1));
}

Matrix select_block(const Matrix& m, const std::vector<NodeId>& rows, const std::vector<NodeId>& cols) {
    Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
    return out;
}

}  // namespace

double upper_by_spectrum(const Spectrum& laplacian_spectrum, std::size_t l) {
    check_pin_count(laplacian_spectrum.size(), l);
    return laplacian_spectrum.lambda(l + 1);
}

double upper_by_spectrum(const Graph& g, std::size_t l) {
    check_pin_count(g.size(), l);
    return upper_by_spectrum(eig_sym(laplacian(g)), l);
}

double upper_by_min_degree(const Graph& g, const PinSet& s) {
    const auto rest = s.complement();
    if (rest.empty()) throw Error("every node is pinned; no uncontrolled degree to bound by");
    std::size_t kmin = g.degree(rest.front());
    for (NodeId p : rest) kmin = std::min(kmin, g.degree(p));
    return static_cast<double>(kmin);
}

BoundaryBounds boundary_bounds(const Graph& g, const PinSet& s) {
    const auto w = boundary_weights(g, s);
    if (w.empty()) throw Error("every node is pinned; boundary weights are empty");
    const auto total = std::accumulate(w.begin(), w.end(), std::size_t{0});
    return {static_cast<double>(*std::min_element(w.begin(), w.end())),
            static_cast<double>(total) / static_cast<double>(w.size())};
}

double upper_single_pin(const Graph& g, NodeId i) {
    if (g.size() < 2) throw Error("single-pin bound needs at least 2 nodes");
    if (i >= g.size()) throw Error("node " + std::to_string(i) + " is not in the graph");
    return static_cast<double>(g.degree(i)) / static_cast<double>(g.size() - 1);
}

bool necessary_lambda2(const Graph& g, double alpha_over_c) {
    if (g.size() < 2) return false;
    return eig_sym(laplacian(g)).lambda(2) > alpha_over_c;
}

double feedback_gain_bound(const Graph& g, const PinSet& s, double alpha, double c) {
    if (!(c > 0.0)) throw Error("coupling strength c must be positive");
    const auto grounded = ground(g, s);
    const double lam1 = lambda1(grounded.matrix);
    if (!(c * lam1 > alpha))
        throw CriterionNotMet("c * lambda1 = " + std::to_string(c * lam1) + " does not exceed alpha = " +
                              std::to_string(alpha));

    const Matrix full = laplacian(g);
    const auto& pinned = s.ids();
    const auto& free = grounded.retained;
    const Matrix l_pp = select_block(full, pinned, pinned);
    const Matrix l_pf = select_block(full, pinned, free);
    const Matrix l_fp = l_pf.transpose();

    // inner = c*L_{N-l} - alpha*I, positive definite by the criterion
    Matrix inner = c * grounded.matrix;
    inner.diagonal().array() -= alpha;
    Eigen::LLT<Matrix> chol(inner);
    if (chol.info() != Eigen::Success)
        throw CriterionNotMet("c*L(S|S) - alpha*I is numerically singular; criterion too close to its threshold");

    Matrix schur = (c * c) * (l_pf * chol.solve(l_fp)) - c * l_pp;
    schur = 0.5 * (schur + schur.transpose());
    return (eig_sym(schur).largest() + alpha) / c;
}

BoundReport bound_report(const Graph& g, const PinSet& s, std::optional<double> alpha_over_c) {
    const auto grounded = ground(g, s);
    BoundReport r;
    r.lambda1 = lambda1(grounded.matrix);
    r.upper_spectrum = upper_by_spectrum(g, s.size());
    r.upper_kmin = upper_by_min_degree(g, s);
    const auto bb = boundary_bounds(g, s);
    r.lower_min_boundary = bb.lower;
    r.upper_avg_boundary = bb.upper;
    if (s.size() == 1) r.upper_single_pin = upper_single_pin(g, s.ids().front());
    if (alpha_over_c) {
        r.alpha_over_c = alpha_over_c;
        r.satisfied = r.lambda1 > *alpha_over_c;
    }
    return r;
}

}  // namespace pinning
