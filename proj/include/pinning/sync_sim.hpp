#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pinning/graph.hpp"

namespace pinning {

/// f(x) = a*x on R^1. For any alpha > a the one-sided condition
/// (y-z)^T [(f(y)-f(z)) - alpha (y-z)] <= -(alpha-a) |y-z|^2 holds with P = 1.
struct LinearUnstable {
    double a = 1.0;
};

/// Dimensionless Chua circuit
///   x' = a_p (y - x - g(x)),  y' = x - y + z,  z' = -b_p y,
///   g(x) = m1 x + (m0 - m1) (|x+1| - |x-1|) / 2.
/// Defaults are the double-scroll parameter set.
struct Chua {
    double a_p = 15.6;
    double b_p = 28.0;
    double m0 = -8.0 / 7.0;
    double m1 = -5.0 / 7.0;
};

class NodeDynamics {
public:
    using Params = std::variant<LinearUnstable, Chua>;

    explicit NodeDynamics(Params params);
    static NodeDynamics linear_unstable(double a) { return NodeDynamics(LinearUnstable{a}); }
    static NodeDynamics chua(Chua p = {}) { return NodeDynamics(p); }

    const Params& params() const { return params_; }
    std::string id() const;
    std::size_t dim() const;
    void eval(std::span<const double> x, std::span<double> dx) const;

    /// Inner coupling matrix P; identity.
    const Matrix& inner_coupling() const { return coupling_; }

    /// Every alpha strictly above this value satisfies the node-dynamics
    /// assumption with P = I: a for the linear node, the global Lipschitz
    /// constant (largest Jacobian 2-norm over both slope regions) for Chua.
    double alpha_floor() const;

    /// Default s(0): the origin for linear nodes, (0.7, 0, 0) for Chua.
    std::vector<double> default_target() const;

private:
    Params params_;
    Matrix coupling_;
};

struct AdaptiveController {
    double h = 1.0;   // gain adaptation rate h_i, shared by all pinned nodes
    double d0 = 0.0;  // initial gain d_i(0)
};

struct LinearController {
    double d = 1.0;  // u_i = -c d P e_i
};

struct SimConfig {
    std::variant<AdaptiveController, LinearController> controller = LinearController{};
    double c = 1.0;
    double dt = 1e-3;
    double t_end = 50.0;
    double init_range = 1.0;  // x_i(0) uniform in [-init_range, init_range]^n
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> target0;  // s(0); dynamics default when unset
    double tol_sync = 1e-6;
    std::size_t record_every = 100;  // steps between recorded samples
    double blowup_limit = 1e100;     // error norm treated as divergence
};

struct SimResult {
    std::vector<double> times;
    std::vector<std::vector<double>> error_norms;  // [sample][node] |e_i|
    std::vector<std::vector<double>> gains;        // [sample][pinned idx] d_i, adaptive only
    bool converged = false;
    double final_error = 0.0;  // max_i |e_i| at the last state reached
    std::optional<double> blowup_time;
};

/// Fixed-step RK4 integration of the pinned network and its target.
/// Blow-up stops the run and is reported through SimResult, not thrown.
SimResult simulate(const Graph& g, const PinSet& s, const NodeDynamics& dyn, const SimConfig& cfg);

/// lambda1(L(S|S)) > alpha / c.
bool check_criterion(const Graph& g, const PinSet& s, double alpha, double c);

/// Largest eigenvalue of a*I - c*(L_N + d*D_S), D_S the pinned-diagonal
/// indicator. For linear nodes the errors decay exponentially iff negative.
double linear_stability_oracle(const Graph& g, const PinSet& s, double a, double c, double d);

/// CSV: t, e0..e{N-1}, d0..d{l-1} (gain columns only when recorded).
void write_sim_csv(std::ostream& out, const SimResult& r);

}  // namespace pinning
