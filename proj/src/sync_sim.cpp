#include "pinning/sync_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "pinning/error.hpp"
#include "pinning/spectra.hpp"

namespace pinning {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double chua_g(const Chua& p, double x) {
    return p.m1 * x + 0.5 * (p.m0 - p.m1) * (std::abs(x + 1.0) - std::abs(x - 1.0));
}

double chua_lipschitz(const Chua& p) {
    double best = 0.0;
    for (double slope : {p.m0, p.m1}) {
        Matrix j(3, 3);
        j << -p.a_p * (1.0 + slope), p.a_p, 0.0,
             1.0, -1.0, 1.0,
             0.0, -p.b_p, 0.0;
        best = std::max(best, std::sqrt(eig_sym(j.transpose() * j).largest()));
    }
    return best;
}

void validate(const SimConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw Error("dt must be positive");
    if (!(cfg.t_end > cfg.dt)) throw Error("horizon T must exceed dt");
    if (!(cfg.c > 0.0)) throw Error("coupling strength c must be positive");
    if (!(cfg.init_range >= 0.0)) throw Error("init range must be non-negative");
    if (cfg.record_every == 0) throw Error("record_every must be at least 1");
    std::visit(overloaded{
                   [](const AdaptiveController& a) {
                       if (!(a.h > 0.0)) throw Error("adaptive rate h must be positive");
                       if (!(a.d0 >= 0.0)) throw Error("initial adaptive gain must be non-negative");
                   },
                   [](const LinearController& l) {
                       if (!(l.d > 0.0)) throw Error("feedback gain d must be positive");
                   },
               },
               cfg.controller);
}

// State y = [x_0 .. x_{N-1}, s, d_0 .. d_{l-1}], each x_i and s of length n.
class PinnedNetwork {
public:
    PinnedNetwork(const Graph& g, const PinSet& s, const NodeDynamics& dyn, const SimConfig& cfg)
        : g_(g), dyn_(dyn), cfg_(cfg), n_(dyn.dim()), nodes_(g.size()), pins_(s.ids()),
          adaptive_(std::holds_alternative<AdaptiveController>(cfg.controller)),
          p_(dyn.inner_coupling()), identity_p_(p_.isIdentity()), scratch_a_(n_), scratch_b_(n_), scratch_c_(n_) {}

    std::size_t state_size() const { return (nodes_ + 1) * n_ + (adaptive_ ? pins_.size() : 0); }
    bool adaptive() const { return adaptive_; }

    void rhs(const std::vector<double>& y, std::vector<double>& dy) const {
        const double* s = y.data() + nodes_ * n_;
        auto& coupled = scratch_a_;
        auto& pe = scratch_b_;
        auto& e = scratch_c_;
        for (std::size_t i = 0; i < nodes_; ++i) {
            const double* xi = y.data() + i * n_;
            double* dxi = dy.data() + i * n_;
            dyn_.eval({xi, n_}, {dxi, n_});
            // sum_j l_ij x_j = deg(i) x_i - sum_{j ~ i} x_j
            for (std::size_t k = 0; k < n_; ++k) coupled[k] = static_cast<double>(g_.degree(i)) * xi[k];
            for (NodeId j : g_.neighbors(i))
                for (std::size_t k = 0; k < n_; ++k) coupled[k] -= y[j * n_ + k];
            apply_p(coupled, pe);
            for (std::size_t k = 0; k < n_; ++k) dxi[k] -= cfg_.c * pe[k];
        }
        dyn_.eval({s, n_}, {dy.data() + nodes_ * n_, n_});

        for (std::size_t q = 0; q < pins_.size(); ++q) {
            const std::size_t i = pins_[q];
            for (std::size_t k = 0; k < n_; ++k) e[k] = y[i * n_ + k] - s[k];
            apply_p(e, pe);
            double gain;
            if (adaptive_) {
                gain = y[(nodes_ + 1) * n_ + q];
                double epe = 0.0;
                for (std::size_t k = 0; k < n_; ++k) epe += e[k] * pe[k];
                dy[(nodes_ + 1) * n_ + q] = std::get<AdaptiveController>(cfg_.controller).h * epe;
            } else {
                gain = cfg_.c * std::get<LinearController>(cfg_.controller).d;
            }
            for (std::size_t k = 0; k < n_; ++k) dy[i * n_ + k] -= gain * pe[k];
        }
    }

    std::vector<double> error_norms(const std::vector<double>& y) const {
        std::vector<double> out(nodes_);
        const double* s = y.data() + nodes_ * n_;
        for (std::size_t i = 0; i < nodes_; ++i) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n_; ++k) {
                const double e = y[i * n_ + k] - s[k];
                acc += e * e;
            }
            out[i] = std::sqrt(acc);
        }
        return out;
    }

    std::vector<double> gains(const std::vector<double>& y) const {
        if (!adaptive_) return {};
        const auto first = y.begin() + static_cast<std::ptrdiff_t>((nodes_ + 1) * n_);
        return {first, y.end()};
    }

private:
    void apply_p(const std::vector<double>& v, std::vector<double>& out) const {
        if (identity_p_) {
            out = v;
            return;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n_; ++k)
                acc += p_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) * v[k];
            out[r] = acc;
        }
    }

    const Graph& g_;
    const NodeDynamics& dyn_;
    const SimConfig& cfg_;
    std::size_t n_;
    std::size_t nodes_;
    std::vector<NodeId> pins_;
    bool adaptive_;
    Matrix p_;
    bool identity_p_;
    mutable std::vector<double> scratch_a_, scratch_b_, scratch_c_;
};

}  // namespace

NodeDynamics::NodeDynamics(Params params) : params_(params) {
    coupling_ = Matrix::Identity(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
}

std::string NodeDynamics::id() const {
    return std::holds_alternative<LinearUnstable>(params_) ? "linear_unstable" : "chua";
}

std::size_t NodeDynamics::dim() const { return std::holds_alternative<LinearUnstable>(params_) ? 1 : 3; }

void NodeDynamics::eval(std::span<const double> x, std::span<double> dx) const {
    std::visit(overloaded{
                   [&](const LinearUnstable& p) { dx[0] = p.a * x[0]; },
                   [&](const Chua& p) {
                       dx[0] = p.a_p * (x[1] - x[0] - chua_g(p, x[0]));
                       dx[1] = x[0] - x[1] + x[2];
                       dx[2] = -p.b_p * x[1];
                   },
               },
               params_);
}

double NodeDynamics::alpha_floor() const {
    return std::visit(overloaded{
                          [](const LinearUnstable& p) { return p.a; },
                          [](const Chua& p) { return chua_lipschitz(p); },
                      },
                      params_);
}

std::vector<double> NodeDynamics::default_target() const {
    if (std::holds_alternative<LinearUnstable>(params_)) return {0.0};
    return {0.7, 0.0, 0.0};
}

SimResult simulate(const Graph& g, const PinSet& s, const NodeDynamics& dyn, const SimConfig& cfg) {
    validate(cfg);
    if (s.universe() != g.size()) throw Error("pin set was built for a different graph size");
    const std::size_t n = dyn.dim();
    const auto target = cfg.target0.value_or(dyn.default_target());
    if (target.size() != n) throw Error("target state has dimension " + std::to_string(target.size()) +
                                        ", dynamics need " + std::to_string(n));

    PinnedNetwork net(g, s, dyn, cfg);
    std::vector<double> y(net.state_size(), 0.0);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> init(-cfg.init_range, cfg.init_range);
    for (std::size_t i = 0; i < g.size() * n; ++i) y[i] = init(rng);
    std::copy(target.begin(), target.end(), y.begin() + static_cast<std::ptrdiff_t>(g.size() * n));
    if (net.adaptive()) {
        const double d0 = std::get<AdaptiveController>(cfg.controller).d0;
        std::fill(y.begin() + static_cast<std::ptrdiff_t>((g.size() + 1) * n), y.end(), d0);
    }

    SimResult r;
    auto record = [&](double t, const std::vector<double>& norms) {
        r.times.push_back(t);
        r.error_norms.push_back(norms);
        if (net.adaptive()) r.gains.push_back(net.gains(y));
    };
    auto max_of = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::isfinite(x) ? std::max(m, x) : std::numeric_limits<double>::infinity();
        return m;
    };

    const auto steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    const double h = cfg.dt;
    std::vector<double> k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());
    auto norms = net.error_norms(y);
    record(0.0, norms);

    for (std::size_t step = 1; step <= steps; ++step) {
        net.rhs(y, k1);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        net.rhs(tmp, k2);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        net.rhs(tmp, k3);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
        net.rhs(tmp, k4);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        const double t = static_cast<double>(step) * h;
        norms = net.error_norms(y);
        const double worst = max_of(norms);
        const bool finite = std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
        if (!finite || worst > cfg.blowup_limit) {
            r.blowup_time = t;
            record(t, norms);
            r.final_error = worst;
            r.converged = false;
            return r;
        }
        if (step % cfg.record_every == 0 || step == steps) record(t, norms);
    }
    r.final_error = max_of(norms);
    r.converged = r.final_error < cfg.tol_sync;
    return r;
}

bool check_criterion(const Graph& g, const PinSet& s, double alpha, double c) {
    return lambda1(ground(g, s).matrix) > alpha / c;
}

double linear_stability_oracle(const Graph& g, const PinSet& s, double a, double c, double d) {
    if (s.universe() != g.size()) throw Error("pin set was built for a different graph size");
    Matrix m = -c * laplacian(g);
    for (NodeId p : s.ids()) m(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)) -= c * d;
    m.diagonal().array() += a;
    return eig_sym(m).largest();
}

void write_sim_csv(std::ostream& out, const SimResult& r) {
    const std::size_t nodes = r.error_norms.empty() ? 0 : r.error_norms.front().size();
    const std::size_t pins = r.gains.empty() ? 0 : r.gains.front().size();
    out << "t";
    for (std::size_t i = 0; i < nodes; ++i) out << ",e" << i;
    for (std::size_t q = 0; q < pins; ++q) out << ",d" << q;
    out << '\n';
    const auto old_precision = out.precision(17);
    for (std::size_t k = 0; k < r.times.size(); ++k) {
        out << r.times[k];
        for (double e : r.error_norms[k]) out << ',' << e;
        if (pins > 0)
            for (double d : r.gains[k]) out << ',' << d;
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace pinning
