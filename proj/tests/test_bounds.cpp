#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "pinning/bounds.hpp"
#include "pinning/error.hpp"
#include "pinning/generators.hpp"
#include "pinning/strategies.hpp"
#include "support.hpp"

using namespace pinning;
using namespace testing_support;

namespace {

// -alpha*I + c*(L + d*D_S)
Matrix gain_matrix(const Graph& g, const PinSet& s, double alpha, double c, double d) {
    Matrix m = c * laplacian(g);
    for (NodeId p : s.ids()) m(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)) += c * d;
    m.diagonal().array() -= alpha;
    return m;
}

}  // namespace

TEST_CASE("upper_by_spectrum") {
    auto ds = gen_double_star(5);
    CHECK(std::abs(upper_by_spectrum(ds, 1) - 0.1459) <= 5e-4);
    CHECK(upper_by_spectrum(ds, 9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(upper_by_spectrum(ds, 0), Error);
    CHECK_THROWS_AS(upper_by_spectrum(ds, 13), Error);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 15;
        auto g = random_connected(rng, n, 0.4);
        auto s = random_pins(rng, n, n - 1);
        CHECK(upper_by_spectrum(g, n - 1) >= pinned_lambda1(g, s) - 1e-9);
    }
}

TEST_CASE("upper_by_min_degree") {
    auto ds = gen_double_star(5);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(upper_by_min_degree(ds, random_pins(rng, 13, 1 + rng() % 9)) == 1.0);
    std::vector<NodeId> all_but_hubs;
    for (NodeId v = 0; v < 13; ++v)
        if (v != 1 && v != 7) all_but_hubs.push_back(v);
    CHECK(upper_by_min_degree(ds, PinSet(13, all_but_hubs)) == 6.0);
    CHECK(upper_by_min_degree(gen_complete(5), PinSet(5, {0, 3})) == 4.0);
}

TEST_CASE("boundary_bounds") {
    for (std::size_t l = 1; l < 8; ++l) {
        std::vector<NodeId> ids(l);
        for (std::size_t i = 0; i < l; ++i) ids[i] = i;
        PinSet s(8, ids);
        auto b = boundary_bounds(gen_complete(8), s);
        CHECK(b.lower == static_cast<double>(l));
        CHECK(b.upper == static_cast<double>(l));
        CHECK(pinned_lambda1(gen_complete(8), s) == doctest::Approx(static_cast<double>(l)).epsilon(1e-12));
    }
    auto star = boundary_bounds(gen_star(9), PinSet(9, {0}));
    CHECK(star.lower == 1.0);
    CHECK(star.upper == 1.0);
}

TEST_CASE("upper_single_pin") {
    CHECK(upper_single_pin(gen_star(13), 0) == 1.0);
    CHECK(upper_single_pin(gen_double_star(5), 0) == doctest::Approx(2.0 / 12.0));
    CHECK(upper_single_pin(gen_complete(7), 3) == 1.0);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 20;
        auto g = random_connected(rng, n, 0.3);
        const NodeId i = rng() % n;
        const double bound = upper_single_pin(g, i);
        CHECK(pinned_lambda1(g, PinSet(n, {i})) <= bound + 1e-9);
        CHECK(bound <= 1.0);
    }
}

TEST_CASE("necessary_lambda2") {
    auto ds = gen_double_star(5);
    CHECK(necessary_lambda2(ds, 0.1));
    CHECK_FALSE(necessary_lambda2(ds, 0.2));
    CHECK_FALSE(necessary_lambda2(Graph::build(4, {{0, 1}, {2, 3}}), 1e-6));

    // when it fails, no single pin can meet the threshold
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng() % 12;
        auto g = random_connected(rng, n, 0.3);
        const double thr = std::uniform_real_distribution<double>(0.01, 1.5)(rng);
        if (necessary_lambda2(g, thr)) continue;
        for (NodeId i = 0; i < n; ++i) CHECK(pinned_lambda1(g, PinSet(n, {i})) <= thr + 1e-12);
    }
}

TEST_CASE("feedback_gain_bound examples") {
    struct Case {
        Graph g;
        PinSet s;
    };
    std::vector<Case> cases{{gen_complete(4), PinSet(4, {0})}, {gen_star(5), PinSet(5, {0})}};
    for (const auto& [g, s] : cases) {
        const double d = feedback_gain_bound(g, s, 0.5, 1.0);
        CHECK(std::isfinite(d));
        CHECK(eig_sym(gain_matrix(g, s, 0.5, 1.0, d + 0.1)).smallest() > 0.0);
        CHECK(eig_sym(gain_matrix(g, s, 0.5, 1.0, d - 0.1)).smallest() < 0.0);
    }
    CHECK_THROWS_AS(feedback_gain_bound(gen_double_star(5), PinSet(13, {1, 7}), 1.1, 1.0), CriterionNotMet);
    CHECK_THROWS_AS(feedback_gain_bound(gen_path(3), PinSet(3, {0}), 1.0, 0.1), CriterionNotMet);
}

TEST_CASE("feedback_gain_bound is the positive-definiteness threshold") {
    std::mt19937_64 rng(10);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng() % 15;
        auto g = random_connected(rng, n, 0.3);
        auto s = random_pins(rng, n, 1 + rng() % (n - 1));
        const double lam = pinned_lambda1(g, s);
        const double c = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
        const double alpha = c * lam * std::uniform_real_distribution<double>(0.05, 0.9)(rng);
        const double d = feedback_gain_bound(g, s, alpha, c);
        const double scale = std::max(1.0, std::abs(d));
        CHECK(eig_sym(gain_matrix(g, s, alpha, c, d + 1e-6 * scale)).smallest() > -1e-9);
        CHECK(eig_sym(gain_matrix(g, s, alpha, c, d + 0.1 * scale)).smallest() > 0.0);
        CHECK(eig_sym(gain_matrix(g, s, alpha, c, d - 0.1 * scale)).smallest() < 0.0);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("bound_report") {
    auto r = bound_report(gen_double_star(5), PinSet(13, {1, 7}), 0.9);
    CHECK(r.lambda1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.upper_kmin == 1.0);
    CHECK(r.upper_spectrum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.satisfied == true);
    CHECK_FALSE(r.upper_single_pin.has_value());

    auto k6 = bound_report(gen_complete(6), PinSet(6, {2, 5}));
    CHECK(k6.lambda1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(k6.lower_min_boundary == 2.0);
    CHECK(k6.upper_avg_boundary == 2.0);
    CHECK_FALSE(k6.satisfied.has_value());

    auto p = bound_report(gen_path(3), PinSet(3, {1}), 1.0);
    CHECK(p.lambda1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.upper_single_pin == doctest::Approx(1.0));
    CHECK(p.satisfied == false);
    CHECK(p.lower_min_boundary <= p.lambda1);

    CHECK_THROWS_AS(bound_report(gen_path(3), PinSet(3, {0, 1, 2})), Error);
}

TEST_CASE("sandwich on random connected graphs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = 2 + rng() % 29;
        auto g = random_connected(rng, n, std::uniform_real_distribution<double>(0.1, 0.6)(rng));
        auto s = random_pins(rng, n, 1 + rng() % (n - 1));
        auto r = bound_report(g, s);
        const double tol = 1e-9;
        CHECK(r.lambda1 > 0.0);
        CHECK(r.lower_min_boundary <= r.lambda1 + tol);
        CHECK(r.lambda1 <= r.upper_spectrum + tol);
        CHECK(r.lambda1 <= r.upper_kmin + tol);
        CHECK(r.lambda1 <= r.upper_avg_boundary + tol);
        if (s.size() == 1) CHECK(r.lambda1 <= *r.upper_single_pin + tol);
    }
}

TEST_CASE("superset monotonicity and weyl bound") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 3 + rng() % 20;
        auto g = random_connected(rng, n, 0.3);
        auto big = random_pins(rng, n, 2 + rng() % (n - 2));
        std::vector<NodeId> sub(big.ids().begin(), big.ids().end());
        std::shuffle(sub.begin(), sub.end(), rng);
        sub.resize(1 + rng() % (sub.size() - 1));
        PinSet small(n, sub);
        CHECK(pinned_lambda1(g, big) >= pinned_lambda1(g, small) - 1e-9);

        // lambda1(L(H)) = 0 for the induced Laplacian, so Weyl gives min(w)
        auto keep = small.complement();
        const double lh = eig_sym(laplacian(induced_subgraph(g, keep).graph)).smallest();
        CHECK(std::abs(lh) <= 1e-9);
        CHECK(lh + boundary_bounds(g, small).lower <= pinned_lambda1(g, small) + 1e-9);
    }
}

TEST_CASE("max lambda1 is nondecreasing in l") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng() % 8;
        auto g = random_connected(rng, n, 0.4);
        double prev = 0.0;
        for (std::size_t l = 1; l < n; ++l) {
            const double best = brute_force_max_lambda1(g, l).lambda1;
            CHECK(best >= prev - 1e-9);
            prev = best;
        }
    }
}
