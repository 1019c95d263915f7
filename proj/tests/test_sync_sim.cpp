#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"

#include "pinning/bounds.hpp"
#include "pinning/error.hpp"
#include "pinning/generators.hpp"
#include "pinning/serialize.hpp"
#include "pinning/spectra.hpp"
#include "pinning/strategies.hpp"
#include "pinning/sync_sim.hpp"
#include "support.hpp"

using namespace pinning;
using namespace testing_support;

TEST_CASE("linear node examples") {
    const auto dyn = NodeDynamics::linear_unstable(1.0);
    CHECK(dyn.dim() == 1);
    CHECK(dyn.alpha_floor() == 1.0);
    CHECK(dyn.id() == "linear_unstable");

    auto k4 = gen_complete(4);
    PinSet s0(4, {0});
    CHECK(linear_stability_oracle(k4, s0, 1.0, 2.0, 10.0) < 0.0);
    SimConfig cfg;
    cfg.c = 2.0;
    cfg.controller = LinearController{10.0};
    cfg.seed = 1;
    auto r = simulate(k4, s0, dyn, cfg);
    CHECK(r.converged);
    CHECK_FALSE(r.blowup_time.has_value());

    auto path = gen_path(3);
    PinSet p0(3, {0});
    cfg.c = 0.1;
    for (double d : {0.1, 1.0, 100.0}) {
        CHECK(linear_stability_oracle(path, p0, 1.0, 0.1, d) > 0.0);
        cfg.controller = LinearController{d};
        CHECK_FALSE(simulate(path, p0, dyn, cfg).converged);
    }
    CHECK(linear_stability_oracle(path, p0, 1.0, 0.0, 5.0) == doctest::Approx(1.0));
}

TEST_CASE("oracle tends to a - c*lambda1 for large gains") {
    auto star = gen_star(9);
    PinSet center(9, {0});
    const double big = linear_stability_oracle(star, center, 1.0, 2.0, 1e6);
    CHECK(big == doctest::Approx(1.0 - 2.0 * pinned_lambda1(star, center)).epsilon(1e-4));
    CHECK(linear_stability_oracle(star, center, 1.0, 2.0, 10.0) >= big - 1e-12);
}

TEST_CASE("adaptive controller on a star") {
    const auto dyn = NodeDynamics::linear_unstable(1.0);
    auto star = gen_star(13);
    PinSet center(13, {0});
    SimConfig cfg;
    cfg.c = 2.0;
    cfg.controller = AdaptiveController{1.0, 0.0};
    cfg.seed = 5;
    cfg.t_end = 150;
    cfg.record_every = 50;
    REQUIRE(check_criterion(star, center, 1.1, cfg.c));
    auto r = simulate(star, center, dyn, cfg);
    CHECK(r.converged);
    REQUIRE(r.gains.size() == r.times.size());
    for (std::size_t k = 1; k < r.gains.size(); ++k) CHECK(r.gains[k][0] >= r.gains[k - 1][0]);
    // plateau: the gain stops moving once the errors have died out
    const double last = r.gains.back()[0];
    const double mid = r.gains[r.gains.size() * 3 / 4][0];
    CHECK(std::isfinite(last));
    CHECK(last - mid <= 1e-6 * std::max(1.0, last));
    for (const auto& row : r.error_norms)
        for (double e : row) CHECK(e >= 0.0);
}

TEST_CASE("adaptive gains are nondecreasing and bounded on converged runs") {
    std::mt19937_64 rng(51);
    int converged = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 4 + rng() % 8;
        auto g = random_connected(rng, n, 0.4);
        auto s = random_pins(rng, n, 1 + rng() % (n - 1));
        const double a = 0.5;
        const double c = 1.5 * (a + 0.1) / pinned_lambda1(g, s);
        SimConfig cfg;
        cfg.c = c;
        cfg.controller = AdaptiveController{2.0, 0.0};
        cfg.seed = rng();
        cfg.t_end = 300;
        cfg.record_every = 1000;
        auto r = simulate(g, s, NodeDynamics::linear_unstable(a), cfg);
        if (!r.converged) continue;
        ++converged;
        for (std::size_t k = 1; k < r.gains.size(); ++k)
            for (std::size_t q = 0; q < s.size(); ++q) CHECK(r.gains[k][q] >= r.gains[k - 1][q]);
        for (double d : r.gains.back()) CHECK(std::isfinite(d));
    }
    CHECK(converged >= 10);
}

TEST_CASE("criterion and gain bound imply convergence") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 4 + rng() % 9;
        auto g = random_connected(rng, n, 0.35);
        auto s = random_pins(rng, n, 1 + rng() % (n - 1));
        const double a = std::uniform_real_distribution<double>(0.2, 1.5)(rng);
        const double alpha = a + 0.1;
        const double c = 1.5 * alpha / pinned_lambda1(g, s);
        REQUIRE(check_criterion(g, s, alpha, c));
        const double d = feedback_gain_bound(g, s, alpha, c) + 0.5;
        CHECK(linear_stability_oracle(g, s, a, c, d) < 0.0);
        SimConfig cfg;
        cfg.c = c;
        cfg.controller = LinearController{d};
        cfg.seed = rng();
        cfg.t_end = 400;
        cfg.record_every = 10000;
        CHECK(simulate(g, s, NodeDynamics::linear_unstable(a), cfg).converged);
    }
}

TEST_CASE("check_criterion") {
    auto ds = gen_double_star(5);
    PinSet hubs(13, {1, 7});
    CHECK(check_criterion(ds, hubs, 0.9, 1.0));
    CHECK_FALSE(check_criterion(ds, hubs, 1.1, 1.0));
    CHECK(check_criterion(ds, PinSet(13, {4}), 5.0, 1e6));
}

TEST_CASE("halving the step behaves like a fourth-order method") {
    auto g = gen_complete(5);
    PinSet s(5, {0, 2});
    const auto dyn = NodeDynamics::linear_unstable(1.0);
    auto final_error = [&](double dt) {
        SimConfig cfg;
        cfg.c = 3.0;
        cfg.controller = LinearController{2.0};
        cfg.dt = dt;
        cfg.t_end = 4.0;
        cfg.seed = 9;
        cfg.tol_sync = 1.0;
        return simulate(g, s, dyn, cfg).final_error;
    };
    const double e1 = final_error(0.04);
    const double e2 = final_error(0.02);
    const double e3 = final_error(0.01);
    const double ratio = std::abs(e1 - e2) / std::abs(e2 - e3);
    CHECK(ratio > 8.0);
    CHECK(ratio < 32.0);
    CHECK(std::abs(e2 - e3) <= 1e-3 * e3);
}

TEST_CASE("chua network synchronizes under a certified criterion") {
    const auto chua = NodeDynamics::chua();
    CHECK(chua.dim() == 3);
    CHECK(chua.id() == "chua");
    const double alpha = chua.alpha_floor() + 0.1;
    CHECK(alpha > 15.6);

    auto g = gen_complete(4);
    PinSet s(4, {0});
    const double c = 1.3 * alpha;
    REQUIRE(check_criterion(g, s, alpha, c));
    const double d = feedback_gain_bound(g, s, alpha, c) + 0.5;
    SimConfig cfg;
    cfg.c = c;
    cfg.controller = LinearController{d};
    cfg.seed = 2;
    cfg.dt = 2e-4;
    cfg.t_end = 10.0;
    cfg.record_every = 1000;
    auto r = simulate(g, s, chua, cfg);
    CHECK(r.converged);
    CHECK(r.error_norms.front().size() == 4);
}

TEST_CASE("chua without pinning strength does not synchronize") {
    SimConfig cfg;
    cfg.c = 0.01;
    cfg.controller = LinearController{0.01};
    cfg.seed = 3;
    cfg.t_end = 20.0;
    cfg.record_every = 1000;
    auto r = simulate(gen_path(4), PinSet(4, {0}), NodeDynamics::chua(), cfg);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.blowup_time.has_value());
}

TEST_CASE("blow-up is reported, not thrown") {
    SimConfig cfg;
    cfg.c = 0.1;
    cfg.controller = LinearController{0.1};
    cfg.blowup_limit = 1e6;
    auto r = simulate(gen_path(3), PinSet(3, {0}), NodeDynamics::linear_unstable(5.0), cfg);
    REQUIRE(r.blowup_time.has_value());
    CHECK(*r.blowup_time < cfg.t_end);
    CHECK_FALSE(r.converged);
    CHECK(r.times.back() == doctest::Approx(*r.blowup_time));
    auto j = summary_json(r);
    CHECK(j.contains("blowup_time"));
    CHECK(j["converged"] == false);
}

TEST_CASE("configuration is validated") {
    auto g = gen_path(3);
    PinSet s(3, {0});
    const auto dyn = NodeDynamics::linear_unstable(1.0);
    auto bad = [&](auto mutate) {
        SimConfig cfg;
        mutate(cfg);
        CHECK_THROWS_AS(simulate(g, s, dyn, cfg), Error);
    };
    bad([](SimConfig& c) { c.dt = 0.0; });
    bad([](SimConfig& c) { c.t_end = c.dt / 2; });
    bad([](SimConfig& c) { c.c = 0.0; });
    bad([](SimConfig& c) { c.controller = LinearController{0.0}; });
    bad([](SimConfig& c) { c.controller = AdaptiveController{0.0, 0.0}; });
    bad([](SimConfig& c) { c.target0 = std::vector<double>{0.0, 0.0}; });
    bad([](SimConfig& c) { c.record_every = 0; });
    CHECK_THROWS_AS(simulate(g, PinSet(4, {0}), dyn, SimConfig{}), Error);
}

TEST_CASE("simulation is seed-deterministic and CSV is well formed") {
    SimConfig cfg;
    cfg.controller = AdaptiveController{1.0, 0.5};
    cfg.c = 2.0;
    cfg.t_end = 2.0;
    cfg.seed = 77;
    auto g = gen_star(5);
    PinSet s(5, {0, 3});
    auto a = simulate(g, s, NodeDynamics::linear_unstable(1.0), cfg);
    auto b = simulate(g, s, NodeDynamics::linear_unstable(1.0), cfg);
    std::ostringstream oa, ob;
    write_sim_csv(oa, a);
    write_sim_csv(ob, b);
    CHECK(oa.str() == ob.str());

    std::istringstream in(oa.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,e0,e1,e2,e3,e4,d0,d1");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(rows == a.times.size());
    CHECK(a.times.size() == 2000 / 100 + 1);
    CHECK(a.gains.front() == std::vector<double>{0.5, 0.5});
}
