#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pinning/generators.hpp"
#include "pinning/graph.hpp"

namespace testing_support {

inline pinning::Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
    for (;;) {
        auto g = pinning::gen_erdos_renyi(n, p, rng());
        if (g.connected()) return g;
    }
}

inline pinning::PinSet random_pins(std::mt19937_64& rng, std::size_t n, std::size_t l) {
    std::vector<pinning::NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), pinning::NodeId{0});
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(l);
    return pinning::PinSet(n, ids);
}

}  // namespace testing_support
