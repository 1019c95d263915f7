#include "pinning/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>

#include "pinning/error.hpp"
#include "pinning/spectra.hpp"

namespace pinning {

namespace {

// Ties in lambda1 closer than this keep the earlier candidate.
constexpr double kTieTol = 1e-12;

void check_pin_count(const Graph& g, std::size_t l) {
    if (l < 1 || l + 1 > g.size())
        throw Error("pin count " + std::to_string(l) + " outside 1.." +
                    std::to_string(g.size() == 0 ? 0 : g.size() - 1));
}

std::mt19937_64 run_rng(std::uint64_t seed, std::size_t run) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32)};
    return std::mt19937_64(seq);
}

double mean(const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

Matrix principal_submatrix(const Matrix& m, const std::vector<NodeId>& keep) {
    const auto k = static_cast<Eigen::Index>(keep.size());
    Matrix out(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            out(i, j) = m(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(i)]),
                          static_cast<Eigen::Index>(keep[static_cast<std::size_t>(j)]));
    return out;
}

std::vector<NodeId> complement_of(std::size_t n, const std::vector<NodeId>& sorted_ids) {
    std::vector<NodeId> rest;
    auto it = sorted_ids.begin();
    for (NodeId v = 0; v < n; ++v) {
        if (it != sorted_ids.end() && *it == v) {
            ++it;
            continue;
        }
        rest.push_back(v);
    }
    return rest;
}

SelectionResult single_result(std::string name, const Graph& g, PinSet s, std::uint64_t seed = 0) {
    SelectionResult r;
    r.strategy = std::move(name);
    r.l = s.size();
    r.seed = seed;
    r.lambda1 = pinned_lambda1(g, s);
    r.lambda1_runs = {r.lambda1};
    r.pin_set = std::move(s);
    return r;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral at every step
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t rr = r / g;
        const std::uint64_t ii = i / g;
        const std::uint64_t nn = num / ii;
        if (rr > std::numeric_limits<std::uint64_t>::max() / nn) return std::numeric_limits<std::uint64_t>::max();
        r = rr * nn;
    }
    return r;
}

std::size_t round_half_even(double x) {
    return static_cast<std::size_t>(std::nearbyint(x));  // default FE_TONEAREST
}

double pinned_lambda1(const Graph& g, const PinSet& s) {
    if (s.size() == g.size()) return std::numeric_limits<double>::infinity();
    return lambda1(ground(g, s).matrix);
}

PinSet degree_mix_draw(const Graph& g, std::size_t l, double q, std::uint64_t seed, std::size_t run) {
    check_pin_count(g, l);
    if (!(q >= 0.0 && q <= 1.0)) throw Error("q must lie in [0,1]");
    const std::size_t high = std::min(l, round_half_even(q * static_cast<double>(l)));
    const std::size_t low = l - high;

    auto rng = run_rng(seed, run);
    std::vector<NodeId> order(g.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);

    // shuffled then stably sorted: equal degrees appear in random order
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    std::vector<NodeId> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(high));
    // the remaining nodes, read from the low-degree end, are equally random among ties
    for (std::size_t i = 0; i < low; ++i) chosen.push_back(order[order.size() - 1 - i]);
    return PinSet(g.size(), std::move(chosen));
}

SelectionResult select_degree_mix(const Graph& g, const StrategyConfig& cfg) {
    check_pin_count(g, cfg.l);
    if (cfg.runs < 1) throw Error("runs must be at least 1");
    SelectionResult r;
    r.strategy = "degree_mix";
    r.l = cfg.l;
    r.q = cfg.q;
    r.seed = cfg.seed;
    for (std::size_t run = 0; run < cfg.runs; ++run) {
        PinSet s = degree_mix_draw(g, cfg.l, cfg.q, cfg.seed, run);
        r.lambda1_runs.push_back(pinned_lambda1(g, s));
        if (run == 0) r.pin_set = std::move(s);
    }
    r.lambda1 = mean(r.lambda1_runs);
    return r;
}

std::vector<double> betweenness_centrality(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<double> bc(n, 0.0);
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<long> dist(n);
    std::deque<NodeId> queue;

    for (NodeId s = 0; s < n; ++s) {
        stack.clear();
        for (auto& p : preds) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            stack.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        while (!stack.empty()) {
            NodeId w = stack.back();
            stack.pop_back();
            for (NodeId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) bc[w] += delta[w];
        }
    }
    // each unordered pair was visited from both ends
    for (auto& b : bc) b *= 0.5;
    return bc;
}

SelectionResult select_betweenness(const Graph& g, std::size_t l) {
    check_pin_count(g, l);
    const auto bc = betweenness_centrality(g);
    std::vector<NodeId> order(g.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    // scores within 1e-9 relative are treated as equal so ids break the tie
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        const double tol = 1e-9 * std::max({1.0, std::abs(bc[a]), std::abs(bc[b])});
        return bc[a] > bc[b] + tol;
    });
    order.resize(l);
    return single_result("betweenness", g, PinSet(g.size(), std::move(order)));
}

SelectionResult dominating_partition(const Graph& g, std::uint64_t seed) {
    const std::size_t n = g.size();
    std::mt19937_64 rng(seed);
    std::vector<char> alive(n, 1);
    std::vector<char> pinned(n, 0);
    std::size_t remaining = n;

    auto working_neighbors = [&](NodeId v) {
        std::vector<NodeId> out;
        for (NodeId u : g.neighbors(v))
            if (alive[u]) out.push_back(u);
        return out;
    };
    auto pick = [&](const std::vector<NodeId>& from) {
        return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    };

    std::vector<char> seen(n);
    while (remaining > 0) {
        std::vector<NodeId> added;
        auto add = [&](NodeId v) {
            if (!pinned[v]) {
                pinned[v] = 1;
                added.push_back(v);
            }
        };

        std::fill(seen.begin(), seen.end(), 0);
        for (NodeId root = 0; root < n; ++root) {
            if (!alive[root] || seen[root]) continue;
            // collect the component of root in the working graph
            std::vector<NodeId> comp{root};
            seen[root] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (NodeId u : g.neighbors(comp[i]))
                    if (alive[u] && !seen[u]) {
                        seen[u] = 1;
                        comp.push_back(u);
                    }
            std::sort(comp.begin(), comp.end());

            if (comp.size() == 1) {
                add(root);  // isolated
                continue;
            }
            std::vector<std::size_t> wdeg(comp.size());
            for (std::size_t i = 0; i < comp.size(); ++i) wdeg[i] = working_neighbors(comp[i]).size();

            std::vector<NodeId> universal;
            for (std::size_t i = 0; i < comp.size(); ++i)
                if (wdeg[i] + 1 == comp.size()) universal.push_back(comp[i]);
            if (!universal.empty()) {
                add(pick(universal));
                continue;
            }
            const std::size_t dmin = *std::min_element(wdeg.begin(), wdeg.end());
            for (std::size_t i = 0; i < comp.size(); ++i)
                if (wdeg[i] == dmin) add(pick(working_neighbors(comp[i])));
        }

        std::vector<NodeId> doomed;
        for (NodeId a : added) {
            doomed.push_back(a);
            for (NodeId u : g.neighbors(a))
                if (alive[u]) doomed.push_back(u);
        }
        for (NodeId v : doomed)
            if (alive[v]) {
                alive[v] = 0;
                --remaining;
            }
    }

    std::vector<NodeId> ids;
    for (NodeId v = 0; v < n; ++v)
        if (pinned[v]) ids.push_back(v);
    return single_result("dominating_partition", g, PinSet(n, std::move(ids)), seed);
}

SelectionResult brute_force_max_lambda1(const Graph& g, std::size_t l, std::uint64_t budget) {
    check_pin_count(g, l);
    const std::uint64_t count = binomial(g.size(), l);
    if (count > budget) throw BudgetExceeded(count, budget);

    const Matrix full = laplacian(g);
    const std::size_t n = g.size();
    std::vector<NodeId> combo(l);
    std::iota(combo.begin(), combo.end(), NodeId{0});

    double best = -std::numeric_limits<double>::infinity();
    std::vector<NodeId> best_set;
    while (true) {
        const double lam = lambda1(principal_submatrix(full, complement_of(n, combo)));
        if (lam > best + kTieTol) {
            best = lam;
            best_set = combo;
        }
        // next combination in lexicographic order
        std::size_t i = l;
        while (i > 0 && combo[i - 1] == n - l + (i - 1)) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < l; ++j) combo[j] = combo[j - 1] + 1;
    }

    SelectionResult r;
    r.strategy = "brute_force";
    r.l = l;
    r.pin_set = PinSet(n, std::move(best_set));
    r.lambda1 = best;
    r.lambda1_runs = {best};
    return r;
}

SelectionResult greedy_max_lambda1(const Graph& g, std::size_t l) {
    check_pin_count(g, l);
    const Matrix full = laplacian(g);
    const std::size_t n = g.size();
    std::vector<NodeId> chosen;
    double best = 0.0;
    for (std::size_t round = 0; round < l; ++round) {
        best = -std::numeric_limits<double>::infinity();
        NodeId best_node = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
            auto trial = chosen;
            trial.insert(std::upper_bound(trial.begin(), trial.end(), v), v);
            const double lam = lambda1(principal_submatrix(full, complement_of(n, trial)));
            if (lam > best + kTieTol) {
                best = lam;
                best_node = v;
            }
        }
        chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best_node), best_node);
    }
    SelectionResult r;
    r.strategy = "greedy";
    r.l = l;
    r.pin_set = PinSet(n, std::move(chosen));
    r.lambda1 = best;
    r.lambda1_runs = {best};
    return r;
}

}  // namespace pinning
