#include "pinning/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "pinning/bounds.hpp"
#include "pinning/error.hpp"
#include "pinning/spectra.hpp"

namespace pinning {

namespace {

// The optional exhaustive column costs C(N,l) eigensolves per row.
constexpr std::size_t kMaxNodesForMaxColumn = 24;

struct RunStats {
    std::vector<double> lambda1;
    double kmin = 0.0, avg_w = 0.0, min_w = 0.0;

    void add(const Graph& g, const PinSet& s) {
        lambda1.push_back(pinned_lambda1(g, s));
        kmin += upper_by_min_degree(g, s);
        const auto bb = boundary_bounds(g, s);
        avg_w += bb.upper;
        min_w += bb.lower;
    }
};

SweepRow make_row(std::size_t l, std::optional<double> q, const RunStats& st, double upper_spectrum) {
    SweepRow row;
    row.l = l;
    row.q = q;
    const auto k = static_cast<double>(st.lambda1.size());
    double sum = 0.0;
    for (double v : st.lambda1) sum += v;
    row.lambda1_mean = sum / k;
    double var = 0.0;
    for (double v : st.lambda1) var += (v - row.lambda1_mean) * (v - row.lambda1_mean);
    row.lambda1_std = std::sqrt(var / k);
    row.upper_spectrum = upper_spectrum;
    row.upper_kmin = st.kmin / k;
    row.upper_avg_boundary = st.avg_w / k;
    row.lower_min_boundary = st.min_w / k;
    return row;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

SweepStrategy parse_sweep_strategy(const std::string& name) {
    if (name == "degree_mix") return SweepStrategy::degree_mix;
    if (name == "betweenness") return SweepStrategy::betweenness;
    if (name == "greedy") return SweepStrategy::greedy;
    if (name == "brute_force") return SweepStrategy::brute_force;
    throw Error("unknown sweep strategy '" + name + "'");
}

std::string sweep_strategy_name(SweepStrategy s) {
    switch (s) {
        case SweepStrategy::degree_mix: return "degree_mix";
        case SweepStrategy::betweenness: return "betweenness";
        case SweepStrategy::greedy: return "greedy";
        case SweepStrategy::brute_force: return "brute_force";
    }
    return "unknown";
}

SweepResult run_sweep(const Graph& g, const SweepOptions& opt) {
    if (opt.step == 0) throw Error("sweep step must be positive");
    if (opt.l_first < 1 || opt.l_first > opt.l_last) throw Error("empty l range");
    if (opt.l_last + 1 > g.size())
        throw Error("l range ends at " + std::to_string(opt.l_last) + " but at most N-1 = " +
                    std::to_string(g.size() - 1) + " nodes can be pinned");
    if (opt.runs < 1) throw Error("runs must be at least 1");
    if (opt.strategy == SweepStrategy::degree_mix && opt.qs.empty()) throw Error("degree_mix sweep needs q values");

    std::vector<std::size_t> ls;
    for (std::size_t l = opt.l_first; l <= opt.l_last; l += opt.step) ls.push_back(l);

    const bool affordable = std::all_of(ls.begin(), ls.end(),
                                        [&](std::size_t l) { return binomial(g.size(), l) <= opt.budget; });
    const bool max_column = affordable && g.size() <= kMaxNodesForMaxColumn;
    if (opt.strategy == SweepStrategy::brute_force && !affordable) {
        for (std::size_t l : ls)
            if (const auto c = binomial(g.size(), l); c > opt.budget) throw BudgetExceeded(c, opt.budget);
    }

    const Spectrum spec = eig_sym(laplacian(g));
    SweepResult out;
    out.strategy = sweep_strategy_name(opt.strategy);
    out.n = g.size();
    out.seed = opt.seed;
    out.runs = opt.strategy == SweepStrategy::degree_mix ? opt.runs : 1;

    auto qs = opt.qs;
    std::sort(qs.begin(), qs.end());
    for (std::size_t l : ls) {
        const double upper = upper_by_spectrum(spec, l);
        std::optional<double> best;
        if (max_column) best = brute_force_max_lambda1(g, l, opt.budget).lambda1;

        auto push = [&](std::optional<double> q, const RunStats& st) {
            auto row = make_row(l, q, st, upper);
            row.lambda1_max = best;
            out.rows.push_back(row);
        };
        switch (opt.strategy) {
            case SweepStrategy::degree_mix:
                for (double q : qs) {
                    RunStats st;
                    for (std::size_t run = 0; run < opt.runs; ++run)
                        st.add(g, degree_mix_draw(g, l, q, opt.seed, run));
                    push(q, st);
                }
                break;
            case SweepStrategy::betweenness: {
                RunStats st;
                st.add(g, select_betweenness(g, l).pin_set);
                push(std::nullopt, st);
                break;
            }
            case SweepStrategy::greedy: {
                RunStats st;
                st.add(g, greedy_max_lambda1(g, l).pin_set);
                push(std::nullopt, st);
                break;
            }
            case SweepStrategy::brute_force: {
                RunStats st;
                st.add(g, brute_force_max_lambda1(g, l, opt.budget).pin_set);
                push(std::nullopt, st);
                break;
            }
        }
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
    const bool with_max =
        !r.rows.empty() && std::all_of(r.rows.begin(), r.rows.end(), [](const SweepRow& row) { return row.lambda1_max.has_value(); });
    out << "# strategy=" << r.strategy << " n=" << r.n << " seed=" << r.seed << " runs=" << r.runs << '\n';
    out << "l,q,lambda1_mean,lambda1_std,upper_spectrum,upper_kmin,upper_avg_boundary,lower_min_boundary";
    if (with_max) out << ",lambda1_max";
    out << '\n';
    for (const auto& row : r.rows) {
        out << row.l << ',' << (row.q ? format_double(*row.q) : "") << ',' << format_double(row.lambda1_mean) << ','
            << format_double(row.lambda1_std) << ',' << format_double(row.upper_spectrum) << ','
            << format_double(row.upper_kmin) << ',' << format_double(row.upper_avg_boundary) << ','
            << format_double(row.lower_min_boundary);
        if (with_max) out << ',' << format_double(*row.lambda1_max);
        out << '\n';
    }
}

SweepResult read_sweep_csv(std::istream& in) {
    SweepResult r;
    std::string line;
    bool header_seen = false;
    bool with_max = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream meta(line.substr(1));
            for (std::string kv; meta >> kv;) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                const auto key = kv.substr(0, eq);
                const auto val = kv.substr(eq + 1);
                if (key == "strategy") r.strategy = val;
                else if (key == "n") r.n = std::stoull(val);
                else if (key == "seed") r.seed = std::stoull(val);
                else if (key == "runs") r.runs = std::stoull(val);
            }
            continue;
        }
        const auto cells = split_csv(line);
        if (!header_seen) {
            if (cells.size() < 8 || cells[0] != "l") throw Error("line " + std::to_string(lineno) + ": bad sweep header");
            with_max = cells.size() == 9;
            header_seen = true;
            continue;
        }
        if (cells.size() != (with_max ? 9u : 8u))
            throw Error("line " + std::to_string(lineno) + ": expected " + std::to_string(with_max ? 9 : 8) + " columns");
        try {
            SweepRow row;
            row.l = std::stoull(cells[0]);
            if (!cells[1].empty()) row.q = std::stod(cells[1]);
            row.lambda1_mean = std::stod(cells[2]);
            row.lambda1_std = std::stod(cells[3]);
            row.upper_spectrum = std::stod(cells[4]);
            row.upper_kmin = std::stod(cells[5]);
            row.upper_avg_boundary = std::stod(cells[6]);
            row.lower_min_boundary = std::stod(cells[7]);
            if (with_max) row.lambda1_max = std::stod(cells[8]);
            r.rows.push_back(row);
        } catch (const std::logic_error&) {
            throw Error("line " + std::to_string(lineno) + ": malformed number");
        }
    }
    if (!header_seen) throw Error("sweep CSV has no header");
    return r;
}

}  // namespace pinning
