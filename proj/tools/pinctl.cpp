// pinctl: generate graphs, analyze pin sets, select pins, sweep strategies and
// simulate pinned synchronization.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 enumeration budget refusal.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pinning/bounds.hpp"
#include "pinning/edge_list.hpp"
#include "pinning/error.hpp"
#include "pinning/generators.hpp"
#include "pinning/serialize.hpp"
#include "pinning/strategies.hpp"
#include "pinning/sweep.hpp"
#include "pinning/sync_sim.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kData = 2;
constexpr int kBudget = 3;

// Raised for flag combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_id_list(const std::string& text) {
    std::vector<std::size_t> ids;
    std::string cleaned;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        cleaned += line + ' ';
    }
    std::istringstream is(cleaned);
    for (std::string tok; is >> tok;) {
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw pinning::Error("bad node id '" + tok + "' in pin list");
        ids.push_back(std::stoull(tok));
    }
    return ids;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    for (std::string tok; std::getline(is, tok, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw UsageError("bad number '" + tok + "' in list");
        }
    }
    return out;
}

struct PinFlags {
    std::string pins;
    std::string pins_file;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--pins", pins, "Comma-separated 0-based node ids");
        auto* b = cmd->add_option("--pins-file", pins_file, "File of node ids (whitespace or comma separated)");
        a->excludes(b);
    }

    pinning::PinSet resolve(const pinning::Graph& g) const {
        std::string text = pins;
        if (!pins_file.empty()) {
            std::ifstream in(pins_file);
            if (!in) throw pinning::Error("cannot open " + pins_file);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        if (pins.empty() && pins_file.empty()) throw UsageError("one of --pins or --pins-file is required");
        return pinning::PinSet(g.size(), parse_id_list(text));
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pinning::Error("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grounded-Laplacian analysis and optimization of pinning control"};
    app.require_subcommand(1);

    // gen
    pinning::GenSpec gen;
    std::string gen_family;
    std::string gen_out;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a graph as an edge list");
    cmd_gen->add_option("--family", gen_family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"star", "double_star", "complete", "path", "ba", "nw", "erdos_renyi"}));
    cmd_gen->add_option("--n", gen.n, "Node count");
    cmd_gen->add_option("--k", gen.k, "Leaves per hub (double_star)");
    cmd_gen->add_option("--m0", gen.m0, "Seed clique size (ba)");
    cmd_gen->add_option("--m", gen.m, "Edges per new node (ba)");
    cmd_gen->add_option("--K,--ring-k", gen.ring_k, "Ring lattice degree (nw)");
    cmd_gen->add_option("--p", gen.p, "Shortcut (nw) or edge (erdos_renyi) probability");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed");
    cmd_gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    // analyze
    std::string an_graph;
    PinFlags an_pins;
    std::optional<double> an_alpha;
    auto* cmd_an = app.add_subcommand("analyze", "Report lambda1 and all bounds for a pin set");
    cmd_an->add_option("--graph", an_graph, "Edge-list file")->required();
    an_pins.attach(cmd_an);
    cmd_an->add_option("--alpha-over-c", an_alpha, "Criterion threshold alpha/c");

    // select
    std::string sel_graph;
    std::string sel_strategy;
    pinning::StrategyConfig sel_cfg;
    std::optional<std::size_t> sel_runs;
    std::uint64_t sel_budget = pinning::kDefaultEnumerationBudget;
    auto* cmd_sel = app.add_subcommand("select", "Choose a pin set with one strategy");
    cmd_sel->add_option("--graph", sel_graph, "Edge-list file")->required();
    cmd_sel->add_option("--strategy", sel_strategy, "Selection strategy")
        ->required()
        ->check(CLI::IsMember({"degree_mix", "betweenness", "dominating", "brute_force", "greedy"}));
    cmd_sel->add_option("--l", sel_cfg.l, "Pin count");
    cmd_sel->add_option("--q", sel_cfg.q, "High-degree fraction (degree_mix)")->check(CLI::Range(0.0, 1.0));
    cmd_sel->add_option("--runs", sel_runs, "Averaging runs (degree_mix)");
    cmd_sel->add_option("--seed", sel_cfg.seed, "RNG seed");
    cmd_sel->add_option("--budget", sel_budget, "Enumeration budget (brute_force)");

    // sweep
    std::string sw_graph;
    std::string sw_strategy = "degree_mix";
    std::string sw_qs = "1";
    std::string sw_range;
    std::string sw_out;
    pinning::SweepOptions sw;
    auto* cmd_sw = app.add_subcommand("sweep", "Sweep lambda1 and bounds over a range of pin counts");
    cmd_sw->add_option("--graph", sw_graph, "Edge-list file")->required();
    cmd_sw->add_option("--strategy", sw_strategy, "degree_mix|betweenness|greedy|brute_force")
        ->check(CLI::IsMember({"degree_mix", "betweenness", "greedy", "brute_force"}));
    cmd_sw->add_option("--q", sw_qs, "Comma-separated q values (degree_mix)");
    cmd_sw->add_option("--l-range", sw_range, "First:last pin count, inclusive")->required();
    cmd_sw->add_option("--step", sw.step, "Pin count step");
    cmd_sw->add_option("--runs", sw.runs, "Runs per cell (degree_mix)");
    cmd_sw->add_option("--seed", sw.seed, "RNG seed");
    cmd_sw->add_option("--budget", sw.budget, "Enumeration budget");
    cmd_sw->add_option("-o,--out", sw_out, "Output CSV (default stdout)");

    // simulate
    std::string sim_graph;
    PinFlags sim_pins;
    std::string sim_dyn = "linear";
    std::string sim_ctrl = "linear";
    double sim_a = 1.0;
    pinning::SimConfig sim_cfg;
    double sim_d = 1.0;
    double sim_h = 1.0;
    double sim_d0 = 0.0;
    std::string sim_csv;
    auto* cmd_sim = app.add_subcommand("simulate", "Integrate the pinned network and report convergence");
    cmd_sim->set_help_flag("--help", "Print this help message and exit");  // frees -h for the adaptive rate
    cmd_sim->add_option("--graph", sim_graph, "Edge-list file")->required();
    sim_pins.attach(cmd_sim);
    cmd_sim->add_option("--dynamics", sim_dyn, "linear|chua")->check(CLI::IsMember({"linear", "chua"}));
    cmd_sim->add_option("--a", sim_a, "Growth rate of linear node dynamics");
    cmd_sim->add_option("--controller", sim_ctrl, "linear|adaptive")->check(CLI::IsMember({"linear", "adaptive"}));
    cmd_sim->add_option("--d", sim_d, "Linear feedback gain");
    cmd_sim->add_option("--h", sim_h, "Adaptive rate");
    cmd_sim->add_option("--d0", sim_d0, "Initial adaptive gain");
    cmd_sim->add_option("--c", sim_cfg.c, "Coupling strength");
    cmd_sim->add_option("--dt", sim_cfg.dt, "RK4 step");
    cmd_sim->add_option("--T", sim_cfg.t_end, "Horizon");
    cmd_sim->add_option("--seed", sim_cfg.seed, "Initial-condition seed");
    cmd_sim->add_option("--record-every", sim_cfg.record_every, "Steps between CSV rows");
    cmd_sim->add_option("--csv", sim_csv, "Write the time series CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*cmd_gen) {
            gen.family = pinning::parse_family(gen_family);
            pinning::Graph g;
            try {
                g = pinning::generate(gen);
            } catch (const pinning::Error& e) {
                throw UsageError(e.what());
            }
            std::ostringstream os;
            pinning::write_edge_list(os, g);
            write_output(gen_out, os.str());
        } else if (*cmd_an) {
            const auto g = pinning::load_edge_list(an_graph);
            const auto s = an_pins.resolve(g);
            std::cout << pinning::to_json(pinning::bound_report(g, s, an_alpha)).dump(2) << '\n';
        } else if (*cmd_sel) {
            const auto g = pinning::load_edge_list(sel_graph);
            pinning::SelectionResult r;
            if (sel_strategy == "degree_mix") {
                sel_cfg.runs = sel_runs.value_or(5);
                r = pinning::select_degree_mix(g, sel_cfg);
            } else if (sel_strategy == "betweenness") {
                r = pinning::select_betweenness(g, sel_cfg.l);
            } else if (sel_strategy == "dominating") {
                r = pinning::dominating_partition(g, sel_cfg.seed);
            } else if (sel_strategy == "brute_force") {
                r = pinning::brute_force_max_lambda1(g, sel_cfg.l, sel_budget);
            } else {
                r = pinning::greedy_max_lambda1(g, sel_cfg.l);
            }
            std::cout << pinning::to_json(r).dump(2) << '\n';
        } else if (*cmd_sw) {
            const auto colon = sw_range.find(':');
            try {
                if (colon == std::string::npos) {
                    sw.l_first = sw.l_last = std::stoull(sw_range);
                } else {
                    sw.l_first = std::stoull(sw_range.substr(0, colon));
                    sw.l_last = std::stoull(sw_range.substr(colon + 1));
                }
            } catch (const std::logic_error&) {
                throw UsageError("--l-range expects first:last, got '" + sw_range + "'");
            }
            if (sw.l_first > sw.l_last || sw.l_first == 0) throw UsageError("--l-range " + sw_range + " is empty");
            sw.strategy = pinning::parse_sweep_strategy(sw_strategy);
            sw.qs = parse_double_list(sw_qs);
            for (double q : sw.qs)
                if (!(q >= 0.0 && q <= 1.0)) throw UsageError("q values must lie in [0,1]");
            const auto g = pinning::load_edge_list(sw_graph);
            std::ostringstream os;
            pinning::write_sweep_csv(os, pinning::run_sweep(g, sw));
            write_output(sw_out, os.str());
        } else if (*cmd_sim) {
            const auto g = pinning::load_edge_list(sim_graph);
            const auto s = sim_pins.resolve(g);
            const auto dyn = sim_dyn == "chua" ? pinning::NodeDynamics::chua() : pinning::NodeDynamics::linear_unstable(sim_a);
            if (sim_ctrl == "adaptive")
                sim_cfg.controller = pinning::AdaptiveController{sim_h, sim_d0};
            else
                sim_cfg.controller = pinning::LinearController{sim_d};
            const auto r = pinning::simulate(g, s, dyn, sim_cfg);
            if (!sim_csv.empty()) {
                std::ostringstream os;
                pinning::write_sim_csv(os, r);
                write_output(sim_csv, os.str());
            }
            std::cout << pinning::summary_json(r).dump(2) << '\n';
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return kUsage;
    } catch (const pinning::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const pinning::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    }
    return 0;
}
