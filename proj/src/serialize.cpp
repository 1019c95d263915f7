#include "pinning/serialize.hpp"

#include <cmath>

namespace pinning {

namespace {

nlohmann::ordered_json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

template <class T>
nlohmann::ordered_json optional_value(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_floating_point_v<T>)
        return number(*v);
    else
        return *v;
}

}  // namespace

nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["lambda1"] = number(r.lambda1);
    j["upper_spectrum"] = number(r.upper_spectrum);
    j["upper_kmin"] = number(r.upper_kmin);
    j["upper_avg_boundary"] = number(r.upper_avg_boundary);
    j["lower_min_boundary"] = number(r.lower_min_boundary);
    j["upper_single_pin"] = optional_value(r.upper_single_pin);
    j["alpha_over_c"] = optional_value(r.alpha_over_c);
    j["satisfied"] = optional_value(r.satisfied);
    return j;
}

nlohmann::ordered_json to_json(const SelectionResult& r) {
    nlohmann::ordered_json j;
    j["strategy"] = r.strategy;
    j["l"] = r.l;
    if (r.q) j["q"] = *r.q;
    j["seed"] = r.seed;
    j["pin_set"] = r.pin_set.ids();
    j["lambda1"] = number(r.lambda1);
    auto runs = nlohmann::ordered_json::array();
    for (double v : r.lambda1_runs) runs.push_back(number(v));
    j["lambda1_runs"] = runs;
    return j;
}

nlohmann::ordered_json summary_json(const SimResult& r) {
    nlohmann::ordered_json j;
    j["converged"] = r.converged;
    j["final_error"] = number(r.final_error);
    if (r.blowup_time) j["blowup_time"] = *r.blowup_time;
    return j;
}

}  // namespace pinning
