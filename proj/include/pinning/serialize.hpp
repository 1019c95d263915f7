#pragma once

#include "json.hpp"

#include "pinning/bounds.hpp"
#include "pinning/strategies.hpp"
#include "pinning/sync_sim.hpp"

namespace pinning {

// Non-finite numbers become JSON null.

/// Flat object: lambda1, upper_spectrum, upper_kmin, upper_avg_boundary,
/// lower_min_boundary, upper_single_pin, alpha_over_c, satisfied.
nlohmann::ordered_json to_json(const BoundReport& r);

/// {strategy, l, q?, seed, pin_set, lambda1, lambda1_runs}
nlohmann::ordered_json to_json(const SelectionResult& r);

/// {converged, final_error, blowup_time?}
nlohmann::ordered_json summary_json(const SimResult& r);

}  // namespace pinning
