#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irsmec/energy.hpp"
#include "irsmec/types.hpp"

namespace irsmec {

// One simulated battery trajectory. energy_j[0] is the configured initial
// level; energy_j[t+1] follows from energy_j[t] and ledgers[t] through
// energy_step. depletion_slot is the first slot whose step bound the zero
// floor, if any.
struct Trajectory {
    std::vector<double> energy_j;      // horizon + 1 entries
    std::vector<EnergyLedger> ledgers; // horizon entries
    std::optional<int> depletion_slot;
};

struct RatioStats {
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Monte Carlo aggregate over iterations. Confidence bands are 95% normal
// approximations (mean +/- 1.96 s / sqrt(n)); a single iteration yields a
// zero-width band. The per-slot ledger means at index 0 are zero since no
// slot produced the initial level.
struct AggregateResult {
    std::vector<double> mean_energy_j; // horizon + 1 entries
    std::vector<double> ci_low_j;
    std::vector<double> ci_high_j;
    std::vector<double> mean_harvested_j;     // E_v per slot
    std::vector<double> mean_offload_saved_j; // E_o per slot
    std::vector<double> mean_consumption_j;   // E_c per slot
    std::uint32_t iterations = 0;
    std::uint64_t master_seed = 0;
    // Mean over iterations of (sum_t E_g) / (sum_t E_c); absent when any
    // iteration had a zero consumption sum (e.g. horizon 0).
    std::optional<RatioStats> gain_consumption_ratio;
};

struct ExecutionPolicy {
    enum class Mode { Serial, Parallel };
    Mode mode = Mode::Parallel;
    int max_workers = 0; // 0: OpenMP runtime default (OMP_NUM_THREADS)

    static ExecutionPolicy serial() { return {Mode::Serial, 0}; }
    static ExecutionPolicy parallel(int workers = 0) {
        return {Mode::Parallel, workers};
    }
};

// Simulates one trajectory. Deterministic in (config.master_seed,
// config.stream_id, iteration); no state is shared between iterations.
// Throws ConfigError when the config is invalid.
Trajectory simulate_trajectory(const ScenarioConfig& config, std::uint32_t iteration);

// Monte Carlo average over config.iterations trajectories. Trajectories run
// concurrently under the parallel policy; the reduction is performed in
// iteration order regardless of worker count, so the result is bit-identical
// for any policy and thread count.
AggregateResult monte_carlo(const ScenarioConfig& config,
                            const ExecutionPolicy& policy = {});

// Plain single-threaded reference implementation, kept as the comparison
// baseline for the parallel kernel. Produces bit-identical results to
// monte_carlo by construction.
AggregateResult monte_carlo_reference(const ScenarioConfig& config);

struct RatioPoint {
    std::int64_t l_bits = 0;
    RatioStats stats;
};

// Gain-to-consumption sweep: each point pins the task size to a single value
// and reports the mean per-iteration ratio. Throws NumericalError for an
// ill-posed ratio (zero consumption sum) and std::invalid_argument for an
// empty size list.
std::vector<RatioPoint> ratio_sweep(const ScenarioConfig& config,
                                    const std::vector<std::int64_t>& data_sizes,
                                    const ExecutionPolicy& policy = {});

} // namespace irsmec
