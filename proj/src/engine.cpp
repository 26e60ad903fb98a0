#include "irsmec/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irsmec/channel.hpp"
#include "irsmec/offload.hpp"
#include "irsmec/rng.hpp"
#include "irsmec/validate.hpp"

namespace irsmec {

namespace {

constexpr double kZ95 = 1.96;

// Everything derivable from the config once per run.
struct SimPlan {
    ScenarioConfig config;
    ScenarioSwitches switches;
    LinkPathloss pathloss;
    TimeSplit split;
    IrsPanel panel;     // element_count forced to 0 when the scenario has no IRS
    double mu = 0.0;    // 0 unless the scenario offloads
    bool need_channel = false;
    bool rate_model = false;
};

SimPlan make_plan(const ScenarioConfig& config) {
    SimPlan plan;
    plan.config = validated(config);
    plan.switches = scenario_switches(config.scenario_kind);
    plan.pathloss = link_pathloss(config.geometry, config.channel);
    plan.split = time_split(config.time);
    plan.panel = config.irs;
    if (!plan.switches.irs) {
        plan.panel.element_count = 0;
        plan.panel.per_element_phase_rad.clear();
    }
    plan.mu = plan.switches.offload ? config.task.offload_fraction : 0.0;
    plan.rate_model =
        config.costs.transmission_model == TransmissionModel::Rate;
    plan.need_channel =
        plan.switches.harvest || (plan.switches.offload && plan.rate_model);
    return plan;
}

Trajectory run_trajectory(const SimPlan& plan, std::uint32_t iteration) {
    const ScenarioConfig& cfg = plan.config;
    const int horizon = cfg.time.horizon_slots;

    Trajectory traj;
    traj.energy_j.reserve(static_cast<std::size_t>(horizon) + 1);
    traj.ledgers.reserve(static_cast<std::size_t>(horizon));
    traj.energy_j.push_back(cfg.initial_energy_j);

    double battery = cfg.initial_energy_j;
    for (int slot = 0; slot < horizon; ++slot) {
        const auto slot_u = static_cast<std::uint32_t>(slot);

        RngStream task_stream = derive_substream(
            cfg.master_seed, cfg.stream_id, iteration, slot_u, StreamRole::TaskSize);
        const std::int64_t task_bits = draw_task_size(cfg.task, task_stream);

        double mu = plan.mu;
        if (cfg.scheduler.adaptive_mu && plan.switches.offload) {
            const GridThresholds thresholds{cfg.scheduler.e_low_j,
                                            cfg.scheduler.z_tight_s};
            const ResourceClass cls = decision_grid_classify(
                battery, cfg.scheduler.deadline_slack_s, thresholds);
            mu = cls.compute_mode == ComputeMode::Offload ? plan.mu : 0.0;
        }
        const TaskDraw split = split_task(task_bits, mu);

        double gain = 0.0;
        if (plan.need_channel) {
            RngStream direct = derive_substream(cfg.master_seed, cfg.stream_id,
                                                iteration, slot_u,
                                                StreamRole::DirectFading);
            RngStream ap_irs = derive_substream(cfg.master_seed, cfg.stream_id,
                                                iteration, slot_u,
                                                StreamRole::CascadeApIrs);
            RngStream irs_dev = derive_substream(cfg.master_seed, cfg.stream_id,
                                                 iteration, slot_u,
                                                 StreamRole::CascadeIrsDevice);
            ChannelRealization realization = draw_realization(
                plan.panel.element_count, cfg.channel.freeze_ap_irs_fading,
                direct, ap_irs, irs_dev);
            gain = effective_channel(realization, plan.panel, plan.pathloss);
        }

        SlotInputs inputs;
        inputs.harvest_enabled = plan.switches.harvest;
        inputs.received_power_w = received_power(cfg.ap_tx_power_w, gain);
        inputs.energy_slot_s = plan.split.energy_slot_s;
        inputs.local_bits = split.local_bits;
        inputs.offload_bits = split.offload_bits;
        if (plan.rate_model && split.offload_bits > 0) {
            inputs.uplink_rate_bps =
                uplink_rate(cfg.costs.device_tx_power_w, gain,
                            cfg.costs.uplink_bandwidth_hz, cfg.costs.noise_power_w);
        }

        const EnergyLedger ledger = slot_ledger(inputs, cfg.harvest, cfg.costs);
        const EnergyStepResult step = energy_step(battery, ledger);
        if (step.depleted && !traj.depletion_slot.has_value()) {
            traj.depletion_slot = slot;
        }
        battery = step.battery_j;
        traj.energy_j.push_back(battery);
        traj.ledgers.push_back(ledger);
    }
    return traj;
}

// Order-dependent reduction shared by the parallel kernel and the serial
// reference. add() must be called in iteration order; every floating-point
// accumulation happens here, which is what makes the two paths bit-identical.
class TrajectoryAccumulator {
  public:
    explicit TrajectoryAccumulator(int horizon)
        : horizon_(horizon),
          sum_energy_(static_cast<std::size_t>(horizon) + 1, 0.0),
          sumsq_energy_(static_cast<std::size_t>(horizon) + 1, 0.0),
          sum_harvested_(static_cast<std::size_t>(horizon) + 1, 0.0),
          sum_offload_saved_(static_cast<std::size_t>(horizon) + 1, 0.0),
          sum_consumption_(static_cast<std::size_t>(horizon) + 1, 0.0) {}

    void add(const Trajectory& traj) {
        for (std::size_t t = 0; t < traj.energy_j.size(); ++t) {
            const double e = traj.energy_j[t];
            sum_energy_[t] += e;
            sumsq_energy_[t] += e * e;
        }
        double gain_total = 0.0;
        double consumption_total = 0.0;
        for (std::size_t s = 0; s < traj.ledgers.size(); ++s) {
            const EnergyLedger& ledger = traj.ledgers[s];
            sum_harvested_[s + 1] += ledger.harvested_j;
            sum_offload_saved_[s + 1] += ledger.offload_saved_j;
            sum_consumption_[s + 1] += ledger.consumption_j;
            gain_total += ledger.gain_j;
            consumption_total += ledger.consumption_j;
        }
        if (consumption_total > 0.0) {
            const double ratio = gain_total / consumption_total;
            ratio_sum_ += ratio;
            ratio_sumsq_ += ratio * ratio;
        } else {
            ratio_undefined_ = true;
        }
        ++count_;
    }

    AggregateResult finalize(std::uint64_t master_seed) const {
        const auto n = static_cast<double>(count_);
        AggregateResult out;
        out.iterations = static_cast<std::uint32_t>(count_);
        out.master_seed = master_seed;
        const std::size_t len = sum_energy_.size();
        out.mean_energy_j.resize(len);
        out.ci_low_j.resize(len);
        out.ci_high_j.resize(len);
        out.mean_harvested_j.resize(len);
        out.mean_offload_saved_j.resize(len);
        out.mean_consumption_j.resize(len);
        for (std::size_t t = 0; t < len; ++t) {
            const double mean = sum_energy_[t] / n;
            const double half = half_width(sum_energy_[t], sumsq_energy_[t]);
            out.mean_energy_j[t] = mean;
            out.ci_low_j[t] = mean - half;
            out.ci_high_j[t] = mean + half;
            out.mean_harvested_j[t] = sum_harvested_[t] / n;
            out.mean_offload_saved_j[t] = sum_offload_saved_[t] / n;
            out.mean_consumption_j[t] = sum_consumption_[t] / n;
        }
        if (!ratio_undefined_ && count_ > 0) {
            RatioStats stats;
            stats.mean = ratio_sum_ / n;
            const double half = half_width(ratio_sum_, ratio_sumsq_);
            stats.ci_low = stats.mean - half;
            stats.ci_high = stats.mean + half;
            out.gain_consumption_ratio = stats;
        }
        return out;
    }

  private:
    double half_width(double sum, double sumsq) const {
        if (count_ < 2) {
            return 0.0;
        }
        const auto n = static_cast<double>(count_);
        const double mean = sum / n;
        const double variance = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
        return kZ95 * std::sqrt(variance / n);
    }

    int horizon_;
    std::vector<double> sum_energy_;
    std::vector<double> sumsq_energy_;
    std::vector<double> sum_harvested_;
    std::vector<double> sum_offload_saved_;
    std::vector<double> sum_consumption_;
    double ratio_sum_ = 0.0;
    double ratio_sumsq_ = 0.0;
    bool ratio_undefined_ = false;
    long count_ = 0;
};

// Iterations per parallel batch. Fixed so that reduction order and memory
// footprint stay independent of the worker count.
constexpr std::uint32_t kBatchSize = 1024;

} // namespace

Trajectory simulate_trajectory(const ScenarioConfig& config, std::uint32_t iteration) {
    return run_trajectory(make_plan(config), iteration);
}

AggregateResult monte_carlo(const ScenarioConfig& config, const ExecutionPolicy& policy) {
    const SimPlan plan = make_plan(config);
    const std::uint32_t iterations = config.iterations;
    const bool parallel = policy.mode == ExecutionPolicy::Mode::Parallel;

#ifdef _OPENMP
    const int threads = policy.max_workers > 0 ? policy.max_workers
                                               : omp_get_max_threads();
#else
    const int threads = 1;
    (void)threads;
#endif

    TrajectoryAccumulator accumulator(config.time.horizon_slots);
    std::vector<Trajectory> batch(std::min(kBatchSize, iterations));

    for (std::uint32_t start = 0; start < iterations; start += kBatchSize) {
        const auto count =
            static_cast<int>(std::min(kBatchSize, iterations - start));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (parallel)
#endif
        for (int i = 0; i < count; ++i) {
            batch[static_cast<std::size_t>(i)] =
                run_trajectory(plan, start + static_cast<std::uint32_t>(i));
        }

        for (int i = 0; i < count; ++i) {
            accumulator.add(batch[static_cast<std::size_t>(i)]);
        }
    }
    return accumulator.finalize(config.master_seed);
}

AggregateResult monte_carlo_reference(const ScenarioConfig& config) {
    const SimPlan plan = make_plan(config);
    TrajectoryAccumulator accumulator(config.time.horizon_slots);
    for (std::uint32_t iteration = 0; iteration < config.iterations; ++iteration) {
        accumulator.add(run_trajectory(plan, iteration));
    }
    return accumulator.finalize(config.master_seed);
}

std::vector<RatioPoint> ratio_sweep(const ScenarioConfig& config,
                                    const std::vector<std::int64_t>& data_sizes,
                                    const ExecutionPolicy& policy) {
    if (data_sizes.empty()) {
        throw std::invalid_argument("ratio_sweep: empty data size list");
    }
    std::vector<RatioPoint> points;
    points.reserve(data_sizes.size());
    for (const std::int64_t l : data_sizes) {
        ScenarioConfig point_config = config;
        point_config.task.l_min_bits = l;
        point_config.task.l_max_bits = l;
        const AggregateResult result = monte_carlo(point_config, policy);
        if (!result.gain_consumption_ratio.has_value()) {
            throw NumericalError(
                "ratio_sweep: consumption sum is zero at l = " + std::to_string(l) +
                " bits, gain-to-consumption ratio is ill-posed");
        }
        points.push_back({l, *result.gain_consumption_ratio});
    }
    return points;
}

} // namespace irsmec
