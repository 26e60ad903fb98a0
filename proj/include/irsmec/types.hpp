#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace irsmec {

// Units policy: everything inside the library is strict SI — Joules,
// seconds, Watts, meters, bits. mJoule/Kbit only appear at the IO boundary
// (CSV columns, chart labels).

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);

// Placement of the three nodes inside the vehicle. The bounding box spans
// [0, bounding_box.{x,y,z}] and models the vehicle interior.
struct VehicleGeometry {
    Vec3 ap_position{0.5, 1.5, 2.4};
    Vec3 irs_center{5.0, 0.0, 2.0};
    Vec3 device_position{3.0, 1.5, 1.0};
    Vec3 bounding_box{10.0, 3.0, 2.5};
};

struct LinkDistances {
    double ap_device_m = 0.0;
    double ap_irs_m = 0.0;
    double irs_device_m = 0.0;
};

// Euclidean distances between the node pairs. Throws std::invalid_argument
// on coincident points.
LinkDistances link_distances(const VehicleGeometry& geometry);

struct IrsPanel {
    int element_count = 64;
    double amplitude = 1.0; // reflection amplitude, in [0, 1]
    double phase_shift_rad = std::numbers::pi / 2.0;
    // Optional per-element phases; empty means the common phase_shift_rad
    // applies to every element. Accepted but never optimized.
    std::vector<double> per_element_phase_rad;
};

struct ChannelParams {
    double alpha_los = 2.4;  // AP <-> IRS pathloss exponent
    double alpha_nlos = 3.0; // AP <-> device and IRS <-> device exponent
    double reference_distance_m = 1.0;
    // Freeze the AP->IRS small-scale coefficients to 1 (sensitivity studies).
    bool freeze_ap_irs_fading = false;
};

struct TimeFrame {
    double tti_s = 1.0e-3;        // slot length tau
    double energy_fraction = 0.25; // gamma: share of the slot spent on energy signal
    int horizon_slots = 100;
};

struct TimeSplit {
    double energy_slot_s = 0.0;      // gamma * tau
    double information_slot_s = 0.0; // (1 - gamma) * tau
};

// Splits the TTI so that the two parts always sum to tti_s exactly.
TimeSplit time_split(const TimeFrame& time);

struct HarvestModel {
    double p_th_w = 1.0e-5;       // sensitivity threshold on received power
    double p_max_w = 0.04;        // saturation limit on harvested power
    double rf_dc_efficiency = 0.8;
};

enum class TransmissionModel {
    PerBit, // energy = joules-per-bit * offloaded bits
    Rate,   // energy = device tx power * (offloaded bits / uplink rate)
};

struct EnergyCostModel {
    double cpu_capacitance = 1.0e-28;        // Joule / cycle^3
    double cycles_per_bit = 1.0e3;
    double circuit_energy_j = 2.0e-6;        // per TTI
    double uplink_energy_per_bit_j = 5.0e-11;
    double device_tx_power_w = 0.01;          // rate-model only
    double uplink_bandwidth_hz = 1.0e6;       // rate-model only
    double noise_power_w = 1.0e-12;           // rate-model only
    TransmissionModel transmission_model = TransmissionModel::PerBit;
};

struct TaskModel {
    std::int64_t l_min_bits = 40000;
    std::int64_t l_max_bits = 50000;
    double offload_fraction = 0.75; // mu
};

// Battery/deadline scheduling knobs. The decision grid only steers the
// simulation when adaptive_mu is set; the default matches fixed-mu runs.
struct SchedulerPolicy {
    bool adaptive_mu = false;
    double e_low_j = 3.0e-4;          // battery threshold
    double z_tight_s = 1.0e-2;        // deadline-slack threshold (10 default TTIs)
    double deadline_slack_s = 1.0e-2; // device slack fed to the grid
};

enum class ScenarioKind {
    Baseline,  // no harvesting, no offloading
    WetOnly,   // harvesting without IRS, no offloading
    MecOnly,   // offloading only
    IrsWet,    // IRS-aided harvesting, no offloading
    IrsMecWet, // IRS-aided harvesting plus offloading
    MecWet,    // harvesting without IRS plus offloading
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

// Feature switches implied by a scenario kind.
struct ScenarioSwitches {
    bool harvest = false;
    bool offload = false;
    bool irs = false;
};

ScenarioSwitches scenario_switches(ScenarioKind kind);

struct ScenarioConfig {
    ScenarioKind scenario_kind = ScenarioKind::IrsMecWet;
    VehicleGeometry geometry;
    IrsPanel irs;
    ChannelParams channel;
    TimeFrame time;
    HarvestModel harvest;
    EnergyCostModel costs;
    TaskModel task;
    SchedulerPolicy scheduler;
    double ap_tx_power_w = 1.0;
    double initial_energy_j = 1.0e-3;
    std::uint32_t iterations = 1000;
    std::uint64_t master_seed = 1;
    // Randomness domain. Configs sharing (master_seed, stream_id) are driven
    // by common random numbers regardless of scenario_kind.
    std::uint32_t stream_id = 0;
};

} // namespace irsmec
