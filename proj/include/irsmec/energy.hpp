#pragma once

#include <cstdint>
#include <optional>

#include "irsmec/types.hpp"

namespace irsmec {

// Per-slot energy bookkeeping. gain_j and consumption_j are always the exact
// sums of their components.
struct EnergyLedger {
    double harvested_j = 0.0;     // E_v
    double offload_saved_j = 0.0; // E_o
    double local_compute_j = 0.0; // E_lc
    double transmission_j = 0.0;  // E_tr
    double circuit_j = 0.0;       // E_ckt
    double gain_j = 0.0;          // E_g = E_v + E_o
    double consumption_j = 0.0;   // E_c = E_ckt + E_lc + E_tr
};

struct DeviceState {
    double battery_j = 0.0;
    double deadline_slack_s = 0.0;
};

// Non-linear harvesting: zero below the sensitivity threshold, efficiency-
// scaled and saturation-clamped above it, integrated over the energy slot.
// The threshold comparison is inclusive at p_rx == p_th.
double harvested_energy(double p_rx_w, double energy_slot_s, const HarvestModel& model);

// Cubic CPU energy xi * psi^3 * l^3 for computing l bits locally.
double local_compute_energy(std::int64_t bits, const EnergyCostModel& costs);

// Energy the device keeps by shipping l bits to the edge server; same cubic
// law as local computation.
double offload_saved_energy(std::int64_t bits, const EnergyCostModel& costs);

// Uplink cost of offloading. The per-bit model charges a constant per bit;
// the rate model charges device_tx_power * bits / rate and needs the slot's
// uplink rate. Throws NumericalError when the rate model is selected with a
// zero rate and bits > 0.
double transmission_energy(std::int64_t bits, const EnergyCostModel& costs,
                           std::optional<double> uplink_rate_bps = std::nullopt);

// Inputs distilled from one slot, after scenario switches are applied:
// harvesting off is expressed as received_power_w = 0 with harvest_enabled
// false, offloading off as offload_bits = 0.
struct SlotInputs {
    bool harvest_enabled = false;
    double received_power_w = 0.0;
    double energy_slot_s = 0.0;
    std::int64_t local_bits = 0;
    std::int64_t offload_bits = 0;
    std::optional<double> uplink_rate_bps; // rate model only
};

// Assembles the slot ledger; the component sums hold exactly.
EnergyLedger slot_ledger(const SlotInputs& inputs, const HarvestModel& harvest,
                         const EnergyCostModel& costs);

struct EnergyStepResult {
    double battery_j = 0.0;
    bool depleted = false; // the zero floor bound this step
};

// Battery recursion E' = E + E_g - E_c, floored at zero.
EnergyStepResult energy_step(double battery_j, const EnergyLedger& ledger);

} // namespace irsmec
