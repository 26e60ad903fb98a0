#include "irsmec/energy.hpp"

#include <algorithm>

#include "irsmec/errors.hpp"

namespace irsmec {

namespace {

double cubic_cpu_energy(std::int64_t bits, const EnergyCostModel& costs) {
    const double l = static_cast<double>(bits);
    const double psi = costs.cycles_per_bit;
    return costs.cpu_capacitance * (psi * psi * psi) * (l * l * l);
}

} // namespace

double harvested_energy(double p_rx_w, double energy_slot_s, const HarvestModel& model) {
    if (p_rx_w < model.p_th_w) {
        return 0.0;
    }
    const double harvested_power =
        std::min(model.rf_dc_efficiency * p_rx_w, model.p_max_w);
    return harvested_power * energy_slot_s;
}

double local_compute_energy(std::int64_t bits, const EnergyCostModel& costs) {
    return cubic_cpu_energy(bits, costs);
}

double offload_saved_energy(std::int64_t bits, const EnergyCostModel& costs) {
    return cubic_cpu_energy(bits, costs);
}

double transmission_energy(std::int64_t bits, const EnergyCostModel& costs,
                           std::optional<double> uplink_rate_bps) {
    if (bits == 0) {
        return 0.0;
    }
    if (costs.transmission_model == TransmissionModel::PerBit) {
        return costs.uplink_energy_per_bit_j * static_cast<double>(bits);
    }
    if (!uplink_rate_bps.has_value() || !(*uplink_rate_bps > 0.0)) {
        throw NumericalError(
            "transmission_energy: rate model with zero uplink rate, task "
            "cannot be offloaded");
    }
    return costs.device_tx_power_w * static_cast<double>(bits) / *uplink_rate_bps;
}

EnergyLedger slot_ledger(const SlotInputs& inputs, const HarvestModel& harvest,
                         const EnergyCostModel& costs) {
    EnergyLedger ledger;
    if (inputs.harvest_enabled) {
        ledger.harvested_j =
            harvested_energy(inputs.received_power_w, inputs.energy_slot_s, harvest);
    }
    ledger.offload_saved_j = inputs.offload_bits > 0
                                 ? offload_saved_energy(inputs.offload_bits, costs)
                                 : 0.0;
    ledger.local_compute_j = local_compute_energy(inputs.local_bits, costs);
    ledger.transmission_j =
        transmission_energy(inputs.offload_bits, costs, inputs.uplink_rate_bps);
    ledger.circuit_j = costs.circuit_energy_j;
    ledger.gain_j = ledger.harvested_j + ledger.offload_saved_j;
    ledger.consumption_j =
        ledger.circuit_j + ledger.local_compute_j + ledger.transmission_j;
    return ledger;
}

EnergyStepResult energy_step(double battery_j, const EnergyLedger& ledger) {
    const double next = battery_j + (ledger.gain_j - ledger.consumption_j);
    if (next < 0.0) {
        return {0.0, true};
    }
    return {next, false};
}

} // namespace irsmec
