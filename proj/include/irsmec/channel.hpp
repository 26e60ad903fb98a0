#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "irsmec/rng.hpp"
#include "irsmec/types.hpp"

namespace irsmec {

// One slot's small-scale fading state: the direct AP->device coefficient and
// one (AP->element, element->device) pair per reflecting element. Squared
// magnitudes of every coefficient have population mean 1.
struct ChannelRealization {
    std::complex<double> direct_coeff{0.0, 0.0};
    std::vector<std::pair<std::complex<double>, std::complex<double>>> cascade_coeffs;
    double effective_gain = 0.0; // filled by effective_channel
};

// Distance-power-law gain (d / d_ref)^(-alpha). Distances inside the
// reference radius clamp to 1; validate_config warns when a configured link
// falls in that near-field region.
double pathloss_gain(double distance_m, double exponent, double reference_distance_m);

// Large-scale gains of the three links, fixed per configuration.
struct LinkPathloss {
    double direct = 1.0;     // AP -> device
    double ap_irs = 1.0;     // AP -> IRS
    double irs_device = 1.0; // IRS -> device
};

LinkPathloss link_pathloss(const VehicleGeometry& geometry, const ChannelParams& params);

// Single circularly-symmetric unit-variance coefficient from the stream.
std::complex<double> draw_small_scale(RngStream& stream);

// Fresh i.i.d. realization for one slot: direct coefficient plus
// element_count cascade pairs from the two cascade role streams. With
// freeze_ap_irs set, the AP->element coefficients are pinned to 1.
ChannelRealization draw_realization(int element_count, bool freeze_ap_irs,
                                    RngStream& direct_stream,
                                    RngStream& ap_irs_stream,
                                    RngStream& irs_device_stream);

// Composite power gain: |sqrt(PL_d) h_d + beta e^{i phi}
// sqrt(PL_o PL_r) sum_n g_n f_n|^2. Per-element phases are honored when the
// panel carries them. Throws std::invalid_argument when the realization does
// not hold exactly element_count cascade pairs.
double effective_channel(const ChannelRealization& realization, const IrsPanel& irs,
                         const LinkPathloss& pathloss);

// P_rx = P_t * gain.
double received_power(double ap_tx_power_w, double effective_gain);

// Shannon-style uplink rate in bits/s for the optional rate-based
// transmission-energy model.
double uplink_rate(double device_tx_power_w, double effective_gain,
                   double bandwidth_hz, double noise_power_w);

} // namespace irsmec
