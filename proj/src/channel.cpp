#include "irsmec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace irsmec {

double pathloss_gain(double distance_m, double exponent, double reference_distance_m) {
    if (!(reference_distance_m > 0.0)) {
        throw std::invalid_argument("pathloss_gain: reference distance must be > 0");
    }
    if (distance_m < reference_distance_m) {
        return 1.0; // near-field clamp
    }
    return std::pow(distance_m / reference_distance_m, -exponent);
}

LinkPathloss link_pathloss(const VehicleGeometry& geometry, const ChannelParams& params) {
    const LinkDistances d = link_distances(geometry);
    LinkPathloss pl;
    pl.direct = pathloss_gain(d.ap_device_m, params.alpha_nlos, params.reference_distance_m);
    pl.ap_irs = pathloss_gain(d.ap_irs_m, params.alpha_los, params.reference_distance_m);
    pl.irs_device =
        pathloss_gain(d.irs_device_m, params.alpha_nlos, params.reference_distance_m);
    return pl;
}

std::complex<double> draw_small_scale(RngStream& stream) {
    return stream.next_unit_circular();
}

ChannelRealization draw_realization(int element_count, bool freeze_ap_irs,
                                    RngStream& direct_stream,
                                    RngStream& ap_irs_stream,
                                    RngStream& irs_device_stream) {
    ChannelRealization realization;
    realization.direct_coeff = draw_small_scale(direct_stream);
    realization.cascade_coeffs.reserve(static_cast<std::size_t>(std::max(element_count, 0)));
    for (int n = 0; n < element_count; ++n) {
        const std::complex<double> g =
            freeze_ap_irs ? std::complex<double>{1.0, 0.0} : draw_small_scale(ap_irs_stream);
        const std::complex<double> f = draw_small_scale(irs_device_stream);
        realization.cascade_coeffs.emplace_back(g, f);
    }
    return realization;
}

double effective_channel(const ChannelRealization& realization, const IrsPanel& irs,
                         const LinkPathloss& pathloss) {
    const std::size_t n_elements = static_cast<std::size_t>(std::max(irs.element_count, 0));
    if (realization.cascade_coeffs.size() != n_elements) {
        throw std::invalid_argument(
            "effective_channel: realization holds " +
            std::to_string(realization.cascade_coeffs.size()) +
            " cascade pairs but the panel has " + std::to_string(n_elements) +
            " elements");
    }

    std::complex<double> amplitude =
        std::sqrt(pathloss.direct) * realization.direct_coeff;

    if (n_elements > 0 && irs.amplitude > 0.0) {
        const double cascade_scale =
            irs.amplitude * std::sqrt(pathloss.ap_irs * pathloss.irs_device);
        const bool per_element = !irs.per_element_phase_rad.empty();
        std::complex<double> reflected{0.0, 0.0};
        for (std::size_t n = 0; n < n_elements; ++n) {
            const auto& [g, f] = realization.cascade_coeffs[n];
            std::complex<double> term = g * f;
            if (per_element) {
                term *= std::polar(1.0, irs.per_element_phase_rad[n]);
            }
            reflected += term;
        }
        if (!per_element) {
            reflected *= std::polar(1.0, irs.phase_shift_rad);
        }
        amplitude += cascade_scale * reflected;
    }

    return std::norm(amplitude);
}

double received_power(double ap_tx_power_w, double effective_gain) {
    return ap_tx_power_w * effective_gain;
}

double uplink_rate(double device_tx_power_w, double effective_gain,
                   double bandwidth_hz, double noise_power_w) {
    const double snr = device_tx_power_w * effective_gain / noise_power_w;
    return bandwidth_hz * std::log2(1.0 + snr);
}

} // namespace irsmec
