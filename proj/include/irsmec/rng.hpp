#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace irsmec {

// Independent random-number domains within one slot. Every consumer of
// randomness owns a role so that adding or removing draws in one place can
// never shift the sequence seen by another.
enum class StreamRole : std::uint32_t {
    TaskSize = 0,         // uniform task-size draw
    DirectFading = 1,     // AP -> device small-scale coefficient
    CascadeApIrs = 2,     // AP -> IRS element coefficients
    CascadeIrsDevice = 3, // IRS element -> device coefficients
};

struct PhiloxKey {
    std::uint32_t k0 = 0;
    std::uint32_t k1 = 0;
};

// Philox4x32-10 block function. Maps a 128-bit counter and 64-bit key to
// 128 bits of output; distinct counters give statistically independent
// blocks under the same key.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        PhiloxKey key);

// Counter-based random stream. The (scenario, iteration, slot, role) tuple
// selects three counter words and the key; the remaining word is a block
// index that advances as the stream is consumed. Streams with distinct
// tuples are disjoint by construction, and generating one stream never
// perturbs another.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint32_t scenario_id,
              std::uint32_t iteration, std::uint32_t slot, StreamRole role);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double next_unit();
    // Uniform on (0, 1]; safe as a log() argument.
    double next_unit_open();
    // Uniform integer on [lo, hi], inclusive.
    std::int64_t next_int_in(std::int64_t lo, std::int64_t hi);
    // Circularly-symmetric complex draw with zero mean and unit variance;
    // |h|^2 is exponential with mean 1.
    std::complex<double> next_unit_circular();

  private:
    void refill();

    std::array<std::uint32_t, 4> counter_;
    PhiloxKey key_;
    std::array<std::uint32_t, 4> block_{};
    int cursor_ = 4; // empty buffer
};

// Canonical substream derivation used by the simulation engine. Scenarios
// sharing (master_seed, scenario_id) see identical randomness per
// (iteration, slot, role), which is what makes cross-scenario comparisons
// run under common random numbers.
RngStream derive_substream(std::uint64_t master_seed, std::uint32_t scenario_id,
                           std::uint32_t iteration, std::uint32_t slot,
                           StreamRole role);

} // namespace irsmec
