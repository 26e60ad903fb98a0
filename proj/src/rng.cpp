#include "irsmec/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsmec {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mul_hilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                     std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> single_round(
    const std::array<std::uint32_t, 4>& c, PhiloxKey key) {
    std::uint32_t hi0 = 0;
    std::uint32_t lo0 = 0;
    std::uint32_t hi1 = 0;
    std::uint32_t lo1 = 0;
    mul_hilo(kMult0, c[0], hi0, lo0);
    mul_hilo(kMult1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ key.k0, lo1, hi0 ^ c[3] ^ key.k1, lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        PhiloxKey key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key.k0 += kWeyl0;
            key.k1 += kWeyl1;
        }
        counter = single_round(counter, key);
    }
    return counter;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint32_t scenario_id,
                     std::uint32_t iteration, std::uint32_t slot,
                     StreamRole role) {
    if (scenario_id >= (1u << 24)) {
        throw std::invalid_argument("RngStream: scenario_id must fit in 24 bits");
    }
    key_.k0 = static_cast<std::uint32_t>(master_seed);
    key_.k1 = static_cast<std::uint32_t>(master_seed >> 32);
    counter_ = {0u, iteration, slot,
                (scenario_id << 8) | static_cast<std::uint32_t>(role)};
}

void RngStream::refill() {
    block_ = philox4x32(counter_, key_);
    ++counter_[0]; // block index; other words identify the stream
    cursor_ = 0;
}

std::uint32_t RngStream::next_u32() {
    if (cursor_ >= 4) {
        refill();
    }
    return block_[cursor_++];
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::int64_t RngStream::next_int_in(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("RngStream: empty integer range");
    }
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) { // full 64-bit span
        return static_cast<std::int64_t>(next_u64());
    }
    // Multiply-shift mapping of a 64-bit draw onto [0, range).
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * range;
    return lo + static_cast<std::int64_t>(wide >> 64);
}

std::complex<double> RngStream::next_unit_circular() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

RngStream derive_substream(std::uint64_t master_seed, std::uint32_t scenario_id,
                           std::uint32_t iteration, std::uint32_t slot,
                           StreamRole role) {
    return RngStream(master_seed, scenario_id, iteration, slot, role);
}

} // namespace irsmec
