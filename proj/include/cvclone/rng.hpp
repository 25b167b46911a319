#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace cvclone {

/// One block of Philox4x32-10 (Salmon et al. constants). Purely functional:
/// the same (counter, key) always yields the same four words, so any draw can
/// be addressed directly without generator state.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
               static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
               static_cast<std::uint32_t>(p0)};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

/// Deterministic Gaussian stream: substream `stream_id` of `seed`.
///
/// Block i of substream s is philox4x32(counter = (i, s), key = seed), so
/// streams never overlap and outputs are independent of how many streams run
/// concurrently. Each block is turned into one standard-normal pair via
/// Box-Muller.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_id_(stream_id) {}

    std::pair<double, double> next_pair() {
        const std::array<std::uint32_t, 4> out =
            philox4x32({static_cast<std::uint32_t>(block_),
                        static_cast<std::uint32_t>(block_ >> 32),
                        static_cast<std::uint32_t>(stream_id_),
                        static_cast<std::uint32_t>(stream_id_ >> 32)},
                       key_);
        ++block_;
        const std::uint64_t a = out[0] | (std::uint64_t{out[1]} << 32);
        const std::uint64_t b = out[2] | (std::uint64_t{out[3]} << 32);
        // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
        const double u1 = 1.0 - std::ldexp(static_cast<double>(a >> 11), -53);
        const double u2 = std::ldexp(static_cast<double>(b >> 11), -53);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;
};

}  // namespace cvclone
