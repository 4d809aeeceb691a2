// Counter-based random number generation (Philox4x32-10).
//
// Monte Carlo batches are keyed by (master seed, episode index, stream), so
// any episode can be generated independently of the others and in any order.
// Gaussian variates use an explicit Box-Muller transform instead of
// std::normal_distribution, whose output is implementation-defined; traces
// produced with the same seed are bit-identical across platforms.
#pragma once

#include <cmath>
#include <cstdint>

namespace voictl {

/// Philox4x32 with 10 rounds. 64-bit key, 64-bit block counter, and a
/// 64-bit stream selector folded into the high counter words.
class Philox {
public:
    Philox(std::uint64_t key, std::uint64_t stream, std::uint64_t substream = 0)
        : key0_(static_cast<std::uint32_t>(key)),
          key1_(static_cast<std::uint32_t>(key >> 32)),
          ctr2_(static_cast<std::uint32_t>(stream)),
          ctr3_(static_cast<std::uint32_t>(stream >> 32) ^
                (static_cast<std::uint32_t>(substream) * 0x9E3779B9u)) {}

    std::uint32_t next_u32() {
        if (avail_ == 0) refill();
        return buf_[4 - avail_--];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal variate. Generates a Box-Muller pair and caches
    /// the second value, so draw counts stay deterministic per call.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite.
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) >> 32);
    }

    void refill() {
        std::uint32_t c0 = static_cast<std::uint32_t>(block_);
        std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
        std::uint32_t c2 = ctr2_;
        std::uint32_t c3 = ctr3_;
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint32_t hi0 = mulhi(0xD2511F53u, c0);
            const std::uint32_t lo0 = 0xD2511F53u * c0;
            const std::uint32_t hi1 = mulhi(0xCD9E8D57u, c2);
            const std::uint32_t lo1 = 0xCD9E8D57u * c2;
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        buf_[0] = c0;
        buf_[1] = c1;
        buf_[2] = c2;
        buf_[3] = c3;
        avail_ = 4;
        ++block_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t ctr2_, ctr3_;
    std::uint64_t block_ = 0;
    std::uint32_t buf_[4] = {0, 0, 0, 0};
    int avail_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Streams within an episode. Noise draws and policy randomization use
/// disjoint streams so that common-random-number comparisons across
/// policies see identical process noise.
enum class RngStream : std::uint64_t { Noise = 0, Policy = 1, Oracle = 2 };

inline Philox episode_rng(std::uint64_t master_seed, std::uint64_t episode,
                          RngStream stream = RngStream::Noise) {
    return Philox(master_seed, episode, static_cast<std::uint64_t>(stream));
}

}  // namespace voictl
