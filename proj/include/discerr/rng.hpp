#pragma once

#include <array>
#include <cstdint>

#include "discerr/normal.hpp"

namespace discerr {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Stream k of a run is addressable as (seed, stream_id=k) without generating
// anything in between, which is what makes the Monte Carlo layer deterministic
// under any work partitioning.
namespace philox {

inline constexpr std::uint32_t kMult0 = 0xD2511F53u;
inline constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

} // namespace philox

// One addressable stream of standard normals / uniforms.  Identical
// (seed, stream_id, counter) always reproduces the identical values;
// distinct (seed, stream_id) pairs give independent sequences.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t counter = 0)
        : seed_(seed), stream_id_(stream_id), counter_(counter) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const philox::Counter ctr = {
            static_cast<std::uint32_t>(counter_),
            static_cast<std::uint32_t>(counter_ >> 32),
            static_cast<std::uint32_t>(stream_id_),
            static_cast<std::uint32_t>(stream_id_ >> 32)};
        const philox::Key key = {static_cast<std::uint32_t>(seed_),
                                 static_cast<std::uint32_t>(seed_ >> 32)};
        const philox::Counter out = philox::block(ctr, key);
        ++counter_;
        spare_ = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
        have_spare_ = true;
        return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    }

    // Uniform on the open interval (0,1); never returns an endpoint, so the
    // inverse-CDF transform below is total.
    double next_uniform() {
        const std::uint64_t bits = next_u64();
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_normal() { return norm_inv_cdf(next_uniform()); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

} // namespace discerr
