#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace channelpx {

// Philox4x32-10 counter-based generator. Every draw is addressed by
// (seed, path, step, substream), so path i is bit-reproducible regardless of
// execution order or thread count.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                              std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = static_cast<std::uint64_t>(m0) * counter[0];
            std::uint64_t p1 = static_cast<std::uint64_t>(m1) * counter[2];
            counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
                       static_cast<std::uint32_t>(p1),
                       static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
                       static_cast<std::uint32_t>(p0)};
            key[0] += w0;
            key[1] += w1;
        }
        return counter;
    }
};

// Two independent 64-bit words for a given draw address.
inline std::pair<std::uint64_t, std::uint64_t> counter_words(std::uint64_t seed,
                                                             std::uint64_t path,
                                                             std::uint32_t step,
                                                             std::uint32_t substream) {
    auto r = Philox4x32::block(
        {step, substream, static_cast<std::uint32_t>(path),
         static_cast<std::uint32_t>(path >> 32)},
        {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    return {(static_cast<std::uint64_t>(r[0]) << 32) | r[1],
            (static_cast<std::uint64_t>(r[2]) << 32) | r[3]};
}

// Uniform in the open interval (0, 1): 53 bits plus a half-ulp offset, so it
// never returns an endpoint (safe for inverse-CDF sampling).
inline double uniform_from_bits(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace channelpx
