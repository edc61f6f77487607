#pragma once

#include <array>
#include <cstdint>

namespace addrep {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). A draw is a pure function of (key,
// counter), so independent substreams come from partitioning the counter.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr const char* kAlgorithm = "philox4x32-10";

    explicit constexpr Philox4x32(Key key) : key_(key) {}

    constexpr Counter operator()(Counter ctr) const {
        Key key = key_;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    Key key_;
};

// Fair coin flips for one (seed, stream) pair: flip i is bit (i % 128) of
// block i / 128. Each stream owns the counter words 2 and 3.
class CoinStream {
public:
    CoinStream(std::uint64_t seed, std::uint64_t stream)
        : gen_({static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}),
          stream_(stream) {}

    bool flip(std::uint64_t index) {
        const std::uint64_t block = index / 128;
        if (block != cached_block_ || !have_block_) {
            bits_ = gen_({static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                          static_cast<std::uint32_t>(stream_),
                          static_cast<std::uint32_t>(stream_ >> 32)});
            cached_block_ = block;
            have_block_ = true;
        }
        const auto bit = index % 128;
        return (bits_[bit / 32] >> (bit % 32)) & 1u;
    }

private:
    Philox4x32 gen_;
    std::uint64_t stream_;
    std::uint64_t cached_block_ = 0;
    bool have_block_ = false;
    Philox4x32::Counter bits_{};
};

} // namespace addrep
