#pragma once

#include <array>
#include <cstdint>

namespace crl {

// Seed for one reproducible random stream. (master, stream_index) fully
// determines every draw; distinct stream indices give independent streams.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream_index = 0;
};

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Keyed by the master seed; the stream index occupies the upper half of
// the 128-bit counter, so streams never overlap.
class Philox {
public:
    explicit Philox(Seed seed) : seed_(seed) {}

    // 128 bits of output for block index `ctr`.
    std::array<std::uint32_t, 4> block(std::uint64_t ctr) const {
        std::array<std::uint32_t, 4> x = {
            static_cast<std::uint32_t>(ctr),
            static_cast<std::uint32_t>(ctr >> 32),
            static_cast<std::uint32_t>(seed_.stream_index),
            static_cast<std::uint32_t>(seed_.stream_index >> 32),
        };
        std::uint32_t k0 = static_cast<std::uint32_t>(seed_.master);
        std::uint32_t k1 = static_cast<std::uint32_t>(seed_.master >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * x[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * x[2];
            x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k0,
                 static_cast<std::uint32_t>(p1),
                 static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k1,
                 static_cast<std::uint32_t>(p0)};
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return x;
    }

private:
    Seed seed_;
};

// Sequential stream of uniform bits / words drawn from a Philox keyed stream.
class RandomStream {
public:
    explicit RandomStream(Seed seed) : gen_(seed) {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = gen_.block(ctr_++);
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    // One uniform sign in {-1, +1}.
    int next_sign() { return (next_u32() & 1u) ? 1 : -1; }

    double next_double() {
        // 32 uniform bits -> [0, 1)
        return next_u32() * (1.0 / 4294967296.0);
    }

private:
    Philox gen_;
    std::array<std::uint32_t, 4> buf_{};
    std::uint64_t ctr_ = 0;
    int pos_ = 4;
};

}  // namespace crl
