#ifndef LBRW_RNG_HPP
#define LBRW_RNG_HPP

#include <array>
#include <cstdint>

namespace lbrw {

// Counter-based random numbers (Philox4x32-10, Salmon et al. 2011).
//
// Every draw is a pure function of (key, counter). Streams are separated by
// mixing the 64-bit stream id into the key, so replicate workers never share
// state and results do not depend on thread schedule. Within a stream the
// 128-bit counter is split into context words (e.g. generation, site) plus a
// running draw index, which lets the forward engine draw per-site variates
// that are reproducible under any parallel decomposition.

namespace detail {

// splitmix64 finalizer; used to decorrelate raw seeds and stream ids.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

struct PhiloxBlock {
    std::array<std::uint32_t, 4> w;
};

// One 128-bit Philox4x32-10 block for the given counter and 64-bit key.
PhiloxBlock philox4x32(const std::array<std::uint32_t, 4>& counter, std::uint64_t key);

// Identifies an independent substream of a master seed.
// Identical (master_seed, stream_id) reproduce identical draw sequences.
struct RngStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    std::uint64_t key() const {
        return detail::mix64(master_seed) ^ detail::mix64(detail::mix64(stream_id));
    }

    RngStream substream(std::uint64_t child) const {
        return {master_seed, detail::mix64(stream_id) ^ detail::mix64(child + 0x6a09e667f3bcc909ull)};
    }
};

// Domain tags keep counter spaces of different consumers disjoint within a
// stream.
enum class RngDomain : std::uint32_t {
    Forward = 1,
    Trace = 2,
    Oracle = 3,
    Generic = 4,
    Bootstrap = 5,
};

// Draws addressed by (context a, context b, draw index). The forward engine
// uses a = generation, b = site index; sequential consumers fix a and b.
class CounterRng {
  public:
    CounterRng(std::uint64_t key, RngDomain domain, std::uint32_t ctx_a, std::uint32_t ctx_b)
        : key_(key ^ detail::mix64(static_cast<std::uint64_t>(domain) << 32)), ctx_a_(ctx_a), ctx_b_(ctx_b) {}

    CounterRng(const RngStream& stream, RngDomain domain, std::uint32_t ctx_a = 0, std::uint32_t ctx_b = 0)
        : CounterRng(stream.key(), domain, ctx_a, ctx_b) {}

    void reset_context(std::uint32_t ctx_a, std::uint32_t ctx_b) {
        ctx_a_ = ctx_a;
        ctx_b_ = ctx_b;
        draw_ = 0;
        have_ = 0;
    }

    std::uint64_t next_u64() {
        if (have_ == 0) {
            block_ = philox4x32({draw_++, ctx_b_, ctx_a_, 0}, key_);
            have_ = 2;
        }
        --have_;
        std::uint64_t hi = block_.w[2 * have_];
        std::uint64_t lo = block_.w[2 * have_ + 1];
        return (hi << 32) | lo;
    }

    // Uniform on the open interval (0,1); safe under log().
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform integer in [0, n) by rejection from the top 64 bits.
    std::uint64_t next_below(std::uint64_t n);

  private:
    std::uint64_t key_;
    std::uint32_t ctx_a_;
    std::uint32_t ctx_b_;
    std::uint32_t draw_ = 0;
    PhiloxBlock block_{};
    int have_ = 0;
};

// Exact Poisson sampling: Knuth product method below mean 10, transformed
// rejection (PTRD, Hoermann 1993) above. Consumes a variable number of
// uniforms from `rng`.
std::uint32_t poisson_draw(double mean, CounterRng& rng);

}  // namespace lbrw

#endif
