#include "lbrw/rng.hpp"

#include <cmath>
#include <vector>

#include "lbrw/error.hpp"

namespace lbrw {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kPhiloxM0, c[0], lo0, hi0);
    mulhilo(kPhiloxM1, c[2], lo1, hi1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

// log(k!) for small k; beyond the table std::lgamma is exact enough.
const std::vector<double>& log_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(1024);
        t[0] = 0.0;
        for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
        return t;
    }();
    return table;
}

inline double log_factorial(std::uint32_t k) {
    const auto& table = log_factorial_table();
    if (k < table.size()) return table[k];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

std::uint32_t poisson_knuth(double mean, CounterRng& rng) {
    const double limit = std::exp(-mean);
    std::uint32_t k = 0;
    double prod = rng.next_unit();
    while (prod > limit) {
        ++k;
        prod *= rng.next_unit();
    }
    return k;
}

// PTRD: Hoermann, "The transformed rejection method for generating Poisson
// random variables" (1993). Exact for mean >= 10.
std::uint32_t poisson_ptrd(double mean, CounterRng& rng) {
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);

    for (;;) {
        double u = rng.next_unit() - 0.5;
        double v = rng.next_unit();
        double us = 0.5 - std::abs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint32_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        auto k = static_cast<std::uint32_t>(kf);
        double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        double rhs = kf * log_mean - mean - log_factorial(k);
        if (lhs <= rhs) return k;
    }
}

}  // namespace

PhiloxBlock philox4x32(const std::array<std::uint32_t, 4>& counter, std::uint64_t key) {
    std::array<std::uint32_t, 4> c = counter;
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        philox_round(c, k0, k1);
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return {c};
}

std::uint64_t CounterRng::next_below(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::DomainError, "next_below: n must be positive");
    // Lemire-style rejection keeps the draw unbiased.
    std::uint64_t threshold = (~n + 1) % n;
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

std::uint32_t poisson_draw(double mean, CounterRng& rng) {
    if (!(mean >= 0.0)) fail(ErrorCode::DomainError, "poisson_draw: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 10.0) return poisson_knuth(mean, rng);
    return poisson_ptrd(mean, rng);
}

}  // namespace lbrw
