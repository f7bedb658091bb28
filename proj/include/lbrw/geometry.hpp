#ifndef LBRW_GEOMETRY_HPP
#define LBRW_GEOMETRY_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>

namespace lbrw {

// Lattice site. On a torus coordinates live in [0, side).
struct Site {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

inline std::int32_t wrap_coord(std::int64_t c, std::int32_t side) {
    std::int64_t r = c % side;
    if (r < 0) r += side;
    return static_cast<std::int32_t>(r);
}

inline Site wrap(std::int64_t x, std::int64_t y, std::int32_t side) {
    return {wrap_coord(x, side), wrap_coord(y, side)};
}

inline std::size_t site_index(Site s, std::int32_t side) {
    return static_cast<std::size_t>(s.y) * static_cast<std::size_t>(side) + static_cast<std::size_t>(s.x);
}

// Signed representative of a - b with minimal absolute value on the circle.
inline std::int32_t torus_delta(std::int32_t a, std::int32_t b, std::int32_t side) {
    std::int32_t d = a - b;
    if (2 * d > side) d -= side;
    if (2 * d < -side) d += side;
    return d;
}

// Minimal-image Euclidean distance.
inline double torus_distance(Site a, Site b, std::int32_t side) {
    double dx = torus_delta(a.x, b.x, side);
    double dy = torus_delta(a.y, b.y, side);
    return std::hypot(dx, dy);
}

inline std::int32_t chebyshev_norm(std::int32_t dx, std::int32_t dy) {
    return std::max(std::abs(dx), std::abs(dy));
}

inline std::int32_t torus_chebyshev(Site a, Site b, std::int32_t side) {
    return chebyshev_norm(torus_delta(a.x, b.x, side), torus_delta(a.y, b.y, side));
}

}  // namespace lbrw

#endif
