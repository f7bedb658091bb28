#include "lbrw/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "lbrw/error.hpp"

namespace lbrw {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AsymmetricKernel: return "AsymmetricKernel";
        case ErrorCode::NotStochastic: return "NotStochastic";
        case ErrorCode::Periodic: return "Periodic";
        case ErrorCode::EmptyKernel: return "EmptyKernel";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::NonpositiveGrowth: return "NonpositiveGrowth";
        case ErrorCode::IntensityOverflow: return "IntensityOverflow";
        case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
        case ErrorCode::NoAncestorMass: return "NoAncestorMass";
        case ErrorCode::OccupancyViolation: return "OccupancyViolation";
        case ErrorCode::InfeasibleGeometry: return "InfeasibleGeometry";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::MissingDecomposition: return "MissingDecomposition";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

constexpr double kStochasticTol = 1e-12;

// Aperiodic and irreducible on Z^2: the support must generate the whole
// lattice and admit returns to the origin at both parities. Checked by
// expanding the reachable set step by step on a clipped box; for a
// finite-range symmetric kernel 4 * range + 4 steps are enough to decide.
void check_walk_regularity(const std::vector<KernelTap>& taps, std::int32_t range) {
    const int max_steps = 4 * range + 4;
    const int box = max_steps * range;

    std::set<std::pair<std::int32_t, std::int32_t>> reachable;
    reachable.insert({0, 0});
    bool even_return = false;
    bool odd_return = false;
    bool unit_x = false;
    bool unit_y = false;

    for (int step = 1; step <= max_steps; ++step) {
        std::set<std::pair<std::int32_t, std::int32_t>> next;
        for (const auto& [px, py] : reachable) {
            for (const auto& tap : taps) {
                if (tap.weight <= 0.0) continue;
                std::int32_t nx = px + tap.dx;
                std::int32_t ny = py + tap.dy;
                if (std::abs(nx) > box || std::abs(ny) > box) continue;
                next.insert({nx, ny});
            }
        }
        if (next.count({0, 0})) {
            (step % 2 == 0 ? even_return : odd_return) = true;
        }
        if (next.count({1, 0})) unit_x = true;
        if (next.count({0, 1})) unit_y = true;
        reachable = std::move(next);
        if (even_return && odd_return && unit_x && unit_y) return;
    }
    if (!(even_return && odd_return))
        fail(ErrorCode::Periodic, "migration kernel is periodic (no odd-step return to the origin)");
    fail(ErrorCode::Periodic, "migration kernel is not irreducible on the lattice");
}

}  // namespace

KernelSpec make_kernel(std::vector<KernelTap> taps, KernelKind kind) {
    if (taps.empty()) fail(ErrorCode::EmptyKernel, "kernel has no taps");
    for (const auto& tap : taps) {
        if (!(tap.weight >= 0.0))
            fail(ErrorCode::DomainError, "kernel weights must be nonnegative");
    }

    std::sort(taps.begin(), taps.end(), [](const KernelTap& a, const KernelTap& b) {
        return std::pair{a.dx, a.dy} < std::pair{b.dx, b.dy};
    });
    for (std::size_t i = 1; i < taps.size(); ++i) {
        if (taps[i].dx == taps[i - 1].dx && taps[i].dy == taps[i - 1].dy)
            fail(ErrorCode::DomainError, "duplicate kernel offset");
    }

    std::map<std::pair<std::int32_t, std::int32_t>, double> weight_of;
    for (const auto& tap : taps) weight_of[{tap.dx, tap.dy}] = tap.weight;
    for (const auto& tap : taps) {
        auto it = weight_of.find({-tap.dx, -tap.dy});
        double mirror = (it == weight_of.end()) ? 0.0 : it->second;
        if (mirror != tap.weight) {
            std::ostringstream os;
            os << "kernel weight at (" << tap.dx << "," << tap.dy << ") is " << tap.weight
               << " but at the mirrored offset it is " << mirror;
            fail(ErrorCode::AsymmetricKernel, os.str());
        }
    }

    KernelSpec spec;
    spec.kind_ = kind;
    spec.taps_ = std::move(taps);
    for (const auto& tap : spec.taps_) {
        spec.total_weight_ += tap.weight;
        spec.range_ = std::max(spec.range_, chebyshev_norm(tap.dx, tap.dy));
        if (tap.dx == 0 && tap.dy == 0) spec.origin_weight_ = tap.weight;
    }
    if (spec.total_weight_ <= 0.0) fail(ErrorCode::EmptyKernel, "kernel has zero total weight");

    if (kind == KernelKind::Migration) {
        if (std::abs(spec.total_weight_ - 1.0) > kStochasticTol) {
            std::ostringstream os;
            os << "migration weights sum to " << spec.total_weight_ << ", expected 1 within 1e-12";
            fail(ErrorCode::NotStochastic, os.str());
        }
        if (spec.range_ < 1)
            fail(ErrorCode::Periodic, "migration kernel must have range >= 1");
        check_walk_regularity(spec.taps_, spec.range_);
    }
    return spec;
}

KernelSpec uniform_block_kernel() {
    std::vector<KernelTap> taps;
    for (std::int32_t dy = -1; dy <= 1; ++dy)
        for (std::int32_t dx = -1; dx <= 1; ++dx) taps.push_back({dx, dy, 1.0 / 9.0});
    return make_kernel(std::move(taps), KernelKind::Migration);
}

KernelSpec uniform_ring_kernel() {
    std::vector<KernelTap> taps;
    for (std::int32_t dy = -1; dy <= 1; ++dy)
        for (std::int32_t dx = -1; dx <= 1; ++dx)
            if (dx != 0 || dy != 0) taps.push_back({dx, dy, 1.0 / 8.0});
    return make_kernel(std::move(taps), KernelKind::Migration);
}

KernelSpec on_site_competition(double lambda0) {
    return make_kernel({{0, 0, lambda0}}, KernelKind::Competition);
}

ModelParams make_model_params(double m, KernelSpec lambda, KernelSpec migration,
                              std::int32_t torus_side, std::int64_t burn_in) {
    if (!(m > 1.0 && m < 3.0)) {
        std::ostringstream os;
        os << "mean offspring parameter m = " << m << " outside the stable range (1,3)";
        fail(ErrorCode::RangeError, os.str());
    }
    if (lambda.weight_at_origin() <= 0.0)
        fail(ErrorCode::RangeError, "competition kernel needs a positive on-site weight");
    for (const auto& tap : lambda.taps()) {
        if ((tap.dx != 0 || tap.dy != 0) && tap.weight > lambda.weight_at_origin())
            fail(ErrorCode::RangeError, "off-site competition weight exceeds the on-site weight");
    }
    if (migration.kind() != KernelKind::Migration)
        fail(ErrorCode::DomainError, "migration kernel must be built with kind=Migration");
    if (torus_side < 4 * migration.range())
        fail(ErrorCode::RangeError, "torus_side must be at least 4x the migration range");
    if (burn_in < 0) fail(ErrorCode::RangeError, "burn_in must be nonnegative");

    ModelParams params;
    params.m = m;
    params.lambda = std::move(lambda);
    params.migration = std::move(migration);
    params.torus_side = torus_side;
    params.burn_in = burn_in;

    for (const auto& tap : params.lambda.taps()) {
        if ((tap.dx != 0 || tap.dy != 0) && tap.weight > 0.1 * params.lambda.weight_at_origin()) {
            std::ostringstream os;
            os << "off-site competition weight at (" << tap.dx << "," << tap.dy
               << ") exceeds 0.1 * lambda_0; outside the intended small-interaction regime";
            params.validation_warnings.push_back(os.str());
        }
    }
    return params;
}

ModelParams preset_params(std::int32_t torus_side, std::int64_t burn_in) {
    return make_model_params(2.0, on_site_competition(0.025), uniform_block_kernel(),
                             torus_side, burn_in);
}

double logistic_fixed_point(double m, const KernelSpec& lambda) {
    if (lambda.total_weight() <= 0.0)
        fail(ErrorCode::DomainError, "competition kernel must have positive total weight");
    if (m <= 1.0)
        fail(ErrorCode::NonpositiveGrowth, "m <= 1: only the trivial fixed point 0 exists");
    return (m - 1.0) / lambda.total_weight();
}

DensityField constant_field(std::int32_t side, double value) {
    DensityField field;
    field.side = side;
    field.values.assign(static_cast<std::size_t>(side) * side, value);
    return field;
}

double interaction_f(Site x, const DensityField& xi, double m, const KernelSpec& lambda) {
    double own = xi.at(x);
    if (own == 0.0) return 0.0;
    double pressure = 0.0;
    for (const auto& tap : lambda.taps()) {
        Site z = wrap(x.x + tap.dx, x.y + tap.dy, xi.side);
        pressure += tap.weight * xi.at(z);
    }
    double growth = m - pressure;
    return growth > 0.0 ? own * growth : 0.0;
}

DensityField cml_step(const DensityField& zeta, const ModelParams& params) {
    if (zeta.side != params.torus_side)
        fail(ErrorCode::DomainError, "field side does not match params.torus_side");
    const std::int32_t side = zeta.side;

    DensityField f_field = constant_field(side, 0.0);
    for (std::int32_t y = 0; y < side; ++y)
        for (std::int32_t x = 0; x < side; ++x)
            f_field.at({x, y}) = interaction_f({x, y}, zeta, params.m, params.lambda);

    DensityField next = constant_field(side, 0.0);
    for (std::int32_t y = 0; y < side; ++y) {
        for (std::int32_t x = 0; x < side; ++x) {
            double acc = 0.0;
            for (const auto& tap : params.migration.taps()) {
                Site src = wrap(x - tap.dx, y - tap.dy, side);
                acc += tap.weight * f_field.at(src);
            }
            next.at({x, y}) = acc;
        }
    }
    return next;
}

}  // namespace lbrw
