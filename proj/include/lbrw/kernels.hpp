#ifndef LBRW_KERNELS_HPP
#define LBRW_KERNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lbrw/geometry.hpp"

namespace lbrw {

struct KernelTap {
    std::int32_t dx = 0;
    std::int32_t dy = 0;
    double weight = 0.0;

    friend bool operator==(const KernelTap&, const KernelTap&) = default;
};

enum class KernelKind { Migration, Competition };

// Finite-range symmetric kernel on the 2d lattice, stored as sorted
// (dx, dy, weight) taps. Migration kernels are stochastic and must be
// aperiodic and irreducible; competition kernels are kept as given (only the
// total weight enters the fixed point).
class KernelSpec {
  public:
    KernelSpec() = default;

    const std::vector<KernelTap>& taps() const { return taps_; }
    std::int32_t range() const { return range_; }
    double total_weight() const { return total_weight_; }
    double weight_at_origin() const { return origin_weight_; }
    KernelKind kind() const { return kind_; }

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

  private:
    friend KernelSpec make_kernel(std::vector<KernelTap> taps, KernelKind kind);

    std::vector<KernelTap> taps_;
    std::int32_t range_ = 0;
    double total_weight_ = 0.0;
    double origin_weight_ = 0.0;
    KernelKind kind_ = KernelKind::Migration;
};

// Validates and canonicalises a kernel. Weights must be symmetric under
// z -> -z; migration kernels must sum to 1 within 1e-12 (no silent
// renormalisation) and pass the aperiodicity/irreducibility check.
KernelSpec make_kernel(std::vector<KernelTap> taps, KernelKind kind);

// Uniform migration kernel on {-1,0,1}^2 (9 taps of 1/9).
KernelSpec uniform_block_kernel();

// Uniform kernel on the 8 neighbours of the origin (no self tap).
KernelSpec uniform_ring_kernel();

// Purely on-site competition of strength lambda0.
KernelSpec on_site_competition(double lambda0);

// Full parameterisation of the logistic branching random walk on a torus.
struct ModelParams {
    double m = 2.0;                 // mean offspring parameter, in (1,3)
    KernelSpec lambda;              // competition
    KernelSpec migration;           // dispersal, stochastic
    std::int32_t torus_side = 64;
    std::int64_t burn_in = 200;

    // Off-site competition heavier than 0.1 * lambda_0 is outside the regime
    // the model was designed for; reported, not enforced.
    std::vector<std::string> validation_warnings;
};

// Checks the ModelParams invariants (m in (1,3), lambda_0 > 0, off-site
// weights <= lambda_0, torus_side >= 4 * migration range) and collects
// warnings.
ModelParams make_model_params(double m, KernelSpec lambda, KernelSpec migration,
                              std::int32_t torus_side, std::int64_t burn_in);

// Default parameter preset: m = 2, on-site lambda_0 = 0.025 (density 40),
// uniform block migration.
ModelParams preset_params(std::int32_t torus_side = 64, std::int64_t burn_in = 200);

// Stable density of the mean-field logistic map, (m - 1) / sum(lambda).
double logistic_fixed_point(double m, const KernelSpec& lambda);

// Real-valued occupation field on the torus (expected counts per site).
struct DensityField {
    std::int32_t side = 0;
    std::vector<double> values;

    double& at(Site s) { return values[site_index(s, side)]; }
    double at(Site s) const { return values[site_index(s, side)]; }
};

DensityField constant_field(std::int32_t side, double value);

// Reproduction weight of site x in field xi:
//   xi(x) * (m - sum_z lambda_{z-x} xi(z))^+ with torus wrap.
double interaction_f(Site x, const DensityField& xi, double m, const KernelSpec& lambda);

// One step of the deterministic expected-density dynamics:
//   zeta'(x) = sum_y p_{x-y} f(y; zeta).
DensityField cml_step(const DensityField& zeta, const ModelParams& params);

}  // namespace lbrw

#endif
