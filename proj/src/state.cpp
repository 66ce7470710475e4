#include "phenolv/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phenolv/errors.hpp"

namespace phenolv {

PopulationState PopulationState::initial(const TraitGrid& grid, std::vector<double> u0,
                                         std::vector<double> v0) {
    if (u0.size() != grid.size() || v0.size() != grid.size())
        throw validation_error("initial state: vectors must match the grid size");
    PopulationState s;
    s.u = std::move(u0);
    s.v = std::move(v0);
    s.enforce_nonnegative();
    s.refresh_masses(grid);
    return s;
}

void PopulationState::refresh_masses(const TraitGrid& grid) {
    r1 = grid.quadrature(u);
    r2 = grid.quadrature(v);
}

void PopulationState::enforce_nonnegative() {
    for (auto* vec : {&u, &v}) {
        for (double& x : *vec) {
            if (!std::isfinite(x))
                throw simulation_error("state contains a non-finite density value at t=" +
                                       std::to_string(t));
            if (x < 0.0) {
                if (x < -1e-12)
                    throw simulation_error("state density fell below -1e-12 at t=" +
                                           std::to_string(t));
                x = 0.0;
            }
        }
    }
}

ConcentrationMetrics concentration_metrics(const TraitGrid& grid, const std::vector<double>& u,
                                           double x_ref, double eps) {
    if (u.size() != grid.size())
        throw validation_error("concentration_metrics: vector length mismatch");
    ConcentrationMetrics m;
    const double total = grid.quadrature(u);
    if (!(total > 0.0)) return m;

    std::size_t peak = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] > u[peak]) peak = i;
    m.peak_location = grid.node(peak);

    double near = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (std::fabs(grid.node(i) - x_ref) <= eps) near += grid.weight(i) * u[i];
    m.mass_fraction_near_ref = std::clamp(near / total, 0.0, 1.0);

    // Narrowest window [i, j] containing the peak with at least half the mass.
    std::vector<double> cum(u.size() + 1, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        cum[i + 1] = cum[i] + grid.weight(i) * u[i];
    const double target = 0.5 * total;
    double best = grid.length();
    std::size_t j = peak;
    for (std::size_t i = 0; i <= peak; ++i) {
        while (j < u.size() - 1 && cum[j + 1] - cum[i] < target) ++j;
        if (cum[j + 1] - cum[i] >= target)
            best = std::min(best, grid.node(j) - grid.node(i));
    }
    m.half_mass_width = best;
    return m;
}

} // namespace phenolv
