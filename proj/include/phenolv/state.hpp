#ifndef PHENOLV_STATE_HPP
#define PHENOLV_STATE_HPP

#include <vector>

#include "phenolv/grid.hpp"

namespace phenolv {

// Sampled densities of both species at one time, with their masses. The
// masses are recomputed from the vectors whenever they change; they are
// never patched incrementally.
struct PopulationState {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    double r1 = 0.0; // quadrature of u
    double r2 = 0.0; // quadrature of v

    static PopulationState initial(const TraitGrid& grid, std::vector<double> u0,
                                   std::vector<double> v0);

    void refresh_masses(const TraitGrid& grid);

    // Throws simulation_error if any entry is below -1e-12 or non-finite;
    // entries in [-1e-12, 0) are snapped to zero.
    void enforce_nonnegative();
};

// Grid-level diagnostics of how concentrated a density is.
struct ConcentrationMetrics {
    double peak_location = 0.0;        // node of the density maximum
    double mass_fraction_near_ref = 0.0; // mass within +-eps of the reference point
    double half_mass_width = 0.0;      // narrowest interval around the peak holding 50% of mass
};

// eps is the half-width of the window around x_ref. A density with zero mass
// yields zero metrics.
ConcentrationMetrics concentration_metrics(const TraitGrid& grid, const std::vector<double>& u,
                                           double x_ref, double eps);

} // namespace phenolv

#endif
