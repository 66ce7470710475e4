#ifndef PHENOLV_PARAMS_HPP
#define PHENOLV_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "phenolv/grid.hpp"
#include "phenolv/resource.hpp"

namespace phenolv {

// Competition coefficients plus the trait-resource profiles of both species.
// d(x) drives species u; the mutation-free model uses the constant rate m_bar
// for species v, the diffusive model uses m(x).
struct ModelParams {
    double b = 0.5;   // weight of v's mass in u's growth rate
    double c = 0.25;  // weight of u's mass in v's growth rate
    double m_bar = 1.0;
    ResourceFunction d = ResourceFunction::gaussian_bump(2.0, 1.0, 0.0, 1.0);
    ResourceFunction m = ResourceFunction::constant(1.0);

    void validate() const; // throws validation_error on non-positive b, c, m_bar

    bool operator==(const ModelParams& o) const {
        return b == o.b && c == o.c && m_bar == o.m_bar && d == o.d && m == o.m;
    }
};

// Grid-level summary of d(x): extrema and the location of the maximum.
struct ResourceProfile {
    double d_min = 0.0;
    double d_max = 0.0;
    double xbar = 0.0;        // node of the maximum
    std::size_t argmax = 0;   // its index
    bool unique_max = false;  // no second node ties the maximum exactly
};

ResourceProfile profile_resource(const ResourceFunction& d, const TraitGrid& grid);

// Standing-assumption report for the mutation-free model. Report-only;
// callers decide which failures are fatal.
struct AssumptionReport {
    bool initial_masses_positive = false;  // 0 < r1(0), r2(0) < inf
    bool d_bounded = false;                // 0 < d_min < d_max on the grid
    bool d_single_max = false;             // grid argmax of d attained once
    bool coexistence_masses_exist = false; // positive (r1*, r2*) solving the limit system
    bool tail_negative = false;            // fitness of u negative on the outer band at (r1*, r2*)
    bool boundary_flat = false;            // d within 1e-10 of its tail level at the domain ends

    double r1_init = 0.0, r2_init = 0.0;
    double d_min = 0.0, d_max = 0.0, xbar = 0.0;
    double r1_star = 0.0, r2_star = 0.0;
    double beta_outer = 0.0; // max of d - r1* - b r2* over the outer band

    std::vector<std::string> notes;

    // Everything the convergence theory requires.
    bool all_ok() const {
        return initial_masses_positive && d_bounded && d_single_max &&
               coexistence_masses_exist && tail_negative;
    }
};

AssumptionReport validate_assumptions(const ModelParams& params, const TraitGrid& grid,
                                      const std::vector<double>& u0,
                                      const std::vector<double>& v0);

} // namespace phenolv

#endif
