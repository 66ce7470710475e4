#ifndef PHENOLV_ODE_SIM_HPP
#define PHENOLV_ODE_SIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "phenolv/params.hpp"
#include "phenolv/phase_plane.hpp"
#include "phenolv/state.hpp"

namespace phenolv::ode {

struct OdeSimConfig {
    double dt = 1e-3;
    double t_end = 100.0;
    std::size_t record_every = 100; // diagnostic cadence in steps
    double eps_conc = 0.0;          // concentration window half-width; 0 = 3 * spacing

    void validate() const;
};

// Mass history at full step resolution, dense enough to re-integrate the
// growth exponent in time.
struct MassSeries {
    double dt = 0.0;
    std::vector<double> t;
    std::vector<double> r1;
    std::vector<double> r2;
};

struct OdeDiagnostics {
    std::vector<double> t;
    std::vector<double> r1;
    std::vector<double> r2;
    std::vector<double> lyapunov;
    std::vector<double> entropy1; // mass-weighted squared fitness of u
    std::vector<double> entropy2; // squared fitness defect of v, mass-weighted
    std::vector<double> conc_frac;
    std::vector<double> argmax_u;
    MassSeries masses;
};

enum class OdeOutcome {
    Coexist,
    UWins,
    VWins,
    Continuum,
    BistableOnSeparatrix, // initial masses sit on the separatrix; no claim
};

std::string to_string(OdeOutcome o);

struct OdePrediction {
    OdeOutcome outcome = OdeOutcome::Coexist;
    double r1_limit = 0.0; // NaN when not determined (continuum / on-separatrix)
    double r2_limit = 0.0;
    double xbar = 0.0;     // concentration point of u (NaN when u dies out)
    double d_max = 0.0;
    // Continuum case: the limits satisfy r1 + b r2 = d_max.
};

// One exponential-update step with a midpoint mass predictor. Positivity and
// the support of u are preserved exactly.
void step(PopulationState& state, const ModelParams& params, const TraitGrid& grid, double dt);

// u(x,t) rebuilt from u0 and the recorded mass history via the closed-form
// growth exponent; the time integral uses the trapezoid rule on the series.
std::vector<double> semi_explicit_reconstruct(const std::vector<double>& u0,
                                              const std::vector<double>& d_values,
                                              const MassSeries& series, double t,
                                              const ModelParams& params);

// Monotone functional of the masses, integrated against u.
double lyapunov_value(double r1, double r2, const PopulationState& state,
                      const ModelParams& params, const TraitGrid& grid,
                      const std::vector<double>& d_values);

struct EntropyResiduals {
    double I1 = 0.0;
    double I2 = 0.0;
};
EntropyResiduals entropy_residuals(const PopulationState& state, const ModelParams& params,
                                   const TraitGrid& grid, const std::vector<double>& d_values);

// Long-time outcome from the competition coefficients, the peak of d and, in
// the bistable regime, the position of the initial masses relative to the
// separatrix (which the caller must supply, built with d_bar = max d).
OdePrediction predict_ode_outcome(const ModelParams& params, const TraitGrid& grid,
                                  const std::vector<double>& u0, const std::vector<double>& v0,
                                  const lv::SeparatrixCurve* separatrix = nullptr);

struct OdeSimResult {
    PopulationState final_state;
    OdeDiagnostics diagnostics;
    ConcentrationMetrics concentration;
};

OdeSimResult run_ode_sim(const ModelParams& params, const TraitGrid& grid,
                         const std::vector<double>& u0, const std::vector<double>& v0,
                         const OdeSimConfig& config);

} // namespace phenolv::ode

#endif
