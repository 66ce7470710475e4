#ifndef PHENOLV_PDE_SIM_HPP
#define PHENOLV_PDE_SIM_HPP

#include <string>
#include <vector>

#include "phenolv/eigensolve.hpp"
#include "phenolv/params.hpp"
#include "phenolv/phase_plane.hpp"
#include "phenolv/state.hpp"

namespace phenolv::pde {

// Stationary profile pair of the diffusive model: principal eigenfunctions
// of the two shifted operators scaled so their masses solve the shift system.
struct SteadyStateSolution {
    std::vector<double> u_bar;
    std::vector<double> v_bar;
    double s1 = 0.0; // r1_bar + b r2_bar
    double s2 = 0.0; // c r1_bar + r2_bar
    double r1_bar = 0.0;
    double r2_bar = 0.0;
    bool admissible = false; // both masses positive
    std::string note;
};

enum class PdeOutcome { Coexist, UWins, VWins, OnSeparatrix };

std::string to_string(PdeOutcome o);

struct PdePrediction {
    PdeOutcome outcome = PdeOutcome::Coexist;
    double scale_u = 1.0; // limit of u is scale_u * u_bar
    double scale_v = 1.0;
    double K1 = 0.0;
    double K2 = 0.0;
};

SteadyStateSolution steady_state(const ModelParams& params, const TraitGrid& grid,
                                 const ShiftSolveOptions& opt = {});

// Projections of the initial data on the steady profiles.
struct ProjectionConstants {
    double K1 = 0.0;
    double K2 = 0.0;
};
ProjectionConstants projection_constants(const SteadyStateSolution& ss,
                                         const std::vector<double>& u0,
                                         const std::vector<double>& v0, const TraitGrid& grid);

PdePrediction predict_pde_outcome(const ModelParams& params, const TraitGrid& grid,
                                  const std::vector<double>& u0, const std::vector<double>& v0);

struct PdeSimConfig {
    double dt = 2e-3;
    double t_end = 100.0;
    std::size_t record_every = 100;

    void validate() const;
};

// One Strang-split step: half reaction (exponential with midpoint mass
// predictor), full Crank-Nicolson diffusion under homogeneous Dirichlet
// conditions, half reaction.
void imex_step(PopulationState& state, const ModelParams& params, const TraitGrid& grid,
               double dt);

// The diffusion sub-step alone (Crank-Nicolson, Dirichlet ends), exposed so
// it can be verified against the analytic heat-mode decay.
void diffusion_step(std::vector<double>& u, const TraitGrid& grid, double dt);

struct PdeDiagnostics {
    std::vector<double> t;
    std::vector<double> r1;
    std::vector<double> r2;
    std::vector<double> dist_u; // relative L-inf distance to the predicted limit of u
    std::vector<double> dist_v;
};

struct PdeSimResult {
    PopulationState final_state;
    PdeDiagnostics diagnostics;
    PdePrediction prediction;
    SteadyStateSolution steady;
};

PdeSimResult run_pde_sim(const ModelParams& params, const TraitGrid& grid,
                         const std::vector<double>& u0, const std::vector<double>& v0,
                         const PdeSimConfig& config);

// Linear companion dynamics: both species evolve under frozen shifts
// (s1, s2), integrated by unsplit Crank-Nicolson on the full operator so the
// cross-products with the steady profiles are conserved. Records the mass
// series lambda1(t), lambda2(t).
struct LinearCompanionResult {
    std::vector<double> u_tilde;
    std::vector<double> v_tilde;
    std::vector<double> t;
    std::vector<double> lambda1;
    std::vector<double> lambda2;
    double conservation_drift_u = 0.0; // max relative drift of <u_bar, u_tilde> per unit time
    double conservation_drift_v = 0.0;
};

LinearCompanionResult run_linear_companion(const ModelParams& params, const TraitGrid& grid,
                                           const SteadyStateSolution& ss,
                                           const std::vector<double>& u0,
                                           const std::vector<double>& v0,
                                           const PdeSimConfig& config);

// Piecewise-linear scalar series; constant() freezes it at one value.
struct ScalarSeries {
    std::vector<double> t;
    std::vector<double> value;

    static ScalarSeries constant(double v) { return {{0.0}, {v}}; }
    double at(double time) const;
};

struct WzResult {
    std::vector<double> t;
    std::vector<double> w;
    std::vector<double> z;
};

// Amplitude system of the full dynamics relative to the linear companion:
//   w' = -w (w L1 + b z L2 - r1_bar - b r2_bar)
//   z' = -z (c w L1 + z L2 - c r1_bar - r2_bar),  w(0) = z(0) = 1.
WzResult reduced_wz(const ScalarSeries& lambda1, const ScalarSeries& lambda2,
                    const ModelParams& params, const SteadyStateSolution& ss, double t_end,
                    double w0 = 1.0, double z0 = 1.0);

} // namespace phenolv::pde

#endif
