#ifndef PHENOLV_PHASE_PLANE_HPP
#define PHENOLV_PHASE_PLANE_HPP

#include <optional>
#include <string>
#include <vector>

#include "phenolv/rk45.hpp"

namespace phenolv::lv {

// Classical two-species competition ODE
//   Y' = Y (d_bar - Y - b X)
//   X' = X (m_bar - c Y - X)
struct LVParams {
    double d_bar = 1.0;
    double m_bar = 1.0;
    double b = 0.5;
    double c = 0.5;

    void validate() const;
};

struct PhasePoint {
    double y = 0.0;
    double x = 0.0;
};

enum class CaseTag {
    Coexistence_i,  // interior equilibrium globally stable
    ExclusionU_ii,  // (d_bar, 0) globally stable
    ExclusionV_iii, // (0, m_bar) globally stable
    Degenerate_iv,  // b c = 1 and b m_bar = d_bar: a line of equilibria
    Bistable_v,     // both exclusion states locally stable, interior saddle
    NonGeneric,     // a boundary equality not covered above
};

std::string to_string(CaseTag tag);

struct EquilibriumReport {
    std::optional<PhasePoint> coexistence; // absent when singular or not interior
    PhasePoint exclusion_u;                // (d_bar, 0)
    PhasePoint exclusion_v;                // (0, m_bar)
    PhasePoint origin;
    CaseTag case_tag = CaseTag::NonGeneric;
    // Saddle data, populated only in the bistable case (NaN otherwise).
    double lambda1 = 0.0; // stable eigenvalue, < 0
    double lambda2 = 0.0; // unstable eigenvalue, > 0
    double k = 0.0;       // separatrix slope at the saddle
    double a2 = 0.0;      // quadratic coefficient of the local expansion
};

struct SaddleSpectrum {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double k = 0.0;
    PhasePoint saddle;
    PhasePoint stable_direction; // unit eigenvector of lambda1
};

// Monotone polyline X = h(Y) through the saddle; the boundary between the
// basins of the two exclusion equilibria.
struct SeparatrixCurve {
    std::vector<PhasePoint> points; // sorted by strictly increasing Y
    PhasePoint saddle;
    double local_k = 0.0;
    double local_a2 = 0.0;

    double y_min() const { return points.front().y; }
    double y_max() const { return points.back().y; }
    // Linear interpolation of h at y; throws outside [y_min, y_max].
    double height_at(double y) const;
};

enum class BasinSide { Pwins, Xwins, OnSeparatrix };

struct SeparatrixOptions {
    double eps = 0.0;     // seed offset along the stable eigenvector; 0 = auto
    double t_max = 200.0; // backward-time horizon per branch
    StepControl step_control = separatrix_step_control();

    static StepControl separatrix_step_control() {
        StepControl c;
        c.max_phase_step = 5e-3;
        c.h_max = 0.5;
        return c;
    }
};

CaseTag classify(const LVParams& p);
EquilibriumReport equilibria(const LVParams& p);

// Requires the bistable case; throws validation_error otherwise.
SaddleSpectrum saddle_spectrum(const LVParams& p);

// Slope and curvature of the local separatrix expansion at the saddle.
struct LocalQuadratic {
    double k = 0.0;
    double a2 = 0.0;
};
LocalQuadratic local_quadratic(const LVParams& p);

SeparatrixCurve global_separatrix(const LVParams& p, const SeparatrixOptions& opt = {});

// Compares (Y0, X0) against the curve; tolerance 1e-9 (scaled by the saddle
// height) decides OnSeparatrix. Throws if Y0 lies outside the curve's range.
BasinSide basin_query(const SeparatrixCurve& curve, double y0, double x0);

// Forward-time trajectory from nonnegative initial data.
RkTrajectory<2> integrate_lv(const LVParams& p, double y0, double x0, double t_end,
                             const StepControl& ctl = {});

} // namespace phenolv::lv

#endif
