#include "phenolv/ode_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phenolv/errors.hpp"

namespace phenolv::ode {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool rel_equal(double a, double b, double tol = 1e-12) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1.0});
}

// Shared step kernel. exp_dt_d holds exp(dt * d(x_i)); the remaining factor
// of the integrating-factor update is the scalar exp(-dt * (r1 + b r2)).
void step_kernel(PopulationState& s, const ModelParams& p, const TraitGrid& grid,
                 const std::vector<double>& exp_dt_d, double dt) {
    // Predictor: freeze rates at the current masses and advance to t + dt.
    double weighted = 0.0; // quadrature of u * exp(dt d)
    for (std::size_t i = 0; i < s.u.size(); ++i) weighted += grid.weight(i) * s.u[i] * exp_dt_d[i];
    const double shift_u0 = s.r1 + p.b * s.r2;
    const double shift_v0 = p.c * s.r1 + s.r2;
    const double r1_pred = weighted * std::exp(-dt * shift_u0);
    const double r2_pred = s.r2 * std::exp(dt * (p.m_bar - shift_v0));

    // Corrector: rates at the averaged masses, applied over the full step.
    const double r1_mid = 0.5 * (s.r1 + r1_pred);
    const double r2_mid = 0.5 * (s.r2 + r2_pred);
    const double fac_u = std::exp(-dt * (r1_mid + p.b * r2_mid));
    const double fac_v = std::exp(dt * (p.m_bar - p.c * r1_mid - r2_mid));
    for (std::size_t i = 0; i < s.u.size(); ++i) s.u[i] *= exp_dt_d[i] * fac_u;
    for (std::size_t i = 0; i < s.v.size(); ++i) s.v[i] *= fac_v;

    s.t += dt;
    s.refresh_masses(grid);
    if (!std::isfinite(s.r1) || !std::isfinite(s.r2))
        throw simulation_error("ode step: non-finite mass at t=" + std::to_string(s.t) +
                               " (r1=" + std::to_string(s.r1) + ", r2=" + std::to_string(s.r2) +
                               ")");
}

} // namespace

void OdeSimConfig::validate() const {
    if (!(dt > 0.0)) throw validation_error("sim.dt must be > 0");
    if (!(t_end >= dt)) throw validation_error("sim.t_end must be >= dt");
    if (record_every == 0) throw validation_error("sim.record_every must be >= 1");
    if (eps_conc < 0.0) throw validation_error("sim.eps_conc must be >= 0");
}

std::string to_string(OdeOutcome o) {
    switch (o) {
        case OdeOutcome::Coexist: return "coexist";
        case OdeOutcome::UWins: return "u_wins";
        case OdeOutcome::VWins: return "v_wins";
        case OdeOutcome::Continuum: return "continuum_line";
        case OdeOutcome::BistableOnSeparatrix: return "on_separatrix";
    }
    return "?";
}

void step(PopulationState& state, const ModelParams& params, const TraitGrid& grid, double dt) {
    if (!(dt > 0.0)) throw validation_error("step: dt must be > 0");
    if (state.u.size() != grid.size() || state.v.size() != grid.size())
        throw validation_error("step: state does not match the grid");
    std::vector<double> exp_dt_d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        exp_dt_d[i] = std::exp(dt * params.d.value(grid.node(i)));
    step_kernel(state, params, grid, exp_dt_d, dt);
}

std::vector<double> semi_explicit_reconstruct(const std::vector<double>& u0,
                                              const std::vector<double>& d_values,
                                              const MassSeries& series, double t,
                                              const ModelParams& params) {
    if (u0.size() != d_values.size())
        throw validation_error("reconstruct: u0 and d_values must have equal length");
    if (series.t.empty() || series.t.front() > 0.0)
        throw validation_error("reconstruct: mass series must start at t=0");
    if (series.t.back() < t - 1e-9)
        throw validation_error("reconstruct: mass series ends before the requested time");

    // Trapezoid integral of r1 + b r2 over [0, t] on the recorded series.
    const double max_gap = series.dt * (1.0 + 1e-9);
    double integral = 0.0;
    double t_prev = series.t.front();
    double f_prev = series.r1.front() + params.b * series.r2.front();
    for (std::size_t i = 1; i < series.t.size() && t_prev < t; ++i) {
        double ti = series.t[i];
        double fi = series.r1[i] + params.b * series.r2[i];
        const double gap = ti - t_prev;
        if (gap > max_gap)
            throw validation_error("reconstruct: gap in the mass series exceeds dt");
        if (ti > t) {
            const double w = (t - t_prev) / gap;
            fi = f_prev + w * (fi - f_prev);
            ti = t;
        }
        integral += 0.5 * (ti - t_prev) * (f_prev + fi);
        t_prev = ti;
        f_prev = fi;
    }

    std::vector<double> out(u0.size());
    for (std::size_t i = 0; i < u0.size(); ++i)
        out[i] = u0[i] * std::exp(t * d_values[i] - integral);
    return out;
}

double lyapunov_value(double r1, double r2, const PopulationState& state,
                      const ModelParams& params, const TraitGrid& grid,
                      const std::vector<double>& d_values) {
    if (!(r1 > 0.0)) throw validation_error("lyapunov_value: requires r1 > 0");
    const double b = params.b, c = params.c, m = params.m_bar;
    const double p = (c * r1 * r1 + 2.0 * b * c * r1 * r2 + b * (r2 - m) * (r2 - m)) /
                     (2.0 * c * r1);
    return grid.quadrature_product(d_values, state.u) - p * r1;
}

EntropyResiduals entropy_residuals(const PopulationState& state, const ModelParams& params,
                                   const TraitGrid& grid, const std::vector<double>& d_values) {
    EntropyResiduals res;
    const double shift = state.r1 + params.b * state.r2;
    double i1 = 0.0;
    for (std::size_t i = 0; i < state.u.size(); ++i) {
        const double g = d_values[i] - shift;
        i1 += grid.weight(i) * g * g * state.u[i];
    }
    res.I1 = i1;
    const double g2 = params.c * state.r1 + state.r2 - params.m_bar;
    res.I2 = state.r2 * g2 * g2;
    return res;
}

OdePrediction predict_ode_outcome(const ModelParams& params, const TraitGrid& grid,
                                  const std::vector<double>& u0, const std::vector<double>& v0,
                                  const lv::SeparatrixCurve* separatrix) {
    params.validate();
    const ResourceProfile prof = profile_resource(params.d, grid);
    const double dM = prof.d_max;
    const double m = params.m_bar;
    const double b = params.b, c = params.c;

    OdePrediction pred;
    pred.d_max = dM;
    pred.xbar = prof.xbar;

    if (rel_equal(b * c, 1.0) && rel_equal(b * m, dM)) {
        pred.outcome = OdeOutcome::Continuum;
        pred.r1_limit = kNaN;
        pred.r2_limit = kNaN;
        return pred;
    }
    if (rel_equal(c * dM, m) || rel_equal(b * m, dM))
        throw validation_error(
            "predict_ode_outcome: parameters sit on a classification boundary the theory does "
            "not cover");

    const bool c_small = c * dM < m; // c < m_bar / d_max
    const bool b_small = b * m < dM; // b < d_max / m_bar
    if (c_small && b_small) {
        const double det = 1.0 - b * c;
        pred.outcome = OdeOutcome::Coexist;
        pred.r1_limit = (dM - b * m) / det;
        pred.r2_limit = m - c * pred.r1_limit;
        return pred;
    }
    if (!c_small && b_small) {
        pred.outcome = OdeOutcome::UWins;
        pred.r1_limit = dM;
        pred.r2_limit = 0.0;
        return pred;
    }
    if (c_small && !b_small) {
        pred.outcome = OdeOutcome::VWins;
        pred.r1_limit = 0.0;
        pred.r2_limit = m;
        pred.xbar = kNaN;
        return pred;
    }

    // Doubly supercritical: the outcome depends on the initial masses
    // relative to the separatrix of the mass system with d_bar = d_max.
    if (separatrix == nullptr)
        throw validation_error(
            "predict_ode_outcome: bistable parameters require a separatrix; build one with "
            "global_separatrix(LVParams{d_max, m_bar, b, c})");
    const double r1_0 = grid.quadrature(u0);
    const double r2_0 = grid.quadrature(v0);
    switch (lv::basin_query(*separatrix, r1_0, r2_0)) {
        case lv::BasinSide::Pwins:
            pred.outcome = OdeOutcome::UWins;
            pred.r1_limit = dM;
            pred.r2_limit = 0.0;
            break;
        case lv::BasinSide::Xwins:
            pred.outcome = OdeOutcome::VWins;
            pred.r1_limit = 0.0;
            pred.r2_limit = m;
            pred.xbar = kNaN;
            break;
        case lv::BasinSide::OnSeparatrix:
            pred.outcome = OdeOutcome::BistableOnSeparatrix;
            pred.r1_limit = kNaN;
            pred.r2_limit = kNaN;
            break;
    }
    return pred;
}

OdeSimResult run_ode_sim(const ModelParams& params, const TraitGrid& grid,
                         const std::vector<double>& u0, const std::vector<double>& v0,
                         const OdeSimConfig& config) {
    params.validate();
    config.validate();

    OdeSimResult result;
    PopulationState& s = result.final_state;
    s = PopulationState::initial(grid, u0, v0);

    const ResourceProfile prof = profile_resource(params.d, grid);
    const std::vector<double> d_values = params.d.sample(grid);
    std::vector<double> exp_dt_d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        exp_dt_d[i] = std::exp(config.dt * d_values[i]);

    const double eps_conc = (config.eps_conc > 0.0) ? config.eps_conc : 3.0 * grid.spacing();
    const double r1_cap = 10.0 * std::max(prof.d_max, s.r1) + 1.0;
    const double r2_cap = 10.0 * std::max(params.m_bar, s.r2) + 1.0;

    const auto n_steps = static_cast<std::size_t>(std::llround(config.t_end / config.dt));
    OdeDiagnostics& diag = result.diagnostics;
    diag.masses.dt = config.dt;
    diag.masses.t.reserve(n_steps + 1);
    diag.masses.r1.reserve(n_steps + 1);
    diag.masses.r2.reserve(n_steps + 1);

    auto record_mass = [&] {
        diag.masses.t.push_back(s.t);
        diag.masses.r1.push_back(s.r1);
        diag.masses.r2.push_back(s.r2);
    };
    auto record_diag = [&] {
        diag.t.push_back(s.t);
        diag.r1.push_back(s.r1);
        diag.r2.push_back(s.r2);
        diag.lyapunov.push_back(
            s.r1 > 0.0 ? lyapunov_value(s.r1, s.r2, s, params, grid, d_values) : kNaN);
        const EntropyResiduals e = entropy_residuals(s, params, grid, d_values);
        diag.entropy1.push_back(e.I1);
        diag.entropy2.push_back(e.I2);
        const ConcentrationMetrics m = concentration_metrics(grid, s.u, prof.xbar, eps_conc);
        diag.conc_frac.push_back(m.mass_fraction_near_ref);
        diag.argmax_u.push_back(m.peak_location);
    };

    record_mass();
    record_diag();
    for (std::size_t n = 0; n < n_steps; ++n) {
        step_kernel(s, params, grid, exp_dt_d, config.dt);
        record_mass();
        if (s.r1 > r1_cap || s.r2 > r2_cap)
            throw simulation_error("ode sim: mass exceeded 10x its a-priori bound at t=" +
                                   std::to_string(s.t) + " (r1=" + std::to_string(s.r1) +
                                   ", r2=" + std::to_string(s.r2) + "); this indicates a stepping bug");
        if ((n + 1) % config.record_every == 0 || n + 1 == n_steps) record_diag();
    }

    result.concentration = concentration_metrics(grid, s.u, prof.xbar, eps_conc);
    return result;
}

} // namespace phenolv::ode
