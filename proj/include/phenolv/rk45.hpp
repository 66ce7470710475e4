#ifndef PHENOLV_RK45_HPP
#define PHENOLV_RK45_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "phenolv/errors.hpp"

namespace phenolv {

// Step-size control for the embedded Dormand-Prince 5(4) pair.
struct StepControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double h_init = 1e-3;
    double h_min = 1e-13;
    double h_max = 1.0;
    // Cap on the state-space displacement of one accepted step. Keeps output
    // points dense enough for polyline post-processing; infinite by default.
    double max_phase_step = std::numeric_limits<double>::infinity();
    std::size_t max_steps = 20'000'000;
};

template <std::size_t N>
struct RkTrajectory {
    std::vector<double> t;
    std::vector<std::array<double, N>> y;

    std::array<double, N> back_state() const { return y.back(); }
    double back_time() const { return t.back(); }
};

// Integrates y' = f(t, y) from (t0, y0) to t_end with the Dormand-Prince
// 5(4) embedded pair. `stop` is checked after each accepted step; returning
// true ends the integration early. Records every accepted step.
template <std::size_t N, class F, class Stop>
RkTrajectory<N> integrate_rk45(F&& f, double t0, std::array<double, N> y0, double t_end,
                               const StepControl& ctl, Stop&& stop) {
    static_assert(N >= 1);
    using Vec = std::array<double, N>;

    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    RkTrajectory<N> out;
    out.t.push_back(t0);
    out.y.push_back(y0);

    const double dir = (t_end >= t0) ? 1.0 : -1.0;
    double t = t0;
    Vec y = y0;
    double h = std::min(ctl.h_init, std::fabs(t_end - t0));
    if (h <= 0.0) return out;

    Vec k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
    f(t, y, k1); // FSAL seed

    for (std::size_t step = 0; step < ctl.max_steps; ++step) {
        if (dir * (t - t_end) >= 0.0) return out;
        h = std::min(h, std::fabs(t_end - t));
        const double hs = dir * h;

        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
        f(t + c2 * hs, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * hs, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * hs, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * hs, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] +
                      hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + hs, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] +
                      hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + hs, ynew, k7);

        double err = 0.0;
        double phase = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                    e6 * k6[i] + e7 * k7[i]);
            const double sc =
                ctl.abs_tol + ctl.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err += (ei / sc) * (ei / sc);
            phase += (ynew[i] - y[i]) * (ynew[i] - y[i]);
        }
        err = std::sqrt(err / N);
        phase = std::sqrt(phase);

        const bool phase_ok = phase <= 1.5 * ctl.max_phase_step;
        if (err <= 1.0 && phase_ok) {
            t += hs;
            y = ynew;
            k1 = k7;
            out.t.push_back(t);
            out.y.push_back(y);
            if (stop(t, y)) return out;
        }

        double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        fac = std::min(5.0, std::max(0.2, fac));
        h *= fac;
        if (phase > ctl.max_phase_step)
            h = std::min(h, std::fabs(hs) * ctl.max_phase_step / phase);
        h = std::min(h, ctl.h_max);
        if (h < ctl.h_min)
            throw simulation_error("rk45: step size underflow at t=" + std::to_string(t));
    }
    throw simulation_error("rk45: exceeded the step budget");
}

template <std::size_t N, class F>
RkTrajectory<N> integrate_rk45(F&& f, double t0, std::array<double, N> y0, double t_end,
                               const StepControl& ctl) {
    return integrate_rk45<N>(static_cast<F&&>(f), t0, y0, t_end, ctl,
                             [](double, const std::array<double, N>&) { return false; });
}

} // namespace phenolv

#endif
