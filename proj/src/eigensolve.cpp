#include "phenolv/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phenolv/errors.hpp"
#include "phenolv/tridiag.hpp"

namespace phenolv::pde {

namespace {

// Number of eigenvalues of the interior operator -D2 - diag(q) + s I that are
// below zero, via the LDL^T pivot recurrence (Sturm count). The operator is
// symmetric tridiagonal with diagonal 2/h^2 - q_i + s and off-diagonal -1/h^2.
std::size_t negative_count(const std::vector<double>& q, const TraitGrid& grid, double s) {
    const double h2 = grid.spacing() * grid.spacing();
    const double off2 = 1.0 / (h2 * h2);
    std::size_t count = 0;
    double piv = 0.0;
    bool first = true;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        double d = 2.0 / h2 - q[i] + s;
        if (!first) {
            // Guard the division when a pivot lands numerically at zero.
            if (piv == 0.0) piv = std::numeric_limits<double>::min();
            d -= off2 / piv;
        }
        first = false;
        piv = d;
        if (piv < 0.0) ++count;
    }
    return count;
}

} // namespace

double principal_eigenvalue(const std::vector<double>& q_values, const TraitGrid& grid,
                            double s) {
    if (q_values.size() != grid.size())
        throw validation_error("principal_eigenvalue: potential length does not match the grid");
    // The count of negatives of -D2 - diag(q) + (s - mu) I equals the number
    // of eigenvalues of -D2 - diag(q) + s I below mu; bisect on mu.
    const double qmin = *std::min_element(q_values.begin(), q_values.end());
    const double qmax = *std::max_element(q_values.begin(), q_values.end());
    const double pi = 3.14159265358979323846;
    const double lap0 = (pi / grid.length()) * (pi / grid.length());
    double mu_lo = s - qmax - 1.0;        // below the smallest eigenvalue
    double mu_hi = s + lap0 - qmin + 1.0; // above it (ground-state Rayleigh bound)
    while (negative_count(q_values, grid, s - mu_lo) != 0) mu_lo -= std::fabs(mu_lo) + 1.0;
    while (negative_count(q_values, grid, s - mu_hi) == 0) mu_hi += std::fabs(mu_hi) + 1.0;
    while (mu_hi - mu_lo > 1e-14 * std::max(1.0, std::max(std::fabs(mu_hi), std::fabs(mu_lo)))) {
        const double mid = 0.5 * (mu_lo + mu_hi);
        if (negative_count(q_values, grid, s - mid) == 0)
            mu_lo = mid;
        else
            mu_hi = mid;
    }
    return 0.5 * (mu_lo + mu_hi);
}

PrincipalShift principal_shift(const ResourceFunction& q, const TraitGrid& grid,
                               const ShiftSolveOptions& opt) {
    return principal_shift(q.sample(grid), grid, opt);
}

PrincipalShift principal_shift(const std::vector<double>& q_values, const TraitGrid& grid,
                               const ShiftSolveOptions& opt) {
    if (q_values.size() != grid.size())
        throw validation_error("principal_shift: potential length does not match the grid");
    const std::size_t n = grid.size();
    const std::size_t m = n - 2; // interior nodes
    if (m < 3) throw validation_error("principal_shift: grid too coarse");

    // Bracket the zero-principal-eigenvalue shift: for s above max(q) the
    // operator is positive definite (count 0); the ground-state Rayleigh bound
    // puts the shift above min(q) - (pi/L)^2.
    const double qmin = *std::min_element(q_values.begin(), q_values.end());
    const double qmax = *std::max_element(q_values.begin(), q_values.end());
    const double pi = 3.14159265358979323846;
    const double lap0 = (pi / grid.length()) * (pi / grid.length());
    double hi = qmax + 1.0;
    double lo = qmin - lap0 - 1.0;
    if (negative_count(q_values, grid, hi) != 0 || negative_count(q_values, grid, lo) == 0)
        throw simulation_error("principal_shift: failed to bracket the spectral shift");

    while (hi - lo > std::max(opt.eigen_tol, 1e-15 * std::max(std::fabs(hi), std::fabs(lo)))) {
        const double mid = 0.5 * (lo + hi);
        if (negative_count(q_values, grid, mid) == 0)
            hi = mid;
        else
            lo = mid;
    }
    PrincipalShift result;
    result.s = 0.5 * (lo + hi);

    // Inverse-power iteration at the converged shift. The interior operator
    // -D2 - diag(q) + s I is nearly singular there, which makes a single
    // solve land on the eigenfunction; iterate a few times to be safe.
    const double h2 = grid.spacing() * grid.spacing();
    std::vector<double> diag(m), off(m - 1, -1.0 / h2);
    for (std::size_t i = 0; i < m; ++i) diag[i] = 2.0 / h2 - q_values[i + 1] + result.s;

    std::vector<double> x(m, 1.0);
    double rel_res = std::numeric_limits<double>::infinity();
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        std::vector<double> y;
        try {
            y = solve_tridiagonal(off, diag, off, x);
        } catch (const simulation_error&) {
            // Exactly singular pivot: nudge the shift by one ulp-scale step.
            for (double& dgl : diag) dgl += 1e-14 * std::max(1.0, std::fabs(result.s));
            continue;
        }
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, std::fabs(v));
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw simulation_error("principal_shift: inverse iteration broke down");
        for (double& v : y) v /= norm;
        if (y[m / 2] < 0.0)
            for (double& v : y) v = -v;
        x = std::move(y);

        // Residual of the eigen equation at eigenvalue zero.
        double res = 0.0, xmax = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double r = diag[i] * x[i];
            if (i > 0) r += off[i - 1] * x[i - 1];
            if (i + 1 < m) r += off[i] * x[i + 1];
            res = std::max(res, std::fabs(r));
            xmax = std::max(xmax, std::fabs(x[i]));
        }
        const double scale = std::max(1.0, std::fabs(result.s)) * 2.0 / h2;
        rel_res = res / (xmax * scale);
        if (rel_res <= opt.residual_tol) break;
    }
    result.residual = rel_res;

    result.phi.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) result.phi[i + 1] = x[i];
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (!(result.phi[i] > 0.0))
            throw simulation_error(
                "principal_shift: eigenfunction is not positive at an interior node; the "
                "domain is likely too wide for the potential's decay");
    const double mass = grid.quadrature(result.phi);
    for (double& v : result.phi) v /= mass;
    return result;
}

} // namespace phenolv::pde
