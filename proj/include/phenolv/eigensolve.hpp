#ifndef PHENOLV_EIGENSOLVE_HPP
#define PHENOLV_EIGENSOLVE_HPP

#include <vector>

#include "phenolv/grid.hpp"
#include "phenolv/resource.hpp"

namespace phenolv::pde {

struct PrincipalShift {
    double s = 0.0;          // shift with zero principal eigenvalue
    std::vector<double> phi; // positive eigenfunction on the full grid (zero at the ends)
    double residual = 0.0;   // max-norm residual of the eigen equation, relative
};

struct ShiftSolveOptions {
    double eigen_tol = 1e-12;    // bisection tolerance on the shift
    double residual_tol = 1e-12; // inverse-iteration residual target (relative)
    std::size_t max_iterations = 60;
};

// Finds the shift s such that the discrete operator -D2 - diag(q) + s I on
// the interior nodes (homogeneous Dirichlet ends) has principal eigenvalue
// zero, together with its positive eigenfunction. Bisection on s locates the
// shift through the inertia of the shifted operator; inverse-power iteration
// with tridiagonal solves recovers the eigenfunction. phi is normalized to
// unit mass (trapezoid quadrature).
PrincipalShift principal_shift(const ResourceFunction& q, const TraitGrid& grid,
                               const ShiftSolveOptions& opt = {});

PrincipalShift principal_shift(const std::vector<double>& q_values, const TraitGrid& grid,
                               const ShiftSolveOptions& opt = {});

// Smallest eigenvalue of -D2 - diag(q) + s I on the interior nodes; exposed
// for the monotonicity checks of the shift solver.
double principal_eigenvalue(const std::vector<double>& q_values, const TraitGrid& grid,
                            double s);

} // namespace phenolv::pde

#endif
