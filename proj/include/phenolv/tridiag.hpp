#ifndef PHENOLV_TRIDIAG_HPP
#define PHENOLV_TRIDIAG_HPP

#include <cstddef>
#include <vector>

#include "phenolv/errors.hpp"

namespace phenolv {

// Solves T x = rhs for a tridiagonal T given by (lower, diag, upper), sizes
// n-1 / n / n-1, by the Thomas algorithm. No pivoting; intended for the
// diagonally dominant or shifted symmetric systems used here.
inline std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                             const std::vector<double>& diag,
                                             const std::vector<double>& upper,
                                             std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n)
        throw validation_error("tridiagonal solve: inconsistent sizes");
    std::vector<double> c(n - 1);
    double piv = diag[0];
    if (piv == 0.0) throw simulation_error("tridiagonal solve: zero pivot");
    c[0] = upper[0] / piv;
    rhs[0] /= piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = diag[i] - lower[i - 1] * c[i - 1];
        if (piv == 0.0) throw simulation_error("tridiagonal solve: zero pivot");
        if (i < n - 1) c[i] = upper[i] / piv;
        rhs[i] = (rhs[i] - lower[i - 1] * rhs[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
    return rhs;
}

} // namespace phenolv

#endif
