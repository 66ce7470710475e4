#include "phenolv/grid.hpp"

#include <cmath>
#include <string>

#include "phenolv/errors.hpp"

namespace phenolv {

TraitGrid::TraitGrid(double x_lo, double x_hi, std::size_t n) : x_lo_(x_lo), x_hi_(x_hi) {
    if (!(x_lo < x_hi))
        throw validation_error("grid: x_lo must be < x_hi (got [" + std::to_string(x_lo) +
                               ", " + std::to_string(x_hi) + "])");
    if (n < 3)
        throw validation_error("grid: need at least 3 nodes, got " + std::to_string(n));
    if (!std::isfinite(x_lo) || !std::isfinite(x_hi))
        throw validation_error("grid: bounds must be finite");

    spacing_ = (x_hi - x_lo) / static_cast<double>(n - 1);
    nodes_.resize(n);
    weights_.assign(n, spacing_);
    for (std::size_t i = 0; i < n; ++i)
        nodes_[i] = x_lo + spacing_ * static_cast<double>(i);
    nodes_.back() = x_hi; // pin the endpoint against roundoff
    weights_.front() = 0.5 * spacing_;
    weights_.back() = 0.5 * spacing_;
}

std::size_t TraitGrid::nearest_node(double x) const {
    if (x <= x_lo_) return 0;
    if (x >= x_hi_) return nodes_.size() - 1;
    const double pos = (x - x_lo_) / spacing_;
    std::size_t i = static_cast<std::size_t>(std::llround(pos));
    if (i >= nodes_.size()) i = nodes_.size() - 1;
    return i;
}

double TraitGrid::quadrature(const std::vector<double>& f) const {
    if (f.size() != nodes_.size())
        throw validation_error("quadrature: vector length " + std::to_string(f.size()) +
                               " does not match grid size " + std::to_string(nodes_.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += weights_[i] * f[i];
    return sum;
}

double TraitGrid::quadrature_product(const std::vector<double>& f,
                                     const std::vector<double>& g) const {
    if (f.size() != nodes_.size() || g.size() != nodes_.size())
        throw validation_error("quadrature_product: vector length does not match grid size");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += weights_[i] * f[i] * g[i];
    return sum;
}

} // namespace phenolv
