#ifndef PHENOLV_GRID_HPP
#define PHENOLV_GRID_HPP

#include <cstddef>
#include <vector>

namespace phenolv {

// Uniform 1-D trait grid on [x_lo, x_hi] with trapezoid quadrature weights.
// Immutable after construction.
class TraitGrid {
  public:
    TraitGrid(double x_lo, double x_hi, std::size_t n);

    double x_lo() const { return x_lo_; }
    double x_hi() const { return x_hi_; }
    std::size_t size() const { return nodes_.size(); }
    double spacing() const { return spacing_; }
    double length() const { return x_hi_ - x_lo_; }

    double node(std::size_t i) const { return nodes_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // Index of the node closest to x (clamped to the domain).
    std::size_t nearest_node(double x) const;

    // Trapezoid quadrature of a sampled function; throws on length mismatch.
    double quadrature(const std::vector<double>& f) const;

    // Quadrature of the pointwise product f*g (saves a temporary).
    double quadrature_product(const std::vector<double>& f,
                              const std::vector<double>& g) const;

    bool operator==(const TraitGrid& other) const {
        return x_lo_ == other.x_lo_ && x_hi_ == other.x_hi_ &&
               nodes_.size() == other.nodes_.size();
    }

  private:
    double x_lo_, x_hi_, spacing_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

inline TraitGrid make_grid(double x_lo, double x_hi, std::size_t n) {
    return TraitGrid(x_lo, x_hi, n);
}

inline double quadrature(const TraitGrid& grid, const std::vector<double>& f) {
    return grid.quadrature(f);
}

} // namespace phenolv

#endif
