#ifndef PHENOLV_RESOURCE_HPP
#define PHENOLV_RESOURCE_HPP

#include <string>
#include <vector>

#include "phenolv/grid.hpp"

namespace phenolv {

enum class ResourceFamily {
    Constant,     // level
    GaussianBump, // base + amplitude * exp(-(x-center)^2 / (2 width^2))
    CosineBump,   // base + amplitude * cos^2(pi (x-center) / (2 halfwidth)), zero bump outside
    TwoPeaks,     // base + two Gaussian bumps
};

// Closed registry of parametric trait-resource profiles. Also reused to
// describe initial conditions. Deterministic and bounded on any bounded
// interval.
class ResourceFunction {
  public:
    static ResourceFunction constant(double level);
    static ResourceFunction gaussian_bump(double base, double amplitude, double center,
                                          double width);
    static ResourceFunction cosine_bump(double base, double amplitude, double center,
                                        double halfwidth);
    static ResourceFunction two_peaks(double base, double amp1, double center1, double width1,
                                      double amp2, double center2, double width2);

    ResourceFamily family() const { return family_; }
    const std::vector<double>& parameters() const { return p_; }

    double value(double x) const;
    std::vector<double> sample(const TraitGrid& grid) const;

    // Tail level of the family (the `level` of a constant, `base` of a bump).
    double base_level() const { return p_[0]; }

    // Human-readable description, e.g. "gaussian_bump(base=2, amplitude=1, ...)".
    std::string describe() const;

    bool operator==(const ResourceFunction& other) const {
        return family_ == other.family_ && p_ == other.p_;
    }

  private:
    ResourceFunction(ResourceFamily f, std::vector<double> p);

    ResourceFamily family_;
    std::vector<double> p_;
};

} // namespace phenolv

#endif
