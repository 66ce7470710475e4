#include "phenolv/resource.hpp"

#include <cmath>
#include <cstdio>

#include "phenolv/errors.hpp"

namespace phenolv {

namespace {
constexpr double kPi = 3.14159265358979323846;

double gaussian(double x, double center, double width) {
    const double s = (x - center) / width;
    return std::exp(-0.5 * s * s);
}
} // namespace

ResourceFunction::ResourceFunction(ResourceFamily f, std::vector<double> p)
    : family_(f), p_(std::move(p)) {}

ResourceFunction ResourceFunction::constant(double level) {
    if (!std::isfinite(level)) throw validation_error("resource: constant level must be finite");
    return ResourceFunction(ResourceFamily::Constant, {level});
}

ResourceFunction ResourceFunction::gaussian_bump(double base, double amplitude, double center,
                                                 double width) {
    if (width <= 0.0) throw validation_error("resource: gaussian_bump width must be > 0");
    return ResourceFunction(ResourceFamily::GaussianBump, {base, amplitude, center, width});
}

ResourceFunction ResourceFunction::cosine_bump(double base, double amplitude, double center,
                                               double halfwidth) {
    if (halfwidth <= 0.0) throw validation_error("resource: cosine_bump halfwidth must be > 0");
    return ResourceFunction(ResourceFamily::CosineBump, {base, amplitude, center, halfwidth});
}

ResourceFunction ResourceFunction::two_peaks(double base, double amp1, double center1,
                                             double width1, double amp2, double center2,
                                             double width2) {
    if (width1 <= 0.0 || width2 <= 0.0)
        throw validation_error("resource: two_peaks widths must be > 0");
    return ResourceFunction(ResourceFamily::TwoPeaks,
                            {base, amp1, center1, width1, amp2, center2, width2});
}

double ResourceFunction::value(double x) const {
    switch (family_) {
        case ResourceFamily::Constant:
            return p_[0];
        case ResourceFamily::GaussianBump:
            return p_[0] + p_[1] * gaussian(x, p_[2], p_[3]);
        case ResourceFamily::CosineBump: {
            const double s = (x - p_[2]) / p_[3];
            if (std::fabs(s) >= 1.0) return p_[0];
            const double c = std::cos(0.5 * kPi * s);
            return p_[0] + p_[1] * c * c;
        }
        case ResourceFamily::TwoPeaks:
            return p_[0] + p_[1] * gaussian(x, p_[2], p_[3]) + p_[4] * gaussian(x, p_[5], p_[6]);
    }
    return 0.0; // unreachable
}

std::vector<double> ResourceFunction::sample(const TraitGrid& grid) const {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = value(grid.node(i));
    return out;
}

std::string ResourceFunction::describe() const {
    char buf[256];
    switch (family_) {
        case ResourceFamily::Constant:
            std::snprintf(buf, sizeof(buf), "constant(level=%g)", p_[0]);
            break;
        case ResourceFamily::GaussianBump:
            std::snprintf(buf, sizeof(buf),
                          "gaussian_bump(base=%g, amplitude=%g, center=%g, width=%g)", p_[0],
                          p_[1], p_[2], p_[3]);
            break;
        case ResourceFamily::CosineBump:
            std::snprintf(buf, sizeof(buf),
                          "cosine_bump(base=%g, amplitude=%g, center=%g, halfwidth=%g)", p_[0],
                          p_[1], p_[2], p_[3]);
            break;
        case ResourceFamily::TwoPeaks:
            std::snprintf(buf, sizeof(buf),
                          "two_peaks(base=%g, amp1=%g, center1=%g, width1=%g, amp2=%g, "
                          "center2=%g, width2=%g)",
                          p_[0], p_[1], p_[2], p_[3], p_[4], p_[5], p_[6]);
            break;
    }
    return buf;
}

} // namespace phenolv
