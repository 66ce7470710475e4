#include "phenolv/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phenolv/errors.hpp"

namespace phenolv {

void ModelParams::validate() const {
    if (!(b > 0.0)) throw validation_error("params.b must be > 0");
    if (!(c > 0.0)) throw validation_error("params.c must be > 0");
    if (!(m_bar > 0.0)) throw validation_error("params.m_bar must be > 0");
}

ResourceProfile profile_resource(const ResourceFunction& d, const TraitGrid& grid) {
    ResourceProfile p;
    const std::vector<double> vals = d.sample(grid);
    p.argmax = 0;
    p.d_min = p.d_max = vals[0];
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] > p.d_max) {
            p.d_max = vals[i];
            p.argmax = i;
        }
        p.d_min = std::min(p.d_min, vals[i]);
    }
    p.xbar = grid.node(p.argmax);
    p.unique_max = true;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i != p.argmax && vals[i] == p.d_max) {
            p.unique_max = false;
            break;
        }
    }
    return p;
}

AssumptionReport validate_assumptions(const ModelParams& params, const TraitGrid& grid,
                                      const std::vector<double>& u0,
                                      const std::vector<double>& v0) {
    params.validate();
    AssumptionReport rep;

    const double r1 = grid.quadrature(u0);
    const double r2 = grid.quadrature(v0);
    rep.r1_init = r1;
    rep.r2_init = r2;
    rep.initial_masses_positive =
        std::isfinite(r1) && std::isfinite(r2) && r1 > 0.0 && r2 > 0.0;
    if (!rep.initial_masses_positive)
        rep.notes.push_back("initial masses must be positive and finite");

    const ResourceProfile prof = profile_resource(params.d, grid);
    rep.d_min = prof.d_min;
    rep.d_max = prof.d_max;
    rep.xbar = prof.xbar;
    rep.d_bounded = std::isfinite(prof.d_min) && std::isfinite(prof.d_max) &&
                    prof.d_min > 0.0 && prof.d_min < prof.d_max;
    if (!rep.d_bounded) rep.notes.push_back("d(x) must satisfy 0 < d_min < d_max on the grid");
    rep.d_single_max = prof.unique_max;
    if (!rep.d_single_max)
        rep.notes.push_back("grid maximum of d(x) is attained at more than one node");

    // Candidate limit masses: d_max = r1 + b r2, m_bar = c r1 + r2.
    const double det = 1.0 - params.b * params.c;
    if (std::fabs(det) <= 1e-12 * std::max(1.0, params.b * params.c)) {
        rep.coexistence_masses_exist = false;
        rep.notes.push_back("limit-mass system is singular (b*c = 1)");
    } else {
        rep.r1_star = (prof.d_max - params.b * params.m_bar) / det;
        rep.r2_star = params.m_bar - params.c * rep.r1_star;
        rep.coexistence_masses_exist = rep.r1_star > 0.0 && rep.r2_star > 0.0;
        if (!rep.coexistence_masses_exist)
            rep.notes.push_back("limit masses are not both positive");
    }

    // Tail negativity of u's fitness at the candidate limit, checked on the
    // outer 10% of the domain length at each end.
    if (rep.coexistence_masses_exist) {
        const double band = 0.1 * grid.length();
        const double shift = rep.r1_star + params.b * rep.r2_star;
        double beta = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double x = grid.node(i);
            if (x <= grid.x_lo() + band || x >= grid.x_hi() - band)
                beta = std::max(beta, params.d.value(x) - shift);
        }
        rep.beta_outer = beta;
        rep.tail_negative = beta < 0.0;
        if (!rep.tail_negative)
            rep.notes.push_back("u fitness is not negative on the outer band at the limit masses");
    }

    // Informational: the bump should have decayed to its base level by the
    // domain ends, otherwise the truncation is too tight.
    rep.boundary_flat =
        std::fabs(params.d.value(grid.x_lo()) - params.d.base_level()) <= 1e-10 &&
        std::fabs(params.d.value(grid.x_hi()) - params.d.base_level()) <= 1e-10;

    return rep;
}

} // namespace phenolv
