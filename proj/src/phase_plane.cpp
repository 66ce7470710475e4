#include "phenolv/phase_plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phenolv/errors.hpp"

namespace phenolv::lv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool rel_equal(double a, double b, double tol = 1e-12) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1.0});
}

void rhs(const LVParams& p, double y, double x, double& dy, double& dx) {
    dy = y * (p.d_bar - y - p.b * x);
    dx = x * (p.m_bar - p.c * y - x);
}

} // namespace

void LVParams::validate() const {
    if (!(d_bar > 0.0)) throw validation_error("lv params: d_bar must be > 0");
    if (!(m_bar > 0.0)) throw validation_error("lv params: m_bar must be > 0");
    if (!(b > 0.0)) throw validation_error("lv params: b must be > 0");
    if (!(c > 0.0)) throw validation_error("lv params: c must be > 0");
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Coexistence_i: return "coexistence";
        case CaseTag::ExclusionU_ii: return "exclusion_u_wins";
        case CaseTag::ExclusionV_iii: return "exclusion_v_wins";
        case CaseTag::Degenerate_iv: return "degenerate_line";
        case CaseTag::Bistable_v: return "bistable";
        case CaseTag::NonGeneric: return "non_generic";
    }
    return "?";
}

CaseTag classify(const LVParams& p) {
    p.validate();
    if (rel_equal(p.b * p.c, 1.0) && rel_equal(p.b * p.m_bar, p.d_bar))
        return CaseTag::Degenerate_iv;
    // Compare c vs m_bar/d_bar and b vs d_bar/m_bar in cross-multiplied form.
    if (rel_equal(p.c * p.d_bar, p.m_bar) || rel_equal(p.b * p.m_bar, p.d_bar))
        return CaseTag::NonGeneric;
    const bool c_small = p.c * p.d_bar < p.m_bar;
    const bool b_small = p.b * p.m_bar < p.d_bar;
    if (c_small && b_small) return CaseTag::Coexistence_i;
    if (!c_small && b_small) return CaseTag::ExclusionU_ii;
    if (c_small && !b_small) return CaseTag::ExclusionV_iii;
    return CaseTag::Bistable_v;
}

EquilibriumReport equilibria(const LVParams& p) {
    p.validate();
    EquilibriumReport rep;
    rep.exclusion_u = {p.d_bar, 0.0};
    rep.exclusion_v = {0.0, p.m_bar};
    rep.origin = {0.0, 0.0};
    rep.case_tag = classify(p);
    rep.lambda1 = rep.lambda2 = rep.k = rep.a2 = kNaN;

    const double det = 1.0 - p.b * p.c;
    if (!rel_equal(p.b * p.c, 1.0)) {
        const double y = (p.d_bar - p.b * p.m_bar) / det;
        const double x = (p.m_bar - p.c * p.d_bar) / det;
        if (y > 0.0 && x > 0.0) rep.coexistence = PhasePoint{y, x};
    }
    if (rep.case_tag == CaseTag::Bistable_v) {
        const SaddleSpectrum sp = saddle_spectrum(p);
        const LocalQuadratic lq = local_quadratic(p);
        rep.lambda1 = sp.lambda1;
        rep.lambda2 = sp.lambda2;
        rep.k = sp.k;
        rep.a2 = lq.a2;
    }
    return rep;
}

SaddleSpectrum saddle_spectrum(const LVParams& p) {
    if (classify(p) != CaseTag::Bistable_v)
        throw validation_error("saddle_spectrum: parameters are not in the bistable case");
    const EquilibriumReport basic = [&] {
        EquilibriumReport r;
        const double det = 1.0 - p.b * p.c;
        r.coexistence = PhasePoint{(p.d_bar - p.b * p.m_bar) / det,
                                   (p.m_bar - p.c * p.d_bar) / det};
        return r;
    }();
    const double ys = basic.coexistence->y;
    const double xs = basic.coexistence->x;

    const double disc = xs * xs + ys * ys + (4.0 * p.b * p.c - 2.0) * xs * ys;
    const double root = std::sqrt(disc);
    SaddleSpectrum sp;
    sp.saddle = {ys, xs};
    sp.lambda1 = 0.5 * (-(xs + ys) - root);
    sp.lambda2 = 0.5 * (-(xs + ys) + root);
    sp.k = (ys + sp.lambda1) / (-p.b * ys);

    double vy = -p.b * ys / (ys + sp.lambda1);
    double vx = 1.0;
    const double norm = std::hypot(vy, vx);
    sp.stable_direction = {vy / norm, vx / norm};
    return sp;
}

LocalQuadratic local_quadratic(const LVParams& p) {
    const SaddleSpectrum sp = saddle_spectrum(p);
    const double ys = sp.saddle.y;
    const double xs = sp.saddle.x;
    const double k = sp.k;
    LocalQuadratic lq;
    lq.k = k;
    lq.a2 = ((p.c - 1.0) * k + (1.0 - p.b) * k * k) / (-ys - xs - 3.0 * sp.lambda1);
    return lq;
}

double SeparatrixCurve::height_at(double y) const {
    if (points.size() < 2) throw simulation_error("separatrix: curve has too few points");
    if (y < points.front().y || y > points.back().y)
        throw validation_error("basin query: Y outside the computed separatrix range [" +
                               std::to_string(points.front().y) + ", " +
                               std::to_string(points.back().y) + "]");
    auto it = std::lower_bound(points.begin(), points.end(), y,
                               [](const PhasePoint& p, double v) { return p.y < v; });
    if (it == points.begin()) return it->x;
    const PhasePoint& hi = *it;
    const PhasePoint& lo = *(it - 1);
    if (hi.y == lo.y) return lo.x;
    const double w = (y - lo.y) / (hi.y - lo.y);
    return lo.x + w * (hi.x - lo.x);
}

SeparatrixCurve global_separatrix(const LVParams& p, const SeparatrixOptions& opt) {
    const SaddleSpectrum sp = saddle_spectrum(p);
    const double ys = sp.saddle.y;
    const double xs = sp.saddle.x;

    double eps = opt.eps;
    if (eps <= 0.0) eps = 1e-6 * std::hypot(ys, xs);

    const double box = 10.0 * std::max(p.d_bar, p.m_bar);
    auto stop = [box](double, const std::array<double, 2>& s) {
        return s[0] < 1e-8 || s[1] < 0.0 || std::max(s[0], s[1]) > box;
    };
    auto backward = [&p](double, const std::array<double, 2>& s, std::array<double, 2>& ds) {
        rhs(p, s[0], s[1], ds[0], ds[1]);
        ds[0] = -ds[0];
        ds[1] = -ds[1];
    };

    // Orient the stable eigenvector so that +eps moves toward larger Y.
    double dy = sp.stable_direction.y, dx = sp.stable_direction.x;
    if (dy < 0.0) { dy = -dy; dx = -dx; }

    StepControl ctl = opt.step_control;
    ctl.h_init = std::min(ctl.h_init, 1e-4);

    const std::array<double, 2> seed_up = {ys + eps * dy, xs + eps * dx};
    const std::array<double, 2> seed_dn = {ys - eps * dy, xs - eps * dx};
    auto up = integrate_rk45<2>(backward, 0.0, seed_up, opt.t_max, ctl, stop);
    auto dn = integrate_rk45<2>(backward, 0.0, seed_dn, opt.t_max, ctl, stop);

    SeparatrixCurve curve;
    curve.saddle = sp.saddle;
    curve.local_k = sp.k;
    curve.local_a2 = local_quadratic(p).a2;
    curve.points.reserve(up.y.size() + dn.y.size() + 1);
    // Lower branch runs toward the origin: reverse it into ascending Y.
    for (auto it = dn.y.rbegin(); it != dn.y.rend(); ++it)
        curve.points.push_back({(*it)[0], (*it)[1]});
    curve.points.push_back(sp.saddle);
    for (const auto& s : up.y) curve.points.push_back({s[0], s[1]});

    std::sort(curve.points.begin(), curve.points.end(),
              [](const PhasePoint& a, const PhasePoint& b) { return a.y < b.y; });
    // Drop duplicate Y values (keep the first), then demand strict monotonicity.
    std::vector<PhasePoint> clean;
    clean.reserve(curve.points.size());
    for (const auto& pt : curve.points) {
        if (pt.x < 0.0) continue;
        if (!clean.empty() && pt.y - clean.back().y < 1e-13) continue;
        clean.push_back(pt);
    }
    curve.points = std::move(clean);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        if (curve.points[i].x <= curve.points[i - 1].x)
            throw simulation_error(
                "global_separatrix: computed curve is not monotone; the seed offset eps is "
                "likely too large, retry with a smaller eps");
    }
    if (curve.points.size() < 16)
        throw simulation_error("global_separatrix: too few points; increase t_max");
    return curve;
}

BasinSide basin_query(const SeparatrixCurve& curve, double y0, double x0) {
    if (y0 < 0.0 || x0 < 0.0)
        throw validation_error("basin query: coordinates must be nonnegative");
    const double h = curve.height_at(y0);
    const double tol = 1e-9 * std::max(1.0, curve.saddle.x);
    if (std::fabs(x0 - h) <= tol) return BasinSide::OnSeparatrix;
    return (x0 < h) ? BasinSide::Pwins : BasinSide::Xwins;
}

RkTrajectory<2> integrate_lv(const LVParams& p, double y0, double x0, double t_end,
                             const StepControl& ctl) {
    p.validate();
    if (y0 < 0.0 || x0 < 0.0)
        throw validation_error("integrate_lv: initial data must be nonnegative");
    auto f = [&p](double, const std::array<double, 2>& s, std::array<double, 2>& ds) {
        rhs(p, s[0], s[1], ds[0], ds[1]);
    };
    return integrate_rk45<2>(f, 0.0, {y0, x0}, t_end, ctl);
}

} // namespace phenolv::lv
