#include "hydrocouple/solver1d.hpp"

#include "hydrocouple/boundary.hpp"
#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hydrocouple {

RoeInterfaceData roe_averages(const SectionState& wl, const SectionState& wr,
                              const ChannelCrossSection& cs_l, const ChannelCrossSection& cs_r) {
    RoeInterfaceData d;
    const bool dry_l = is_dry(cs_l, wl.area);
    const bool dry_r = is_dry(cs_r, wr.area);
    if (dry_l && dry_r) {
        d.inert = true;
        return d;
    }
    const double al = std::max(wl.area, 0.0);
    const double ar = std::max(wr.area, 0.0);
    const double sl = std::sqrt(al);
    const double sr = std::sqrt(ar);
    d.area = 0.5 * (al + ar);
    d.velocity = (sl * section_velocity(cs_l, wl) + sr * section_velocity(cs_r, wr)) / (sl + sr);
    d.width = 0.5 * (cs_l.width + cs_r.width);
    d.depth = d.area / d.width;
    d.celerity = std::sqrt(kGravity * d.depth);
    if (!(d.celerity > 0.0)) {
        d.inert = true;
        return d;
    }
    ChannelCrossSection avg;
    avg.width = d.width;
    avg.manning_n = 0.5 * (cs_l.manning_n + cs_r.manning_n);
    d.friction_slope = friction_slope(avg, d.area, d.area * d.velocity);
    d.lambda1 = d.velocity - d.celerity;
    d.lambda2 = d.velocity + d.celerity;
    return d;
}

std::pair<double, double> wave_strengths(const RoeInterfaceData& d, double d_area,
                                         double d_discharge) {
    if (d.inert) {
        return {0.0, 0.0};
    }
    const double two_c = 2.0 * d.celerity;
    return {(d.lambda2 * d_area - d_discharge) / two_c, (-d.lambda1 * d_area + d_discharge) / two_c};
}

std::pair<double, double> source_strengths(const RoeInterfaceData& d, double dx, double d_bed,
                                           double d_depth, double d_area) {
    if (d.inert) {
        return {0.0, 0.0};
    }
    const double bracket = -d_bed - d.friction_slope * dx - d_depth + d_area / d.width;
    const double beta1 = -kGravity * d.area / (2.0 * d.celerity) * bracket;
    return {beta1, -beta1};
}

double entropy_fix(double lambda_left, double lambda_right) {
    if (lambda_left < 0.0 && 0.0 < lambda_right) {
        return 0.25 * (lambda_right - lambda_left);
    }
    return 0.0;
}

std::pair<double, double> cell_eigenvalues(const ChannelCrossSection& cs, const SectionState& w) {
    const double u = section_velocity(cs, w);
    const double c = std::sqrt(kGravity * std::max(w.area, 0.0) / cs.width);
    return {u - c, u + c};
}

namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

} // namespace

Fluctuation interface_fluctuation(const SectionState& wl, const ChannelCrossSection& cs_l,
                                  const SectionState& wr, const ChannelCrossSection& cs_r,
                                  double dx, bool with_entropy_fix) {
    Fluctuation out;
    const RoeInterfaceData d = roe_averages(wl, wr, cs_l, cs_r);
    if (d.inert) {
        return out;
    }
    const double d_area = wr.area - wl.area;
    const double d_discharge = wr.discharge - wl.discharge;
    const double d_bed = cs_r.bed_elevation - cs_l.bed_elevation;
    const double d_depth = wr.area / cs_r.width - wl.area / cs_l.width;

    const auto [a1, a2] = wave_strengths(d, d_area, d_discharge);
    const auto [b1, b2] = source_strengths(d, dx, d_bed, d_depth, d_area);
    const auto [l1_left, l2_left] = cell_eigenvalues(cs_l, wl);
    const auto [l1_right, l2_right] = cell_eigenvalues(cs_r, wr);
    const double nu1 = with_entropy_fix ? entropy_fix(l1_left, l1_right) : 0.0;
    const double nu2 = with_entropy_fix ? entropy_fix(l2_left, l2_right) : 0.0;
    out.entropy_fix_active = nu1 > 0.0 || nu2 > 0.0;

    const double lambda[2] = {d.lambda1, d.lambda2};
    const double alpha[2] = {a1, a2};
    const double beta[2] = {b1, b2};
    const double nu[2] = {nu1, nu2};
    for (int m = 0; m < 2; ++m) {
        const double gamma = lambda[m] * alpha[m] - beta[m];
        const double s = sgn(lambda[m]);
        const double plus = 0.5 * (1.0 + s) * gamma + nu[m] * alpha[m];
        const double minus = 0.5 * (1.0 - s) * gamma - nu[m] * alpha[m];
        out.to_right.area += plus;
        out.to_right.discharge += plus * lambda[m];
        out.to_left.area += minus;
        out.to_left.discharge += minus * lambda[m];
    }
    return out;
}

ChannelField step_1d(const ChannelGrid1D& channel, const ChannelField& states, double dt, double t,
                     Step1DStats* stats) {
    const int n = channel.size();
    if (static_cast<int>(states.size()) != n) {
        throw DomainError("channel state count does not match the grid");
    }
    std::vector<SectionState> w(n + 2);
    std::vector<ChannelCrossSection> cs(n + 2);
    for (int i = 0; i < n; ++i) {
        w[i + 1] = states[i].section();
        cs[i + 1] = channel.sections[i];
    }
    cs[0] = channel.sections.front();
    cs[n + 1] = channel.sections.back();
    w[0] = ghost_section(w[1], cs[0], channel.upstream, t);
    w[n + 1] = ghost_section(w[n], cs[n + 1], channel.downstream, t);

    std::vector<SectionState> incoming(n + 2);
    for (int k = 0; k + 1 < n + 2; ++k) {
        const int i_cell = std::min(std::max(k - 1, 0), n - 1);
        const int j_cell = std::min(k, n - 1);
        const double dx = 0.5 * (channel.dx(i_cell) + channel.dx(j_cell));
        const bool wall = (k == 0 && channel.upstream.kind == BoundaryKind::Wall) ||
                          (k == n && channel.downstream.kind == BoundaryKind::Wall);
        const Fluctuation f = interface_fluctuation(w[k], cs[k], w[k + 1], cs[k + 1], dx, !wall);
        incoming[k].area += f.to_left.area;
        incoming[k].discharge += f.to_left.discharge;
        incoming[k + 1].area += f.to_right.area;
        incoming[k + 1].discharge += f.to_right.discharge;
        if (stats != nullptr && f.entropy_fix_active) {
            ++stats->entropy_fix_interfaces;
        }
    }

    ChannelField next = states;
    for (int i = 0; i < n; ++i) {
        const double r = dt / channel.dx(i);
        State1D& s = next[i];
        s.area = states[i].area - r * incoming[i + 1].area;
        s.discharge = states[i].discharge - r * incoming[i + 1].discharge;
        if (s.area < 0.0) {
            if (s.area < -kNegativeDepthTolerance * channel.sections[i].width) {
                throw StabilityError("negative wetted area " + std::to_string(s.area) +
                                     " in channel cell " + std::to_string(i) +
                                     " at t = " + std::to_string(t) + " (time step too large)");
            }
            s.area = 0.0;
        }
        if (is_dry(channel.sections[i], s.area)) {
            s.discharge = 0.0;
        }
    }
    return next;
}

} // namespace hydrocouple
