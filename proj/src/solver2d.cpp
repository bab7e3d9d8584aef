#include "hydrocouple/solver2d.hpp"

#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hydrocouple {

State2D rotate(const State2D& w, Vec2 n) {
    return {w.h, n.x * w.qx + n.y * w.qy, -n.y * w.qx + n.x * w.qy};
}

State2D unrotate(const State2D& w, Vec2 n) {
    return {w.h, n.x * w.qx - n.y * w.qy, n.y * w.qx + n.x * w.qy};
}

EdgeFlux physical_flux_x(const State2D& w) {
    if (w.h < 0.0) {
        throw DomainError("negative depth in flux evaluation");
    }
    if (w.h == 0.0 && (w.qx != 0.0 || w.qy != 0.0)) {
        throw DomainError("dry state carrying discharge");
    }
    const double u = velocity_x(w);
    const double v = velocity_y(w);
    const double hu = w.h * u;
    return {hu, hu * u + hydrostatic_pressure(w.h), hu * v};
}

WaveSpeeds wave_speeds(const State2D& wl, const State2D& wr) {
    const double ul = velocity_x(wl);
    const double ur = velocity_x(wr);
    const double cl = std::sqrt(kGravity * std::max(wl.h, 0.0));
    const double cr = std::sqrt(kGravity * std::max(wr.h, 0.0));
    return {std::min({ul - cl, ul, ur - cr, ur}), std::max({ul + cl, ul, ur + cr, ur})};
}

EdgeFlux hll_flux(const State2D& wl, const State2D& wr) {
    if (wl == wr) {
        return physical_flux_x(wl);
    }
    const auto [sl, sr] = wave_speeds(wl, wr);
    if (sl >= 0.0) {
        return physical_flux_x(wl);
    }
    if (sr <= 0.0) {
        return physical_flux_x(wr);
    }
    const EdgeFlux fl = physical_flux_x(wl);
    const EdgeFlux fr = physical_flux_x(wr);
    return (1.0 / (sr - sl)) * (sr * fl - sl * fr + (sl * sr) * (wr - wl));
}

EdgeFlux normal_flux(const State2D& wl, const State2D& wr, Vec2 n) {
    return unrotate(hll_flux(rotate(wl, n), rotate(wr, n)), n);
}

HydrostaticPair hydrostatic_pair(const State2D& wl, double zb_l, const State2D& wr, double zb_r) {
    const double zmax = std::max(zb_l, zb_r);
    const auto reconstruct = [zmax](const State2D& w, double zb) {
        if (zb >= zmax) {
            return w;
        }
        const double h = std::max(0.0, w.h + zb - zmax);
        if (w.h <= 0.0 || h == 0.0) {
            return State2D{h, 0.0, 0.0};
        }
        const double ratio = h / w.h;
        return State2D{h, w.qx * ratio, w.qy * ratio};
    };
    HydrostaticPair out;
    out.left = reconstruct(wl, zb_l);
    out.right = reconstruct(wr, zb_r);
    out.source_left = 0.5 * kGravity * (wl.h * wl.h - out.left.h * out.left.h);
    out.source_right = 0.5 * kGravity * (wr.h * wr.h - out.right.h * out.right.h);
    return out;
}

EdgeContribution edge_contribution(const State2D& wl, double zb_l, const State2D& wr, double zb_r,
                                   Vec2 n) {
    const HydrostaticPair hp = hydrostatic_pair(rotate(wl, n), zb_l, rotate(wr, n), zb_r);
    const EdgeFlux phi = hll_flux(hp.left, hp.right);
    EdgeFlux left = phi;
    left.qx += hp.source_left;
    EdgeFlux right = phi;
    right.qx += hp.source_right;
    return {unrotate(left, n), -1.0 * unrotate(right, n)};
}

EdgeContribution balanced_edge_contribution(const State2D& wl, double zb_l, const State2D& wr,
                                            double zb_r, Vec2 n) {
    const HydrostaticPair hp = hydrostatic_pair(rotate(wl, n), zb_l, rotate(wr, n), zb_r);
    const EdgeFlux phi = hll_flux(hp.left, hp.right);
    // phi + g/2 (H^2 - H~^2) - g/2 H^2 = phi - g/2 H~^2
    EdgeFlux left = phi;
    left.qx -= hydrostatic_pressure(hp.left.h);
    EdgeFlux right = phi;
    right.qx -= hydrostatic_pressure(hp.right.h);
    return {unrotate(left, n), -1.0 * unrotate(right, n)};
}

State2D friction_source_2d(const State2D& w, double manning_n, double dt) {
    if (manning_n == 0.0 || is_dry(w)) {
        return {};
    }
    const double qmag = std::hypot(w.qx, w.qy);
    if (qmag == 0.0) {
        return {};
    }
    const double k = dt * kGravity * manning_n * manning_n * qmag / std::pow(w.h, 7.0 / 3.0);
    const double factor = std::min(k, 1.0);
    return {0.0, -factor * w.qx, -factor * w.qy};
}

Field2D flux_residual(const Mesh2D& mesh, const Field2D& states, double t,
                      std::span<const ExternalFlux> external) {
    Field2D res(mesh.blocks.size());
    for (std::size_t b = 0; b < mesh.blocks.size(); ++b) {
        const Grid2D& g = mesh.blocks[b];
        const auto& w = states[b];
        auto& r = res[b];
        r.assign(g.cell_count(), State2D{});

        for (int iy = 0; iy < g.ny; ++iy) {
            for (int ix = 0; ix + 1 < g.nx; ++ix) {
                const int j = g.index(ix, iy);
                const int k = j + 1;
                const auto e = balanced_edge_contribution(w[j], g.bed[j], w[k], g.bed[k], {1.0, 0.0});
                r[j] += g.dy * e.left;
                r[k] += g.dy * e.right;
            }
        }
        for (int iy = 0; iy + 1 < g.ny; ++iy) {
            for (int ix = 0; ix < g.nx; ++ix) {
                const int j = g.index(ix, iy);
                const int k = j + g.nx;
                const auto e = balanced_edge_contribution(w[j], g.bed[j], w[k], g.bed[k], {0.0, 1.0});
                r[j] += g.dx * e.left;
                r[k] += g.dx * e.right;
            }
        }

        for (Side s : kAllSides) {
            const BoundarySpec& spec = g.boundary[static_cast<int>(s)];
            const Vec2 n = outward_normal(s);
            const auto& linked = g.linked_length[static_cast<int>(s)];
            for (int f = 0; f < g.face_count(s); ++f) {
                double len = g.face_length(s);
                if (spec.kind == BoundaryKind::Interface) {
                    len -= linked[f];
                    if (len <= 1e-12 * g.face_length(s)) {
                        continue;
                    }
                }
                const int c = g.boundary_cell(s, f);
                const State2D ghost = ghost_state_2d(w[c], n, spec, t);
                r[c] += len * balanced_edge_contribution(w[c], g.bed[c], ghost, g.bed[c], n).left;
            }
        }
    }

    for (const BlockLink& l : mesh.links) {
        const Grid2D& ga = mesh.blocks[l.block_a];
        const Grid2D& gb = mesh.blocks[l.block_b];
        const auto e = balanced_edge_contribution(states[l.block_a][l.cell_a], ga.bed[l.cell_a],
                                                  states[l.block_b][l.cell_b], gb.bed[l.cell_b], l.normal);
        res[l.block_a][l.cell_a] += l.length * e.left;
        res[l.block_b][l.cell_b] += l.length * e.right;
    }

    for (const ExternalFlux& x : external) {
        const double p = hydrostatic_pressure(states[x.block][x.cell].h);
        EdgeFlux f = x.outward;
        f.qx -= p * x.normal.x;
        f.qy -= p * x.normal.y;
        res[x.block][x.cell] += x.length * f;
    }
    return res;
}

Field2D step_2d(const Mesh2D& mesh, const Field2D& states, double dt, double t,
                std::span<const ExternalFlux> external) {
    const Field2D res = flux_residual(mesh, states, t, external);
    Field2D next = states;
    for (std::size_t b = 0; b < mesh.blocks.size(); ++b) {
        const Grid2D& g = mesh.blocks[b];
        const double scale = dt / g.cell_area();
        for (int c = 0; c < g.cell_count(); ++c) {
            State2D w = states[b][c] - scale * res[b][c];
            if (w.h < 0.0) {
                if (w.h < -kNegativeDepthTolerance) {
                    throw StabilityError("negative depth " + std::to_string(w.h) + " in block '" +
                                         g.name + "' cell " + std::to_string(c) +
                                         " at t = " + std::to_string(t) + " (time step too large)");
                }
                w.h = 0.0;
            }
            if (is_dry(w)) {
                w.qx = 0.0;
                w.qy = 0.0;
            } else {
                w += friction_source_2d(w, g.manning_n, dt);
            }
            next[b][c] = w;
        }
    }
    return next;
}

} // namespace hydrocouple
