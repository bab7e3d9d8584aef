#include "hydrocouple/verify/properties.hpp"

#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/solver2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace hydrocouple::verify {

namespace {

State2D random_state(std::mt19937_64& rng, double h_min = 1e-4) {
    std::uniform_real_distribution<double> depth(h_min, 3.0);
    std::uniform_real_distribution<double> vel(-3.0, 3.0);
    const double h = depth(rng);
    return {h, h * vel(rng), h * vel(rng)};
}

double rel_error(const EdgeFlux& a, const EdgeFlux& b) {
    const double scale = std::max({1.0, std::abs(b.h), std::abs(b.qx), std::abs(b.qy)});
    return std::max({std::abs(a.h - b.h), std::abs(a.qx - b.qx), std::abs(a.qy - b.qy)}) / scale;
}

Mesh2D walled_block(int nx, int ny, double dx, double dy, double manning_n) {
    Mesh2D mesh;
    Grid2D g("block", nx, ny, dx, dy, {0.0, 0.0});
    g.manning_n = manning_n;
    g.bed.assign(static_cast<std::size_t>(nx * ny), 0.0);
    mesh.blocks.push_back(std::move(g));
    return mesh;
}

double cfl_step(const Mesh2D& mesh, const Field2D& field) {
    double dt = 1e300;
    for (std::size_t b = 0; b < mesh.blocks.size(); ++b) {
        const Grid2D& g = mesh.blocks[b];
        for (const State2D& w : field[b]) {
            if (is_dry(w)) {
                continue;
            }
            const double speed =
                std::hypot(velocity_x(w), velocity_y(w)) + std::sqrt(kGravity * w.h);
            dt = std::min(dt, std::min(g.dx, g.dy) / speed);
        }
    }
    return kDefaultCfl * dt;
}

double volume(const Mesh2D& mesh, const Field2D& field) {
    double v = 0.0;
    for (std::size_t b = 0; b < mesh.blocks.size(); ++b) {
        for (const State2D& w : field[b]) {
            v += w.h * mesh.blocks[b].cell_area();
        }
    }
    return v;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

} // namespace

PropertyReport hll_consistency(long samples, std::uint64_t seed) {
    PropertyReport r{"hll_flux(w, w) = F(w)", samples, 0.0, 1e-13};
    std::mt19937_64 rng(seed);
    for (long k = 0; k < samples; ++k) {
        const State2D w = random_state(rng);
        r.worst = std::max(r.worst, rel_error(hll_flux(w, w), physical_flux_x(w)));
    }
    r.passed = r.worst <= r.tolerance;
    return r;
}

PropertyReport normal_flux_rotation(long samples, std::uint64_t seed) {
    PropertyReport r{"normal_flux rotation", samples, 0.0, 1e-13};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    for (long k = 0; k < samples; ++k) {
        const State2D wl = random_state(rng);
        const State2D wr = random_state(rng);
        const double a = angle(rng);
        const Vec2 n{std::cos(a), std::sin(a)};
        // T^-1 phi(T wl, T wr) rebuilt by hand, and the flux through -n from the other side.
        const EdgeFlux f = normal_flux(wl, wr, n);
        const EdgeFlux rot = hll_flux(rotate(wl, n), rotate(wr, n));
        const State2D back = unrotate({rot.h, rot.qx, rot.qy}, n);
        r.worst = std::max(r.worst, rel_error(f, {back.h, back.qx, back.qy}));
        r.worst = std::max(r.worst, rel_error(-1.0 * normal_flux(wr, wl, -n), f));
    }
    r.passed = r.worst <= r.tolerance;
    return r;
}

PropertyReport step_rotation(long samples, std::uint64_t seed) {
    PropertyReport r{"x/y step rotation", samples, 0.0, 1e-13};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> bed(0.0, 0.5);
    const Vec2 ny{0.0, 1.0};
    for (long k = 0; k < samples; ++k) {
        const int n = 12;
        Mesh2D along_x = walled_block(n, 1, 0.1, 0.1, 0.02);
        Mesh2D along_y = walled_block(1, n, 0.1, 0.1, 0.02);
        Field2D fx(1, std::vector<State2D>(n));
        Field2D fy(1, std::vector<State2D>(n));
        for (int i = 0; i < n; ++i) {
            const double z = bed(rng);
            along_x.blocks[0].bed[i] = z;
            along_y.blocks[0].bed[i] = z;
            fx[0][i] = random_state(rng, 0.0);
            fy[0][i] = unrotate(fx[0][i], ny);
        }
        const double dt = cfl_step(along_x, fx);
        const Field2D nx_field = step_2d(along_x, fx, dt, 0.0);
        const Field2D ny_field = step_2d(along_y, fy, dt, 0.0);
        for (int i = 0; i < n; ++i) {
            const State2D a = nx_field[0][i];
            const State2D b = rotate(ny_field[0][i], ny);
            r.worst = std::max(r.worst, rel_error({a.h, a.qx, a.qy}, {b.h, b.qx, b.qy}));
        }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
}

PropertyReport positivity(long samples, std::uint64_t seed) {
    PropertyReport r{"positivity under CFL", samples, 0.0, 0.0};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int steps = 20;
    double min_depth = 0.0;
    bool threw = false;
    for (long k = 0; k < samples && !threw; ++k) {
        const int nx = 30;
        const int ny = 3;
        Mesh2D mesh = walled_block(nx, ny, 0.05, 0.05, 0.009);
        Field2D field(1, std::vector<State2D>(nx * ny));
        const double h_left = 0.05 + unit(rng);
        const double h_right = unit(rng) < 0.5 ? 0.0 : 1e-3 * unit(rng);
        const double dam = 0.2 + 0.6 * unit(rng);
        for (int c = 0; c < nx * ny; ++c) {
            const Grid2D& g = mesh.blocks[0];
            mesh.blocks[0].bed[c] = 0.1 * unit(rng);
            const bool left = g.ix(c) < static_cast<int>(dam * nx);
            const double h = left ? h_left : h_right;
            field[0][c] = {h, h * (unit(rng) - 0.5), h * (unit(rng) - 0.5)};
        }
        try {
            for (int s = 0; s < steps; ++s) {
                field = step_2d(mesh, field, cfl_step(mesh, field), 0.0);
                for (const State2D& w : field[0]) {
                    min_depth = std::min(min_depth, w.h);
                }
            }
        } catch (const StabilityError&) {
            threw = true;
        }
    }
    r.worst = -min_depth;
    r.passed = !threw && min_depth >= 0.0;
    r.detail = threw ? "negative depth rejected during a run" : fmt("min H = %.3e", min_depth);
    return r;
}

PropertyReport volume_conservation_2d(int steps, std::uint64_t seed) {
    PropertyReport r{"volume conservation, closed block", steps, 0.0, 1e-12};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = 20;
    Mesh2D mesh = walled_block(n, n, 0.05, 0.05, 0.009);
    Field2D field(1, std::vector<State2D>(n * n));
    for (int c = 0; c < n * n; ++c) {
        mesh.blocks[0].bed[c] = 0.2 * unit(rng);
        const double h = unit(rng) < 0.2 ? 0.0 : 0.05 + 0.3 * unit(rng);
        field[0][c] = {h, h * (unit(rng) - 0.5), h * (unit(rng) - 0.5)};
    }
    const double v0 = volume(mesh, field);
    for (int s = 0; s < steps; ++s) {
        field = step_2d(mesh, field, cfl_step(mesh, field), 0.0);
        r.worst = std::max(r.worst, std::abs(volume(mesh, field) - v0) / v0);
    }
    r.passed = r.worst <= r.tolerance;
    return r;
}

PropertyReport lake_at_rest_2d(int steps, std::uint64_t seed) {
    PropertyReport r{"lake at rest, random bed", steps, 0.0, 1e-12};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = 20;
    const double eta = 1.0;
    Mesh2D mesh = walled_block(n, n, 0.05, 0.05, 0.009);
    Field2D field(1, std::vector<State2D>(n * n));
    for (int c = 0; c < n * n; ++c) {
        // Some cells stand above the surface as dry islands.
        const double z = 1.2 * unit(rng);
        mesh.blocks[0].bed[c] = z;
        field[0][c] = {std::max(0.0, eta - z), 0.0, 0.0};
    }
    double eta_err = 0.0;
    double q_err = 0.0;
    for (int s = 0; s < steps; ++s) {
        field = step_2d(mesh, field, cfl_step(mesh, field), 0.0);
        for (int c = 0; c < n * n; ++c) {
            const State2D& w = field[0][c];
            if (w.h > 0.0) {
                eta_err = std::max(eta_err, std::abs(w.h + mesh.blocks[0].bed[c] - eta));
            }
            q_err = std::max({q_err, std::abs(w.qx), std::abs(w.qy)});
        }
    }
    r.worst = eta_err;
    r.passed = eta_err <= 1e-12 && q_err <= 1e-13;
    r.detail = fmt("max |eta - eta0| = %.3e (<= 1e-12), max |q| = %.3e (<= 1e-13)", eta_err, q_err);
    return r;
}

} // namespace hydrocouple::verify
