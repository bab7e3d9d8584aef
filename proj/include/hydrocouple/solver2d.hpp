#pragma once

// First-order 2D shallow-water update: rotated HLL fluxes with hydrostatic
// reconstruction of the interface depths, then a split-step Manning friction.

#include "hydrocouple/mesh.hpp"
#include "hydrocouple/state.hpp"

#include <span>
#include <vector>

namespace hydrocouple {

/// One state vector per cell, one array per block.
using Field2D = std::vector<std::vector<State2D>>;

/// Rotation into the frame of unit normal n: (H, q.n, q.t) with t = (-n_y, n_x).
State2D rotate(const State2D& w, Vec2 n);
State2D unrotate(const State2D& w, Vec2 n);

/// g H^2 / 2.
inline double hydrostatic_pressure(double h) { return 0.5 * kGravity * h * h; }

/// x-direction physical flux (q_x, q_x^2/H + g H^2/2, q_x q_y/H).
EdgeFlux physical_flux_x(const State2D& w);

struct WaveSpeeds {
    double left = 0.0;
    double right = 0.0;
};

/// Smallest and largest eigenvalues (u - c, u, u + c) over both states.
WaveSpeeds wave_speeds(const State2D& wl, const State2D& wr);

/// HLL flux for states already rotated into the edge frame.
EdgeFlux hll_flux(const State2D& wl, const State2D& wr);

/// Flux across an edge with unit normal n, in the original frame: T^-1 phi(T wl, T wr).
EdgeFlux normal_flux(const State2D& wl, const State2D& wr, Vec2 n);

struct HydrostaticPair {
    State2D left;
    State2D right;
    double source_left = 0.0;   // g/2 (H_L^2 - H~_L^2)
    double source_right = 0.0;  // g/2 (H_R^2 - H~_R^2)
};

/// Interface depths H~_p = max(0, H_p + zb_p - max(zb_L, zb_R)), discharges scaled
/// by H~_p / H_p. Works in any frame; the sources are normal-momentum corrections.
HydrostaticPair hydrostatic_pair(const State2D& wl, double zb_l, const State2D& wr, double zb_r);

/// Outward flux per unit length seen by each side of one edge, original frame,
/// pressure corrections included.
struct EdgeContribution {
    EdgeFlux left;
    EdgeFlux right;
};

EdgeContribution edge_contribution(const State2D& wl, double zb_l, const State2D& wr, double zb_r,
                                   Vec2 n);

/// edge_contribution less each side's own pressure g H^2/2 n. The two agree once
/// summed over a closed cell; this form leaves still water exactly at rest.
EdgeContribution balanced_edge_contribution(const State2D& wl, double zb_l, const State2D& wr,
                                            double zb_r, Vec2 n);

/// Explicit Manning increment dt * S_b, clipped so the momentum cannot reverse.
State2D friction_source_2d(const State2D& w, double manning_n, double dt);

/// Flux supplied from outside the 2D mesh (the channel), per unit length, leaving `cell`
/// through a face with outward unit normal `normal`.
struct ExternalFlux {
    int block = -1;
    int cell = -1;
    double length = 0.0;
    EdgeFlux outward{};
    Vec2 normal{};
};

/// Sum of length-weighted outward fluxes per cell (the bracket of the FV update).
Field2D flux_residual(const Mesh2D& mesh, const Field2D& states, double t,
                      std::span<const ExternalFlux> external);

/// One explicit step of every block. Throws StabilityError on a negative depth.
Field2D step_2d(const Mesh2D& mesh, const Field2D& states, double dt, double t,
                std::span<const ExternalFlux> external = {});

} // namespace hydrocouple
