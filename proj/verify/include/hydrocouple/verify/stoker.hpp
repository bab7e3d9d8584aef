#pragma once

// Exact solution of the frictionless dam break over a wet bed.

#include <span>

namespace hydrocouple::verify {

struct Stoker {
    double h_left = 0.0;
    double h_right = 0.0;
    double gravity = 9.81;
    double h_star = 0.0;       // depth between rarefaction and shock
    double u_star = 0.0;
    double shock_speed = 0.0;

    /// Solves for the middle state; requires h_left > h_right > 0.
    Stoker(double h_left, double h_right, double gravity = 9.81);

    /// Depth and velocity at similarity coordinate xi = (x - x_dam) / t.
    double depth(double xi) const;
    double velocity(double xi) const;

    double depth(double x, double t, double x_dam) const { return depth((x - x_dam) / t); }

    /// Exact mean depth over [xa, xb] at time t.
    double mean_depth(double xa, double xb, double t, double x_dam) const;
};

enum class Sampling { CellAverage, CellCentre };

/// Mean absolute depth error over [x0, x1] for cell depths on a uniform grid,
/// against exact cell averages or exact values at cell centres.
double l1_depth_error(const Stoker& exact, std::span<const double> depths, double x0, double x1,
                      double t, double x_dam, Sampling sampling = Sampling::CellAverage);

} // namespace hydrocouple::verify
