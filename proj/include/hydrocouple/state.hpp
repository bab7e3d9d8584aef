#pragma once

#include "hydrocouple/constants.hpp"

#include <cmath>

namespace hydrocouple {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }

/// Depth-integrated 2D state (H, q_x, q_y). Also used for the three-component
/// edge fluxes, which share its layout.
struct State2D {
    double h = 0.0;
    double qx = 0.0;
    double qy = 0.0;

    State2D& operator+=(const State2D& o) {
        h += o.h;
        qx += o.qx;
        qy += o.qy;
        return *this;
    }
    State2D& operator-=(const State2D& o) {
        h -= o.h;
        qx -= o.qx;
        qy -= o.qy;
        return *this;
    }
    State2D& operator*=(double s) {
        h *= s;
        qx *= s;
        qy *= s;
        return *this;
    }

    friend State2D operator+(State2D a, const State2D& b) { return a += b; }
    friend State2D operator-(State2D a, const State2D& b) { return a -= b; }
    friend State2D operator*(double s, State2D a) { return a *= s; }
    friend State2D operator*(State2D a, double s) { return a *= s; }
    friend bool operator==(const State2D&, const State2D&) = default;
};

using EdgeFlux = State2D;

inline bool is_dry(const State2D& w) { return w.h <= kDryDepth; }

inline double velocity_x(const State2D& w) { return is_dry(w) ? 0.0 : w.qx / w.h; }
inline double velocity_y(const State2D& w) { return is_dry(w) ? 0.0 : w.qy / w.h; }

} // namespace hydrocouple
