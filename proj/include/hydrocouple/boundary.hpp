#pragma once

#include "hydrocouple/geometry.hpp"
#include "hydrocouple/state.hpp"

namespace hydrocouple {

enum class BoundaryKind {
    Wall,
    Open,             // zero-gradient
    PrescribedDepth,  // depth from a hydrograph, discharge zero-gradient
    Interface,        // covered by links to other cells; uncovered parts act as walls
};

/// Inflow depth h_b(t) = base + r + r sin((t - a) pi / (2a)) for t <= 4a, held at
/// h_b(4a) afterwards. With r = 0 it is a constant depth.
struct Hydrograph {
    double base = 0.0;       // eta_0
    double amplitude = 0.0;  // r
    double period = 1.0;     // a

    double depth(double t) const;
};

struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::Wall;
    Hydrograph hydrograph{};

    static BoundarySpec wall() { return {}; }
    static BoundarySpec open() { return {BoundaryKind::Open, {}}; }
    static BoundarySpec prescribed(Hydrograph h) { return {BoundaryKind::PrescribedDepth, h}; }
};

/// Ghost state behind a 2D boundary face with outward unit normal `n`.
State2D ghost_state_2d(const State2D& interior, Vec2 n, const BoundarySpec& spec, double t);

/// Ghost section behind either channel end: walls mirror A and negate Q.
SectionState ghost_section(const SectionState& interior, const ChannelCrossSection& cs,
                           const BoundarySpec& spec, double t);

} // namespace hydrocouple
