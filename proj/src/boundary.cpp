#include "hydrocouple/boundary.hpp"

#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hydrocouple {

double Hydrograph::depth(double t) const {
    const double a = period;
    const double tc = std::min(t, 4.0 * a);
    return base + amplitude + amplitude * std::sin((tc - a) * std::numbers::pi / (2.0 * a));
}

State2D ghost_state_2d(const State2D& interior, Vec2 n, const BoundarySpec& spec, double t) {
    switch (spec.kind) {
    case BoundaryKind::Wall:
    case BoundaryKind::Interface: {
        const double qn = interior.qx * n.x + interior.qy * n.y;
        return {interior.h, interior.qx - 2.0 * qn * n.x, interior.qy - 2.0 * qn * n.y};
    }
    case BoundaryKind::Open:
        return interior;
    case BoundaryKind::PrescribedDepth: {
        const double h = spec.hydrograph.depth(t);
        if (h < 0.0) {
            throw DomainError("prescribed boundary depth is negative");
        }
        return {h, interior.qx, interior.qy};
    }
    }
    throw ConfigError("unknown boundary kind");
}

SectionState ghost_section(const SectionState& interior, const ChannelCrossSection& cs,
                           const BoundarySpec& spec, double t) {
    switch (spec.kind) {
    case BoundaryKind::Wall:
    case BoundaryKind::Interface:
        return {interior.area, -interior.discharge};
    case BoundaryKind::Open:
        return interior;
    case BoundaryKind::PrescribedDepth:
        return {wetted_area(cs, spec.hydrograph.depth(t)), interior.discharge};
    }
    throw ConfigError("unknown boundary kind");
}

} // namespace hydrocouple
