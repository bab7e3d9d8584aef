#pragma once

// Rectangular channel cross-sections with vertical walls.

#include "hydrocouple/constants.hpp"

namespace hydrocouple {

struct ChannelCrossSection {
    double bed_elevation = 0.0;  // Z_b
    double width = 1.0;          // B
    double bank_left = 0.0;      // south bank elevation
    double bank_right = 0.0;     // north bank elevation
    double manning_n = 0.0;

    /// Throws DomainError unless B > 0, both banks >= Z_b and n >= 0.
    void validate() const;
};

struct SectionState {
    double area = 0.0;       // A
    double discharge = 0.0;  // Q
};

/// Overtopping threshold: the lower of the two banks.
double wall_elevation(const ChannelCrossSection& cs);

double wetted_area(const ChannelCrossSection& cs, double depth);
double depth_from_area(const ChannelCrossSection& cs, double area);

/// Width of the free surface at elevation `eta`: zero below the bed, B above it.
/// Above the wall the width stays at B(x, z_b^w).
double top_width(const ChannelCrossSection& cs, double eta);

double wetted_perimeter(const ChannelCrossSection& cs, double area);

/// Manning conveyance A^(5/3) / (n P^(2/3)). Zero for a dry section.
double conveyance(const ChannelCrossSection& cs, double area);

/// S_f = Q|Q| / K^2. Zero when n = 0 or Q = 0; a dry section carrying
/// discharge is a DomainError.
double friction_slope(const ChannelCrossSection& cs, double area, double discharge);

inline bool is_dry(const ChannelCrossSection& cs, double area) {
    return area <= kDryDepth * cs.width;
}

/// Section-averaged velocity, zero below the dry threshold.
inline double section_velocity(const ChannelCrossSection& cs, const SectionState& w) {
    return is_dry(cs, w.area) ? 0.0 : w.discharge / w.area;
}

inline double free_surface(const ChannelCrossSection& cs, const SectionState& w) {
    return cs.bed_elevation + w.area / cs.width;
}

} // namespace hydrocouple
