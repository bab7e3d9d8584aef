#include "hydrocouple/geometry.hpp"

#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hydrocouple {

void ChannelCrossSection::validate() const {
    if (!(width > 0.0)) {
        throw DomainError("channel width must be positive");
    }
    if (!(bank_left >= bed_elevation) || !(bank_right >= bed_elevation)) {
        throw DomainError("channel banks must not lie below the bed");
    }
    if (!(manning_n >= 0.0)) {
        throw DomainError("manning coefficient must be non-negative");
    }
}

double wall_elevation(const ChannelCrossSection& cs) {
    return std::min(cs.bank_left, cs.bank_right);
}

double wetted_area(const ChannelCrossSection& cs, double depth) {
    if (depth < 0.0) {
        throw DomainError("negative depth");
    }
    return cs.width * depth;
}

double depth_from_area(const ChannelCrossSection& cs, double area) {
    if (area < 0.0) {
        throw DomainError("negative wetted area");
    }
    return area / cs.width;
}

double top_width(const ChannelCrossSection& cs, double eta) {
    return eta < cs.bed_elevation ? 0.0 : cs.width;
}

double wetted_perimeter(const ChannelCrossSection& cs, double area) {
    return cs.width + 2.0 * depth_from_area(cs, area);
}

double conveyance(const ChannelCrossSection& cs, double area) {
    if (area <= 0.0) {
        return 0.0;
    }
    if (cs.manning_n == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double perimeter = wetted_perimeter(cs, area);
    return std::pow(area, 5.0 / 3.0) / (cs.manning_n * std::pow(perimeter, 2.0 / 3.0));
}

double friction_slope(const ChannelCrossSection& cs, double area, double discharge) {
    if (discharge == 0.0 || cs.manning_n == 0.0) {
        return 0.0;
    }
    if (area <= 0.0) {
        throw DomainError("friction slope requested for a dry section carrying discharge");
    }
    const double k = conveyance(cs, area);
    return discharge * std::abs(discharge) / (k * k);
}

} // namespace hydrocouple
