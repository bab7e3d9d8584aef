#pragma once

// Randomized property suites for the 2D solver.

#include <cstdint>
#include <string>

namespace hydrocouple::verify {

struct PropertyReport {
    std::string name;
    long samples = 0;
    double worst = 0.0;      // largest observed error
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

PropertyReport hll_consistency(long samples, std::uint64_t seed);
PropertyReport normal_flux_rotation(long samples, std::uint64_t seed);
PropertyReport step_rotation(long samples, std::uint64_t seed);
PropertyReport positivity(long samples, std::uint64_t seed);
PropertyReport volume_conservation_2d(int steps, std::uint64_t seed);
PropertyReport lake_at_rest_2d(int steps, std::uint64_t seed);

} // namespace hydrocouple::verify
