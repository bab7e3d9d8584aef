#pragma once

// Built-in configurations of the three benchmark cases.

#include "hydrocouple/sim.hpp"

#include <string>

namespace hydrocouple {

struct CaseSpec {
    int id = 1;
    Mode mode = Mode::HCM;
    double scale = 1.0;  // grid resolution factor; geometry is never scaled
    std::string output_dir = ".";

    void validate() const;
};

/// Domain of case 1, 2 or 3 (geometry, beds, boundaries, initial state, probes).
DomainSpec case_domain(int id);

/// End time and probe cadence of a case.
double case_end_time(int id);
double case_output_interval(int id);

SimConfig build_case(const CaseSpec& spec);

} // namespace hydrocouple
