#pragma once

// Roe quasi-linear scheme for the rectangular-channel Saint-Venant system with
// upwinded bed-slope and friction sources and a transonic entropy fix.

#include "hydrocouple/geometry.hpp"
#include "hydrocouple/mesh.hpp"

#include <utility>
#include <vector>

namespace hydrocouple {

/// Channel cell: wetted area, frontal discharge and the two lateral discharges.
struct State1D {
    double area = 0.0;
    double discharge = 0.0;
    double qy_south = 0.0;
    double qy_north = 0.0;

    SectionState section() const { return {area, discharge}; }
    friend bool operator==(const State1D&, const State1D&) = default;
};

using ChannelField = std::vector<State1D>;

struct RoeInterfaceData {
    bool inert = false;  // both sides dry: no fluctuations
    double area = 0.0;        // A^
    double velocity = 0.0;    // u^
    double width = 0.0;       // B^
    double depth = 0.0;       // h^ = A^/B^
    double celerity = 0.0;    // c^
    double friction_slope = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

RoeInterfaceData roe_averages(const SectionState& wl, const SectionState& wr,
                              const ChannelCrossSection& cs_l, const ChannelCrossSection& cs_r);

/// (alpha_1, alpha_2) with alpha_1 e_1 + alpha_2 e_2 = (dA, dQ).
std::pair<double, double> wave_strengths(const RoeInterfaceData& d, double d_area,
                                         double d_discharge);

/// (beta_1, beta_2). The bed-slope product S_o dx is passed in as -dZb so that
/// still water cancels without a division by dx.
std::pair<double, double> source_strengths(const RoeInterfaceData& d, double dx, double d_bed,
                                           double d_depth, double d_area);

/// Transonic rarefaction viscosity: (l_right - l_left)/4 if l_left < 0 < l_right.
double entropy_fix(double lambda_left, double lambda_right);

/// Cell eigenvalues u - c and u + c.
std::pair<double, double> cell_eigenvalues(const ChannelCrossSection& cs, const SectionState& w);

/// Split fluctuations at one interface: `to_right` enters the right cell (sum of
/// gamma+ e), `to_left` the left cell (sum of gamma- e).
struct Fluctuation {
    SectionState to_left{};
    SectionState to_right{};
    bool entropy_fix_active = false;
};

/// Wall interfaces pass `with_entropy_fix = false` so no mass crosses the wall.
Fluctuation interface_fluctuation(const SectionState& wl, const ChannelCrossSection& cs_l,
                                  const SectionState& wr, const ChannelCrossSection& cs_r,
                                  double dx, bool with_entropy_fix = true);

struct Step1DStats {
    long entropy_fix_interfaces = 0;
};

/// One explicit step of the channel without coupling terms. Lateral discharges
/// are copied through. Throws StabilityError on a negative area.
ChannelField step_1d(const ChannelGrid1D& channel, const ChannelField& states, double dt, double t,
                     Step1DStats* stats = nullptr);

} // namespace hydrocouple
