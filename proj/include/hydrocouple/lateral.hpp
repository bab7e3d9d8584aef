#pragma once

// Lateral discharges of the channel: each 1D cell is split into a south and a
// north subcell carrying (h, h u, q_y); q_y evolves by a 2D-style finite-volume
// update over the subcell edges, with hydrostatic reconstruction on the edges
// shared with the floodplain.

#include "hydrocouple/mesh.hpp"
#include "hydrocouple/solver1d.hpp"
#include "hydrocouple/solver2d.hpp"

#include <array>
#include <span>
#include <vector>

namespace hydrocouple {

/// Subcell states indexed by Bank: (h, h u, q_y^S) and (h, h u, q_y^N).
std::array<State2D, 2> subcell_states(const State1D& w, const ChannelCrossSection& cs);

/// w~ = (h2, h2 u, h2 v) with h2 = max(0, eta - zb_2d) and u, v taken from the subcell.
State2D reconstruct_interface(const State2D& side, double eta, double zb_2d);

/// One piece of a channel bank at time level n. For links to a 2D cell, `flux` is
/// the rotated HLL flux phi(w~, Pi_2D, n) in the original frame; for wall pieces it
/// is the flux against the mirrored subcell state.
struct InterfaceEdge {
    int cell = -1;
    Bank bank = Bank::South;
    int block = -1;   // -1 for a wall piece
    int cell2d = -1;
    double length = 0.0;
    double side_length = 0.0;  // |e_i| of this bank
    Vec2 normal{};
    State2D reconstructed{};  // w~ (the subcell state itself on walls)
    State2D neighbor{};       // Pi_2D (the mirrored subcell state on walls)
    EdgeFlux flux{};

    bool is_wall() const { return block < 0; }
};

/// Exchange data for every bank piece, ordered by cell, bank, then link.
std::vector<InterfaceEdge> interface_edges(const CoupledMesh& mesh, const ChannelField& channel,
                                           const Field2D& floodplain);

/// New (q_y^S, q_y^N) per channel cell from level-n data.
std::vector<std::array<double, 2>> step_lateral(const CoupledMesh& mesh, const ChannelField& channel,
                                                std::span<const InterfaceEdge> edges, double dt,
                                                double t);

/// Initial lateral discharges: both sides take the cell's q_y.
void init_lateral(ChannelField& channel, std::span<const double> qy);

} // namespace hydrocouple
