#pragma once

// Coupling term of the channel equations, assembled from the bank fluxes, and
// the matching fluxes seen by the floodplain cells.

#include "hydrocouple/lateral.hpp"

#include <span>
#include <vector>

namespace hydrocouple {

struct CouplingTerm {
    double phi_a = 0.0;
    double phi_q = 0.0;

    friend bool operator==(const CouplingTerm&, const CouplingTerm&) = default;
};

/// Psi for one bank piece from the original-frame flux f = phi(w~, Pi_2D, n),
/// H* = max(h2, H_2D) and the weight |e_ij| / |e_i|. Throws MeshError if n_y = 0.
CouplingTerm edge_coupling(Bank bank, const EdgeFlux& f, double h_star, Vec2 n, double ratio);

/// Same, computing f and H* from the reconstructed and floodplain states.
CouplingTerm edge_coupling(Bank bank, const State2D& reconstructed, const State2D& floodplain,
                           Vec2 n, double ratio);

/// Phi_i for every channel cell: the weighted sum of Psi over the linked bank pieces.
std::vector<CouplingTerm> assemble_coupling(int channel_cells, std::span<const InterfaceEdge> edges);

/// FBM coupling: the same assembly with both lateral discharges pinned to zero.
std::vector<CouplingTerm> fbm_coupling(const CoupledMesh& mesh, const ChannelField& channel,
                                       const Field2D& floodplain);

struct CouplingDiagnostics {
    long clip_events = 0;
    double clipped_volume = 0.0;  // negative volume removed by the clips
};

/// w = w* + dt Phi. A negative area is clipped to zero and recorded.
State1D apply_coupling(const State1D& starred, const CouplingTerm& phi, double dt,
                       CouplingDiagnostics* diagnostics = nullptr, double dx = 1.0);

/// Outward flux per unit length for the floodplain cell of a bank link: -f.
EdgeFlux interface_flux_2d_side(const State2D& floodplain, const State2D& reconstructed, Vec2 n);

/// Floodplain-side fluxes of every linked bank piece, in step_2d's form.
std::vector<ExternalFlux> external_fluxes(std::span<const InterfaceEdge> edges);

} // namespace hydrocouple
