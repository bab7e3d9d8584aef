#include "hydrocouple/coupling.hpp"

#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"

#include <algorithm>

namespace hydrocouple {

CouplingTerm edge_coupling(Bank bank, const EdgeFlux& f, double h_star, Vec2 n, double ratio) {
    if (n.y == 0.0) {
        throw MeshError("bank normal has no y component");
    }
    const double slope = n.x / n.y;
    const double p = 0.5 * kGravity * h_star * h_star;
    if (bank == Bank::South) {
        return {f.h / n.y * ratio, (f.qx / n.y - slope * p) * ratio};
    }
    return {-(f.h / n.y) * ratio, -(f.qx / n.y + slope * p) * ratio};
}

CouplingTerm edge_coupling(Bank bank, const State2D& reconstructed, const State2D& floodplain,
                           Vec2 n, double ratio) {
    const EdgeFlux f = normal_flux(reconstructed, floodplain, n);
    return edge_coupling(bank, f, std::max(reconstructed.h, floodplain.h), n, ratio);
}

std::vector<CouplingTerm> assemble_coupling(int channel_cells, std::span<const InterfaceEdge> edges) {
    std::vector<CouplingTerm> phi(channel_cells);
    for (const InterfaceEdge& e : edges) {
        if (e.is_wall()) {
            continue;
        }
        const double h_star = std::max(e.reconstructed.h, e.neighbor.h);
        const CouplingTerm psi =
            edge_coupling(e.bank, e.flux, h_star, e.normal, e.length / e.side_length);
        phi[e.cell].phi_a += psi.phi_a;
        phi[e.cell].phi_q += psi.phi_q;
    }
    return phi;
}

std::vector<CouplingTerm> fbm_coupling(const CoupledMesh& mesh, const ChannelField& channel,
                                       const Field2D& floodplain) {
    ChannelField pinned = channel;
    for (State1D& w : pinned) {
        w.qy_south = 0.0;
        w.qy_north = 0.0;
    }
    const auto edges = interface_edges(mesh, pinned, floodplain);
    return assemble_coupling(mesh.channel.size(), edges);
}

State1D apply_coupling(const State1D& starred, const CouplingTerm& phi, double dt,
                       CouplingDiagnostics* diagnostics, double dx) {
    State1D w = starred;
    w.area += dt * phi.phi_a;
    w.discharge += dt * phi.phi_q;
    if (w.area < 0.0) {
        if (diagnostics != nullptr) {
            ++diagnostics->clip_events;
            diagnostics->clipped_volume += -w.area * dx;
        }
        w.area = 0.0;
        w.discharge = 0.0;
    }
    return w;
}

EdgeFlux interface_flux_2d_side(const State2D& floodplain, const State2D& reconstructed, Vec2 n) {
    return -1.0 * normal_flux(reconstructed, floodplain, n);
}

std::vector<ExternalFlux> external_fluxes(std::span<const InterfaceEdge> edges) {
    std::vector<ExternalFlux> out;
    out.reserve(edges.size());
    for (const InterfaceEdge& e : edges) {
        if (!e.is_wall()) {
            out.push_back({e.block, e.cell2d, e.length, -1.0 * e.flux, -e.normal});
        }
    }
    return out;
}

} // namespace hydrocouple
