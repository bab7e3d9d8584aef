#include "hydrocouple/lateral.hpp"

#include "hydrocouple/boundary.hpp"
#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"

#include <algorithm>

namespace hydrocouple {

std::array<State2D, 2> subcell_states(const State1D& w, const ChannelCrossSection& cs) {
    if (is_dry(cs, w.area)) {
        return {};
    }
    const double h = w.area / cs.width;
    const double hu = w.discharge / cs.width;
    return {State2D{h, hu, w.qy_south}, State2D{h, hu, w.qy_north}};
}

State2D reconstruct_interface(const State2D& side, double eta, double zb_2d) {
    const double h2 = std::max(0.0, eta - zb_2d);
    if (h2 == 0.0 || is_dry(side)) {
        return {h2, 0.0, 0.0};
    }
    return {h2, h2 * velocity_x(side), h2 * velocity_y(side)};
}

namespace {

State2D mirror(const State2D& w, Vec2 n) {
    const double qn = w.qx * n.x + w.qy * n.y;
    return {w.h, w.qx - 2.0 * qn * n.x, w.qy - 2.0 * qn * n.y};
}

double pressure(double h) { return 0.5 * kGravity * h * h; }

} // namespace

std::vector<InterfaceEdge> interface_edges(const CoupledMesh& mesh, const ChannelField& channel,
                                           const Field2D& floodplain) {
    const ChannelGrid1D& grid = mesh.channel;
    std::vector<InterfaceEdge> edges;
    for (int i = 0; i < grid.size(); ++i) {
        const ChannelCrossSection& cs = grid.sections[i];
        const auto sub = subcell_states(channel[i], cs);
        const double eta = free_surface(cs, channel[i].section());
        for (Bank bank : {Bank::South, Bank::North}) {
            const ChannelSide& side = mesh.adjacency.side(i, bank);
            const State2D& w = sub[static_cast<int>(bank)];
            for (const ChannelLink& l : side.links) {
                InterfaceEdge e;
                e.cell = i;
                e.bank = bank;
                e.block = l.block;
                e.cell2d = l.cell;
                e.length = l.length;
                e.side_length = side.length;
                e.normal = side.normal;
                if (l.is_wall()) {
                    e.reconstructed = w;
                    e.neighbor = mirror(w, side.normal);
                } else {
                    const double zb = mesh.floodplain.blocks[l.block].bed[l.cell];
                    e.reconstructed = reconstruct_interface(w, eta, zb);
                    e.neighbor = floodplain[l.block][l.cell];
                }
                e.flux = normal_flux(e.reconstructed, e.neighbor, e.normal);
                edges.push_back(e);
            }
        }
    }
    return edges;
}

std::vector<std::array<double, 2>> step_lateral(const CoupledMesh& mesh, const ChannelField& channel,
                                                std::span<const InterfaceEdge> edges, double dt,
                                                double t) {
    const ChannelGrid1D& grid = mesh.channel;
    const int n = grid.size();
    std::vector<std::array<State2D, 2>> sub(n + 2);
    for (int i = 0; i < n; ++i) {
        sub[i + 1] = subcell_states(channel[i], grid.sections[i]);
    }
    const auto ghost = [&](int i, const BoundarySpec& spec) {
        const ChannelCrossSection& cs = grid.sections[i];
        const SectionState g = ghost_section(channel[i].section(), cs, spec, t);
        State1D w{g.area, g.discharge, channel[i].qy_south, channel[i].qy_north};
        return subcell_states(w, cs);
    };
    sub[0] = ghost(0, grid.upstream);
    sub[n + 1] = ghost(n - 1, grid.downstream);

    // Each bank term is phi_3 - n_y g/2 h^2 with h the depth on the channel side.
    // On links this is the hydrostatic correction; on the other edges the extra
    // n_y g/2 h^2 terms sum to zero around the closed subcell, and still water
    // then cancels edge by edge.
    std::vector<std::array<double, 2>> residual(n, {0.0, 0.0});
    for (const InterfaceEdge& e : edges) {
        residual[e.cell][static_cast<int>(e.bank)] +=
            e.length * (e.flux.qy - e.normal.y * pressure(e.reconstructed.h));
    }

    std::vector<std::array<double, 2>> out(n);
    for (int i = 0; i < n; ++i) {
        const ChannelCrossSection& cs = grid.sections[i];
        const double half_width = 0.5 * cs.width;
        const double area = split_subcells(grid, i).first;
        for (Bank bank : {Bank::South, Bank::North}) {
            const int s = static_cast<int>(bank);
            const State2D& w = sub[i + 1][s];
            const State2D& other = sub[i + 1][1 - s];
            const Vec2 n_ns = -side_normal(grid, i, bank);
            double r = residual[i][s];
            r += half_width * normal_flux(w, sub[i][s], {-1.0, 0.0}).qy;
            r += half_width * normal_flux(w, sub[i + 2][s], {1.0, 0.0}).qy;
            r += grid.dx(i) * (normal_flux(w, other, n_ns).qy - n_ns.y * pressure(w.h));
            const double q = s == 0 ? channel[i].qy_south : channel[i].qy_north;
            out[i][s] = is_dry(cs, channel[i].area) ? 0.0 : q - dt / area * r;
        }
    }
    return out;
}

void init_lateral(ChannelField& channel, std::span<const double> qy) {
    if (qy.size() != channel.size()) {
        throw DomainError("one initial lateral discharge per channel cell is required");
    }
    for (std::size_t i = 0; i < channel.size(); ++i) {
        channel[i].qy_south = qy[i];
        channel[i].qy_north = qy[i];
    }
}

} // namespace hydrocouple
