#include "hydrocouple/domain.hpp"

#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hydrocouple {

double WallProfile::at(double x) const {
    if (kind == Kind::Constant) {
        return value;
    }
    if (x <= x_split) {
        return -amplitude * std::tanh(steepness * (x - x_down)) + base;
    }
    return amplitude * std::tanh(steepness * (x - x_up)) + base;
}

double BedProfile::at(Vec2 p) const {
    if (kind == Kind::Flat) {
        return z;
    }
    return z_outer + (wall.at(p.x) - z_outer) * (p.y - y_outer) / (y_bank - y_outer);
}

int scaled_cells(int n, double scale) {
    if (!(scale > 0.0) || scale > 1.0) {
        throw ConfigError("resolution scale must lie in (0, 1]");
    }
    return std::max(1, static_cast<int>(std::ceil(n * scale - 1e-9)));
}

namespace {

Grid2D make_block(const FloodplainSpec& fp, double scale) {
    if (!(fp.x1 > fp.x0) || !(fp.y1 > fp.y0)) {
        throw MeshError("floodplain '" + fp.name + "' has an empty extent");
    }
    const int nx = scaled_cells(fp.nx, scale);
    const int ny = scaled_cells(fp.ny, scale);
    Grid2D g(fp.name, nx, ny, (fp.x1 - fp.x0) / nx, (fp.y1 - fp.y0) / ny, {fp.x0, fp.y0});
    g.manning_n = fp.manning_n;
    g.boundary = fp.boundary;
    for (int c = 0; c < g.cell_count(); ++c) {
        g.bed[c] = fp.bed.at(g.center(c));
    }
    return g;
}

bool touches(const Grid2D& a, const Grid2D& b) {
    const double tol = 1e-9 * std::max({1.0, a.x_max(), a.y_max(), b.x_max(), b.y_max()});
    const auto overlap = [](double a0, double a1, double b0, double b1) {
        return std::min(a1, b1) - std::max(a0, b0);
    };
    const bool x_line = std::abs(a.x_max() - b.origin.x) <= tol || std::abs(b.x_max() - a.origin.x) <= tol;
    const bool y_line = std::abs(a.y_max() - b.origin.y) <= tol || std::abs(b.y_max() - a.origin.y) <= tol;
    return (x_line && overlap(a.origin.y, a.y_max(), b.origin.y, b.y_max()) > tol) ||
           (y_line && overlap(a.origin.x, a.x_max(), b.origin.x, b.x_max()) > tol);
}

void connect_touching(Mesh2D& mesh, std::size_t first) {
    for (std::size_t a = first; a < mesh.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < mesh.blocks.size(); ++b) {
            if (touches(mesh.blocks[a], mesh.blocks[b])) {
                connect_blocks(mesh, static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
}

// Floodplain bed at a bank line, or +inf where no floodplain borders the channel.
double bank_elevation(const DomainSpec& domain, double x, double y_line) {
    const double tol = 1e-9 * std::max(1.0, std::abs(y_line));
    for (const FloodplainSpec& fp : domain.floodplains) {
        const bool on_line = std::abs(fp.y1 - y_line) <= tol || std::abs(fp.y0 - y_line) <= tol;
        if (on_line && x >= fp.x0 && x <= fp.x1) {
            return fp.bed.at({x, y_line});
        }
    }
    return std::numeric_limits<double>::infinity();
}

double rule_depth(const InitialRule& r, double bed) {
    if (r.kind == InitialRule::Kind::Depth) {
        if (r.value < 0.0) {
            throw ConfigError("initial depth must be non-negative");
        }
        return r.value;
    }
    return std::max(0.0, r.value - bed);
}

} // namespace

CoupledMesh build_coupled_mesh(const DomainSpec& domain, double scale) {
    const ChannelSpec& c = domain.channel;
    CoupledMesh mesh;
    for (const FloodplainSpec& fp : domain.floodplains) {
        mesh.floodplain.blocks.push_back(make_block(fp, scale));
    }
    connect_touching(mesh.floodplain, 0);

    ChannelCrossSection cs;
    cs.bed_elevation = c.bed;
    cs.width = c.y_north - c.y_south;
    cs.manning_n = c.manning_n;
    mesh.channel = make_channel(c.x0, c.x1, scaled_cells(c.cells, scale), c.y_south, c.y_north, cs);
    mesh.channel.upstream = c.upstream;
    mesh.channel.downstream = c.downstream;
    for (int i = 0; i < mesh.channel.size(); ++i) {
        ChannelCrossSection& s = mesh.channel.sections[i];
        s.bank_left = bank_elevation(domain, mesh.channel.center(i), c.y_south);
        s.bank_right = bank_elevation(domain, mesh.channel.center(i), c.y_north);
        s.validate();
    }
    mesh.adjacency = connect_channel(mesh.channel, mesh.floodplain);
    return mesh;
}

Mesh2D build_full2d_mesh(const DomainSpec& domain, double scale) {
    const ChannelSpec& c = domain.channel;
    Mesh2D mesh;
    const int nx = scaled_cells(c.cells, scale);
    const int ny = scaled_cells(c.cells_across, scale);
    Grid2D ch("channel", nx, ny, (c.x1 - c.x0) / nx, (c.y_north - c.y_south) / ny, {c.x0, c.y_south});
    ch.manning_n = c.manning_n;
    std::fill(ch.bed.begin(), ch.bed.end(), c.bed);
    ch.boundary[static_cast<int>(Side::West)] = c.upstream;
    ch.boundary[static_cast<int>(Side::East)] = c.downstream;
    mesh.blocks.push_back(std::move(ch));
    for (const FloodplainSpec& fp : domain.floodplains) {
        mesh.blocks.push_back(make_block(fp, scale));
    }
    connect_touching(mesh, 0);
    return mesh;
}

Field2D initial_field_2d(const DomainSpec& domain, const Mesh2D& mesh, bool first_block_is_channel) {
    Field2D field(mesh.blocks.size());
    for (std::size_t b = 0; b < mesh.blocks.size(); ++b) {
        const Grid2D& g = mesh.blocks[b];
        const bool channel = first_block_is_channel && b == 0;
        field[b].assign(g.cell_count(), State2D{});
        for (int k = 0; k < g.cell_count(); ++k) {
            const Vec2 p = g.center(k);
            for (const InitialRule& r : domain.initial) {
                const bool target = r.target == InitialRule::Target::All ||
                                    (channel == (r.target == InitialRule::Target::Channel));
                if (target && r.contains(p)) {
                    field[b][k] = State2D{rule_depth(r, g.bed[k]), 0.0, 0.0};
                }
            }
        }
    }
    return field;
}

namespace {

// Area whose free surface Zb + A/B equals `surface` exactly when some nearby
// representable area does; B * h alone can miss by an ulp.
double area_for_surface(const ChannelCrossSection& cs, double h, double surface) {
    double area = wetted_area(cs, h);
    if (area <= 0.0) {
        return area;
    }
    const double target = surface;
    for (double dir : {-1.0, 1.0}) {
        double a = area;
        for (int k = 0; k < 4; ++k) {
            if (free_surface(cs, {a, 0.0}) == target) {
                return a;
            }
            a = std::nextafter(a, dir * 1e300);
        }
    }
    return area;
}

} // namespace

ChannelField initial_channel(const DomainSpec& domain, const ChannelGrid1D& channel) {
    ChannelField field(channel.size());
    for (int i = 0; i < channel.size(); ++i) {
        const ChannelCrossSection& cs = channel.sections[i];
        const Vec2 p{channel.center(i), channel.centerline()};
        for (const InitialRule& r : domain.initial) {
            if (r.target != InitialRule::Target::Floodplain && r.contains(p)) {
                const double h = rule_depth(r, cs.bed_elevation);
                const double surface =
                    r.kind == InitialRule::Kind::Elevation ? r.value : cs.bed_elevation + h;
                field[i] = State1D{area_for_surface(cs, h, surface), 0.0, 0.0, 0.0};
            }
        }
    }
    return field;
}

} // namespace hydrocouple
