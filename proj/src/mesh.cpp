#include "hydrocouple/mesh.hpp"

#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hydrocouple {

namespace {

double tolerance(double extent) { return 1e-9 * std::max(1.0, std::abs(extent)); }

Side opposite(Side s) {
    switch (s) {
    case Side::West: return Side::East;
    case Side::East: return Side::West;
    case Side::South: return Side::North;
    case Side::North: return Side::South;
    }
    return s;
}

double overlap(double a0, double a1, double b0, double b1) {
    return std::min(a1, b1) - std::max(a0, b0);
}

// Coincident faces get bit-identical lengths so still water cancels exactly.
double snap(double len, double to_a, double to_b, double tol) {
    if (std::abs(len - to_a) <= tol) {
        return to_a;
    }
    if (std::abs(len - to_b) <= tol) {
        return to_b;
    }
    return len;
}

} // namespace

Vec2 outward_normal(Side s) {
    switch (s) {
    case Side::West: return {-1.0, 0.0};
    case Side::East: return {1.0, 0.0};
    case Side::South: return {0.0, -1.0};
    case Side::North: return {0.0, 1.0};
    }
    return {};
}

Grid2D::Grid2D(std::string name_, int nx_, int ny_, double dx_, double dy_, Vec2 origin_)
    : name(std::move(name_)), nx(nx_), ny(ny_), dx(dx_), dy(dy_), origin(origin_) {
    if (nx < 1 || ny < 1) {
        throw MeshError("grid '" + name + "' needs at least one cell in each direction");
    }
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw MeshError("grid '" + name + "' needs positive cell sizes");
    }
    bed.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    for (Side s : kAllSides) {
        linked_length[static_cast<int>(s)].assign(face_count(s), 0.0);
    }
}

Vec2 Grid2D::center(int cell) const {
    return {origin.x + (ix(cell) + 0.5) * dx, origin.y + (iy(cell) + 0.5) * dy};
}

std::optional<int> Grid2D::locate(Vec2 p) const {
    const double fx = (p.x - origin.x) / dx;
    const double fy = (p.y - origin.y) / dy;
    if (fx < 0.0 || fy < 0.0 || fx > nx || fy > ny) {
        return std::nullopt;
    }
    const int i = std::min(static_cast<int>(fx), nx - 1);
    const int j = std::min(static_cast<int>(fy), ny - 1);
    return index(i, j);
}

int Grid2D::face_count(Side s) const {
    return (s == Side::West || s == Side::East) ? ny : nx;
}

double Grid2D::face_length(Side s) const {
    return (s == Side::West || s == Side::East) ? dy : dx;
}

int Grid2D::boundary_cell(Side s, int f) const {
    switch (s) {
    case Side::West: return index(0, f);
    case Side::East: return index(nx - 1, f);
    case Side::South: return index(f, 0);
    case Side::North: return index(f, ny - 1);
    }
    return -1;
}

double Grid2D::side_line(Side s) const {
    switch (s) {
    case Side::West: return origin.x;
    case Side::East: return x_max();
    case Side::South: return origin.y;
    case Side::North: return y_max();
    }
    return 0.0;
}

double Grid2D::face_begin(Side s, int f) const {
    return (s == Side::West || s == Side::East) ? origin.y + f * dy : origin.x + f * dx;
}

int Mesh2D::block_index(const std::string& name) const {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].name == name) {
            return static_cast<int>(b);
        }
    }
    return -1;
}

void connect_blocks(Mesh2D& mesh, int a, int b) {
    Grid2D& ga = mesh.blocks.at(a);
    Grid2D& gb = mesh.blocks.at(b);
    const double tol = tolerance(std::max({ga.x_max(), ga.y_max(), gb.x_max(), gb.y_max()}));

    if (overlap(ga.origin.x, ga.x_max(), gb.origin.x, gb.x_max()) > tol &&
        overlap(ga.origin.y, ga.y_max(), gb.origin.y, gb.y_max()) > tol) {
        throw MeshError("blocks '" + ga.name + "' and '" + gb.name + "' overlap");
    }

    bool connected = false;
    for (Side sa : kAllSides) {
        const Side sb = opposite(sa);
        if (std::abs(ga.side_line(sa) - gb.side_line(sb)) > tol) {
            continue;
        }
        const Vec2 n = outward_normal(sa);
        for (int fa = 0; fa < ga.face_count(sa); ++fa) {
            const double a0 = ga.face_begin(sa, fa);
            const double a1 = a0 + ga.face_length(sa);
            for (int fb = 0; fb < gb.face_count(sb); ++fb) {
                const double b0 = gb.face_begin(sb, fb);
                double len = overlap(a0, a1, b0, b0 + gb.face_length(sb));
                if (len <= tol) {
                    continue;
                }
                len = snap(len, ga.face_length(sa), gb.face_length(sb), tol);
                mesh.links.push_back({a, ga.boundary_cell(sa, fa), b, gb.boundary_cell(sb, fb), len, n});
                ga.linked_length[static_cast<int>(sa)][fa] += len;
                gb.linked_length[static_cast<int>(sb)][fb] += len;
                connected = true;
            }
        }
        if (connected) {
            ga.boundary[static_cast<int>(sa)].kind = BoundaryKind::Interface;
            gb.boundary[static_cast<int>(sb)].kind = BoundaryKind::Interface;
        }
    }
    if (!connected) {
        throw MeshError("blocks '" + ga.name + "' and '" + gb.name + "' share no boundary");
    }
}

std::optional<int> ChannelGrid1D::locate(double x) const {
    if (x_edges.empty() || x < x_edges.front() || x > x_edges.back()) {
        return std::nullopt;
    }
    const auto it = std::upper_bound(x_edges.begin(), x_edges.end(), x);
    const int i = static_cast<int>(it - x_edges.begin()) - 1;
    return std::clamp(i, 0, size() - 1);
}

ChannelGrid1D make_channel(double x0, double x1, int cells, double y_south, double y_north,
                           const ChannelCrossSection& section) {
    if (cells < 1 || !(x1 > x0)) {
        throw MeshError("channel needs a positive length and at least one cell");
    }
    if (!(y_north > y_south)) {
        throw MeshError("channel banks must satisfy y_south < y_north");
    }
    section.validate();
    ChannelGrid1D ch;
    ch.y_south = y_south;
    ch.y_north = y_north;
    ch.x_edges.resize(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        ch.x_edges[i] = x0 + (x1 - x0) * i / cells;
    }
    ch.sections.assign(cells, section);
    return ch;
}

Vec2 side_normal(const ChannelGrid1D& /*channel*/, int /*i*/, Bank bank) {
    return bank == Bank::South ? Vec2{0.0, -1.0} : Vec2{0.0, 1.0};
}

std::pair<double, double> split_subcells(const ChannelGrid1D& channel, int i) {
    const ChannelCrossSection& cs = channel.sections.at(i);
    cs.validate();
    const double half = 0.5 * channel.dx(i) * cs.width;
    return {half, half};
}

EdgeAdjacency connect_channel(const ChannelGrid1D& channel, Mesh2D& mesh) {
    const int n = channel.size();
    EdgeAdjacency adj;
    adj.cells.resize(n);
    const double tol = tolerance(std::max(channel.x_edges.back(), channel.y_north));

    for (int i = 0; i < n; ++i) {
        for (Bank bank : {Bank::South, Bank::North}) {
            ChannelSide& side = adj.cells[i][static_cast<int>(bank)];
            side.length = channel.dx(i);
            side.normal = side_normal(channel, i, bank);
        }
    }

    for (std::size_t b = 0; b < mesh.blocks.size(); ++b) {
        Grid2D& g = mesh.blocks[b];
        if (overlap(g.origin.y, g.y_max(), channel.y_south, channel.y_north) > tol &&
            overlap(g.origin.x, g.x_max(), channel.x_edges.front(), channel.x_edges.back()) > tol) {
            throw MeshError("block '" + g.name + "' overlaps the channel strip");
        }
        // A block against a channel end would need an interface with n_y = 0.
        for (Side s : {Side::West, Side::East}) {
            const double line = g.side_line(s);
            const bool at_end = std::abs(line - channel.x_edges.front()) <= tol ||
                                std::abs(line - channel.x_edges.back()) <= tol;
            if (at_end && overlap(g.origin.y, g.y_max(), channel.y_south, channel.y_north) > tol) {
                throw MeshError("block '" + g.name + "' touches a channel end; interfaces need n_y != 0");
            }
        }
        for (Bank bank : {Bank::South, Bank::North}) {
            const Side s = bank == Bank::South ? Side::North : Side::South;
            const double bank_line = bank == Bank::South ? channel.y_south : channel.y_north;
            if (std::abs(g.side_line(s) - bank_line) > tol) {
                continue;
            }
            bool linked = false;
            for (int f = 0; f < g.face_count(s); ++f) {
                const double f0 = g.face_begin(s, f);
                const double f1 = f0 + g.face_length(s);
                for (int i = 0; i < n; ++i) {
                    double len = overlap(channel.x_edges[i], channel.x_edges[i + 1], f0, f1);
                    if (len <= tol) {
                        continue;
                    }
                    len = snap(len, g.face_length(s), channel.dx(i), tol);
                    adj.cells[i][static_cast<int>(bank)].links.push_back(
                        {static_cast<int>(b), g.boundary_cell(s, f), f, len});
                    g.linked_length[static_cast<int>(s)][f] += len;
                    linked = true;
                }
            }
            if (linked) {
                g.boundary[static_cast<int>(s)].kind = BoundaryKind::Interface;
            }
        }
    }

    for (auto& sides : adj.cells) {
        for (ChannelSide& side : sides) {
            double covered = 0.0;
            for (const ChannelLink& l : side.links) {
                covered += l.length;
            }
            const double rest = side.length - covered;
            if (rest > tol) {
                side.links.push_back({-1, -1, -1, rest});
            } else if (rest < -tol) {
                throw MeshError("channel bank is covered more than once");
            }
        }
    }
    return adj;
}

} // namespace hydrocouple
