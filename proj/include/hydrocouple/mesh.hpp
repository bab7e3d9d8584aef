#pragma once

// Structured 2D blocks, the 1D channel grid, and the links between them.
//
// The 2D domain is a list of uniform rectangular blocks. Blocks touching along a
// common line are joined by BlockLinks (one per overlapping pair of faces, so
// non-matching resolutions are allowed). The 1D channel is a straight, x-aligned
// strip; its south and north banks are joined to the adjacent 2D faces by an
// EdgeAdjacency.

#include "hydrocouple/boundary.hpp"
#include "hydrocouple/geometry.hpp"
#include "hydrocouple/state.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hydrocouple {

enum class Side : int { West = 0, East = 1, South = 2, North = 3 };

inline constexpr std::array<Side, 4> kAllSides{Side::West, Side::East, Side::South, Side::North};

Vec2 outward_normal(Side s);

struct Grid2D {
    std::string name;
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    Vec2 origin{};
    double manning_n = 0.0;
    std::vector<double> bed;  // cell-average bed elevation, row-major in x
    std::array<BoundarySpec, 4> boundary{};
    // Per boundary face: length claimed by links. On Interface sides the rest is wall.
    std::array<std::vector<double>, 4> linked_length{};

    Grid2D() = default;
    Grid2D(std::string name, int nx, int ny, double dx, double dy, Vec2 origin);

    int cell_count() const { return nx * ny; }
    int index(int ix, int iy) const { return iy * nx + ix; }
    int ix(int cell) const { return cell % nx; }
    int iy(int cell) const { return cell / nx; }
    double cell_area() const { return dx * dy; }
    Vec2 center(int cell) const;
    double x_max() const { return origin.x + nx * dx; }
    double y_max() const { return origin.y + ny * dy; }

    /// Cell containing `p` (closed on the low side), if any.
    std::optional<int> locate(Vec2 p) const;

    int face_count(Side s) const;
    double face_length(Side s) const;
    /// Cell owning boundary face `f` on side `s`.
    int boundary_cell(Side s, int f) const;
    /// Coordinate of the side's line (x for West/East, y for South/North).
    double side_line(Side s) const;
    /// Start coordinate of boundary face `f` along its side.
    double face_begin(Side s, int f) const;
};

/// One overlap between faces of two blocks; `normal` points from a to b.
struct BlockLink {
    int block_a = -1;
    int cell_a = -1;
    int block_b = -1;
    int cell_b = -1;
    double length = 0.0;
    Vec2 normal{};
};

struct Mesh2D {
    std::vector<Grid2D> blocks;
    std::vector<BlockLink> links;

    int block_index(const std::string& name) const;
};

/// Join every pair of sides of blocks `a` and `b` that lie on a common line.
/// Throws MeshError when the blocks share no boundary or their interiors overlap.
void connect_blocks(Mesh2D& mesh, int a, int b);

struct ChannelGrid1D {
    std::vector<double> x_edges;
    double y_south = 0.0;
    double y_north = 0.0;
    std::vector<ChannelCrossSection> sections;
    BoundarySpec upstream{};
    BoundarySpec downstream{};

    int size() const { return static_cast<int>(sections.size()); }
    double center(int i) const { return 0.5 * (x_edges[i] + x_edges[i + 1]); }
    double dx(int i) const { return x_edges[i + 1] - x_edges[i]; }
    double centerline() const { return 0.5 * (y_south + y_north); }
    std::optional<int> locate(double x) const;
};

/// Uniform channel grid over [x0, x1] with the given cross-section in every cell.
ChannelGrid1D make_channel(double x0, double x1, int cells, double y_south, double y_north,
                           const ChannelCrossSection& section);

enum class Bank : int { South = 0, North = 1 };

/// Outward unit normal of a bank: (0, -1) south, (0, +1) north for x-aligned channels.
Vec2 side_normal(const ChannelGrid1D& channel, int i, Bank bank);

/// Areas of the north and south halves of channel cell i (equal bisection).
std::pair<double, double> split_subcells(const ChannelGrid1D& channel, int i);

/// A piece of a channel bank: either shared with a 2D cell face or a wall.
struct ChannelLink {
    int block = -1;
    int cell = -1;
    int face = -1;
    double length = 0.0;

    bool is_wall() const { return block < 0; }
};

struct ChannelSide {
    std::vector<ChannelLink> links;  // lengths sum to `length`
    double length = 0.0;
    Vec2 normal{};
};

struct EdgeAdjacency {
    std::vector<std::array<ChannelSide, 2>> cells;

    const ChannelSide& side(int i, Bank bank) const { return cells[i][static_cast<int>(bank)]; }
};

/// Link the channel banks to the faces of every block lying on a bank line.
/// Matching block sides become Interface boundaries.
EdgeAdjacency connect_channel(const ChannelGrid1D& channel, Mesh2D& mesh);

struct CoupledMesh {
    Mesh2D floodplain;
    ChannelGrid1D channel;
    EdgeAdjacency adjacency;
};

} // namespace hydrocouple
