#pragma once

// Geometric description of a channel with adjacent floodplains, and the meshes
// built from it: a 1D channel coupled to 2D floodplain blocks, or one 2D mesh
// in which the channel is an ordinary block.

#include "hydrocouple/boundary.hpp"
#include "hydrocouple/mesh.hpp"
#include "hydrocouple/solver1d.hpp"
#include "hydrocouple/solver2d.hpp"

#include <array>
#include <string>
#include <vector>

namespace hydrocouple {

/// Channel wall elevation along x: a constant, or two tanh ramps joined at x_split.
struct WallProfile {
    enum class Kind { Constant, TanhPair };
    Kind kind = Kind::Constant;
    double value = 0.0;
    double amplitude = 0.0;
    double base = 0.0;
    double steepness = 1.0;
    double x_down = 0.0;
    double x_up = 0.0;
    double x_split = 0.0;

    double at(double x) const;
};

/// Floodplain bed: flat, or linear in y from z_outer at y_outer to the wall
/// elevation at the bank line y_bank.
struct BedProfile {
    enum class Kind { Flat, Ramp };
    Kind kind = Kind::Flat;
    double z = 0.0;
    double z_outer = 0.0;
    double y_outer = 0.0;
    double y_bank = 0.0;
    WallProfile wall{};

    double at(Vec2 p) const;
};

struct ChannelSpec {
    double x0 = 0.0;
    double x1 = 1.0;
    double y_south = 0.0;
    double y_north = 1.0;
    int cells = 1;          // 1D cells at scale 1
    int cells_across = 1;   // cells across the channel in the full 2D mesh at scale 1
    double bed = 0.0;
    double manning_n = 0.0;
    BoundarySpec upstream{};
    BoundarySpec downstream{};
};

struct FloodplainSpec {
    std::string name;
    double x0 = 0.0;
    double x1 = 1.0;
    double y0 = 0.0;
    double y1 = 1.0;
    int nx = 1;  // at scale 1
    int ny = 1;
    double manning_n = 0.0;
    BedProfile bed{};
    std::array<BoundarySpec, 4> boundary{};  // indexed by Side
};

struct InitialRule {
    enum class Target { Channel, Floodplain, All };
    enum class Kind { Depth, Elevation };
    Target target = Target::All;
    Kind kind = Kind::Depth;
    double x0 = -1e300;
    double x1 = 1e300;
    double y0 = -1e300;
    double y1 = 1e300;
    double value = 0.0;

    bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

struct Probe {
    std::string id;
    Vec2 at{};
};

struct DomainSpec {
    ChannelSpec channel;
    std::vector<FloodplainSpec> floodplains;
    std::vector<InitialRule> initial;  // later rules override earlier ones
    std::vector<Probe> probes;
};

/// Cell count at a resolution scale: ceil(n * scale), at least 1.
int scaled_cells(int n, double scale);

/// Channel grid and floodplain blocks with their bank adjacency.
CoupledMesh build_coupled_mesh(const DomainSpec& domain, double scale);

/// One 2D mesh whose first block is the channel, followed by the floodplains.
Mesh2D build_full2d_mesh(const DomainSpec& domain, double scale);

/// Initial 2D states per block from the rules (cells no rule covers are dry).
/// In the full 2D mesh, block 0 is treated as the channel.
Field2D initial_field_2d(const DomainSpec& domain, const Mesh2D& mesh, bool first_block_is_channel);

/// Initial channel states from the rules; lateral discharges start at zero.
ChannelField initial_channel(const DomainSpec& domain, const ChannelGrid1D& channel);

} // namespace hydrocouple
