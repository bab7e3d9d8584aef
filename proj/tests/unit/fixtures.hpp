#pragma once

#include "hydrocouple/mesh.hpp"
#include "hydrocouple/solver1d.hpp"
#include "hydrocouple/solver2d.hpp"

#include <random>

namespace fixtures {

using namespace hydrocouple;

// Channel on [0, 3] x [1, 1.5] with a 6 x 2 block to the south and,
// optionally, its mirror image to the north.
inline CoupledMesh strip(bool north_block, double fp_bed = 0.5) {
    CoupledMesh m;
    ChannelCrossSection cs;
    cs.width = 0.5;
    cs.bank_left = fp_bed;
    cs.bank_right = north_block ? fp_bed : 10.0;
    cs.manning_n = 0.009;
    m.channel = make_channel(0.0, 3.0, 3, 1.0, 1.5, cs);
    m.channel.downstream = BoundarySpec::open();
    Grid2D s("south", 6, 2, 0.5, 0.5, {0.0, 0.0});
    std::fill(s.bed.begin(), s.bed.end(), fp_bed);
    m.floodplain.blocks.push_back(s);
    if (north_block) {
        Grid2D n("north", 6, 2, 0.5, 0.5, {0.0, 1.5});
        std::fill(n.bed.begin(), n.bed.end(), fp_bed);
        m.floodplain.blocks.push_back(n);
    }
    m.adjacency = connect_channel(m.channel, m.floodplain);
    return m;
}

inline Field2D still_floodplain(const CoupledMesh& m, double eta) {
    Field2D f(m.floodplain.blocks.size());
    for (std::size_t b = 0; b < f.size(); ++b) {
        const Grid2D& g = m.floodplain.blocks[b];
        for (int c = 0; c < g.cell_count(); ++c) {
            f[b].push_back({std::max(0.0, eta - g.bed[c]), 0.0, 0.0});
        }
    }
    return f;
}

inline ChannelField still_channel(const CoupledMesh& m, double eta) {
    ChannelField w(m.channel.size());
    for (int i = 0; i < m.channel.size(); ++i) {
        const ChannelCrossSection& cs = m.channel.sections[i];
        w[i].area = cs.width * std::max(0.0, eta - cs.bed_elevation);
    }
    return w;
}

inline void randomize(const CoupledMesh& m, ChannelField& ch, Field2D& fp, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> depth(0.05, 0.8), q(-0.2, 0.2);
    for (State1D& w : ch) {
        w = {0.5 * (0.5 + depth(rng)), q(rng), q(rng), q(rng)};
    }
    for (std::size_t b = 0; b < fp.size(); ++b) {
        fp[b].resize(m.floodplain.blocks[b].cell_count());
        for (State2D& w : fp[b]) {
            w = {depth(rng), q(rng), q(rng)};
        }
    }
}

} // namespace fixtures
