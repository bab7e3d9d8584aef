#include "hydrocouple/cases.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/sim.hpp"

#include <doctest.h>

#include <cmath>

using namespace hydrocouple;
using doctest::Approx;

namespace {

// 0.1 x 0.1 channel cell above a single 0.1 x 0.1 floodplain cell.
SimConfig two_cells(Mode mode, double channel_depth, double floodplain_depth) {
    SimConfig cfg;
    cfg.mode = mode;
    cfg.end_time = 0.1;
    ChannelSpec& c = cfg.domain.channel;
    c.x0 = 0.0;
    c.x1 = 0.1;
    c.y_south = 0.1;
    c.y_north = 0.2;
    c.cells = 1;
    c.cells_across = 1;
    FloodplainSpec fp;
    fp.name = "fp";
    fp.x0 = 0.0;
    fp.x1 = 0.1;
    fp.y0 = 0.0;
    fp.y1 = 0.1;
    cfg.domain.floodplains.push_back(fp);
    InitialRule ch;
    ch.target = InitialRule::Target::Channel;
    ch.value = channel_depth;
    InitialRule f;
    f.target = InitialRule::Target::Floodplain;
    f.value = floodplain_depth;
    cfg.domain.initial = {ch, f};
    return cfg;
}

SimConfig small_case(int id, Mode mode, double end) {
    SimConfig cfg = build_case({id, mode, 0.25, "."});
    cfg.end_time = end;
    return cfg;
}

} // namespace

TEST_CASE("mode names") {
    for (Mode m : {Mode::Full2D, Mode::HCM, Mode::FBM}) {
        CHECK(parse_mode(to_string(m)) == m);
    }
    CHECK_THROWS_AS(parse_mode("coupled"), ConfigError);
}

TEST_CASE("CFL time step") {
    for (Mode m : {Mode::Full2D, Mode::HCM}) {
        Simulation sim(two_cells(m, 0.0, 1.0));
        CHECK(sim.cfl_dt() == Approx(0.014367394278317272).epsilon(1e-15));
        CHECK(sim.cfl_dt() == Approx(0.45 * 0.1 / std::sqrt(9.81)).epsilon(1e-15));
    }
    SimConfig doubled = two_cells(Mode::HCM, 0.0, 1.0);
    doubled.cfl = 0.9;
    CHECK(Simulation(doubled).cfl_dt() == Approx(2 * 0.014367394278317272).epsilon(1e-15));

    // the channel limits the step when it is deeper
    Simulation deep(two_cells(Mode::HCM, 4.0, 1.0));
    CHECK(deep.cfl_dt() == Approx(0.45 * 0.1 / std::sqrt(9.81 * 4.0)).epsilon(1e-14));

    SimConfig dry = two_cells(Mode::HCM, 0.0, 0.0);
    dry.fallback_dt = 0.02;
    CHECK(Simulation(dry).cfl_dt() == 0.02);
}

TEST_CASE("configuration validation") {
    SimConfig cfg = two_cells(Mode::HCM, 0.1, 0.1);
    cfg.cfl = 0.0;
    CHECK_THROWS_AS(Simulation{cfg}, ConfigError);
    cfg.cfl = 1.5;
    CHECK_THROWS_AS(Simulation{cfg}, ConfigError);
    cfg = two_cells(Mode::HCM, 0.1, 0.1);
    cfg.domain.probes.push_back({"out", {5.0, 5.0}});
    CHECK_THROWS_AS(Simulation{cfg}, ConfigError);
}

TEST_CASE("inflow hydrograph") {
    const Hydrograph h{0.08, 0.025, 10.0};
    CHECK(h.depth(0.0) == Approx(0.08).epsilon(1e-15));
    CHECK(h.depth(10.0) == Approx(0.105).epsilon(1e-15));
    CHECK(h.depth(20.0) == Approx(0.13).epsilon(1e-15));
    CHECK(h.depth(40.0) == Approx(0.08).epsilon(1e-15));
    CHECK(h.depth(55.0) == h.depth(40.0));
    CHECK(h.depth(100.0) == h.depth(40.0));
    const Hydrograph flat{0.08, 0.0, 10.0};
    CHECK(flat.depth(17.0) == 0.08);
}

TEST_CASE("zero end time takes no steps") {
    SimConfig cfg = small_case(1, Mode::HCM, 0.0);
    const RunResult r = run(cfg);
    CHECK(r.steps == 0);
    CHECK(r.records.size() == 1);
    CHECK(r.final_volume == r.initial_volume);
}

TEST_CASE("runs are deterministic and land on the output times") {
    const SimConfig cfg = small_case(1, Mode::HCM, 0.5);
    const RunResult a = run(cfg);
    const RunResult b = run(cfg);
    CHECK(a.records == b.records);
    CHECK(a.field2d == b.field2d);
    CHECK(a.channel == b.channel);
    REQUIRE(a.records.size() == 11);
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        CHECK(a.records[k].t == Approx(0.05 * k).epsilon(1e-12));
    }
    CHECK(a.records.back().t == 0.5);
}

TEST_CASE("probes do not perturb the solution") {
    SimConfig with = small_case(2, Mode::HCM, 0.3);
    SimConfig without = with;
    without.domain.probes.clear();
    const RunResult a = run(with);
    const RunResult b = run(without);
    CHECK(a.field2d == b.field2d);
    CHECK(a.channel == b.channel);
    CHECK(a.steps == b.steps);
}

TEST_CASE("total volume") {
    Simulation sim(two_cells(Mode::HCM, 0.2, 0.3));
    CHECK(sim.total_volume() == Approx(0.1 * 0.1 * 0.2 + 0.01 * 0.3).epsilon(1e-15));
    Simulation full(two_cells(Mode::Full2D, 0.2, 0.3));
    CHECK(full.total_volume() == Approx(sim.total_volume()).epsilon(1e-15));
}

TEST_CASE("still water stays still in every mode") {
    for (Mode m : {Mode::Full2D, Mode::HCM, Mode::FBM}) {
        SimConfig cfg = build_case({2, m, 0.25, "."});
        InitialRule level;
        level.kind = InitialRule::Kind::Elevation;
        level.value = 1.2;
        cfg.domain.initial = {level};
        Simulation sim(cfg);
        const Field2D f0 = sim.field2d();
        const ChannelField c0 = sim.channel();
        for (int k = 0; k < 50; ++k) {
            sim.advance(sim.cfl_dt());
        }
        CHECK(sim.field2d() == f0);
        CHECK(sim.channel() == c0);
    }
}

TEST_CASE("volume is conserved in closed coupled runs") {
    for (Mode m : {Mode::HCM, Mode::FBM}) {
        SimConfig cfg = build_case({2, m, 0.25, "."});
        cfg.domain.channel.downstream = BoundarySpec::wall();
        cfg.domain.floodplains[0].boundary[static_cast<int>(Side::East)] = BoundarySpec::wall();
        Simulation sim(cfg);
        const double v0 = sim.total_volume();
        sim.advance_to(1.0);
        CHECK(std::abs(sim.total_volume() - v0) <= 1e-12 * v0);
        CHECK(sim.coupling_diagnostics().clip_events == 0);
    }
}

TEST_CASE("the channel probe sees lateral velocity only with the lateral scheme") {
    const RunResult fbm = run(small_case(1, Mode::FBM, 6.0));
    const RunResult hcm = run(small_case(1, Mode::HCM, 6.0));
    double fbm_max = 0.0;
    double hcm_max = 0.0;
    for (const ProbeRecord& r : fbm.records) {
        fbm_max = std::max(fbm_max, std::abs(r.samples[2].v));
    }
    for (const ProbeRecord& r : hcm.records) {
        hcm_max = std::max(hcm_max, std::abs(r.samples[2].v));
    }
    CHECK(fbm_max == 0.0);
    CHECK(hcm_max > 1e-6);
}

TEST_CASE("case 3 floods the floodplain and then recedes") {
    const RunResult r = run(build_case({3, Mode::HCM, 0.25, "."}));
    for (std::size_t p = 10; p < 14; ++p) {  // P11 to P14
        double peak = 0.0;
        double t_peak = 0.0;
        for (const ProbeRecord& rec : r.records) {
            if (rec.samples[p].h > peak) {
                peak = rec.samples[p].h;
                t_peak = rec.t;
            }
        }
        CHECK(r.records.front().samples[p].h == 0.0);
        CHECK(peak > 1e-2);
        CHECK(t_peak < 60.0);
        CHECK(r.records.back().samples[p].h < 0.05 * peak);
    }
}
