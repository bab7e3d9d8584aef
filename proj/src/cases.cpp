#include "hydrocouple/cases.hpp"

#include "hydrocouple/errors.hpp"

#include <string>

namespace hydrocouple {

namespace {

constexpr double kManning = 0.009;

std::array<BoundarySpec, 4> walls() { return {}; }

void set_side(std::array<BoundarySpec, 4>& b, Side s, BoundarySpec spec) {
    b[static_cast<int>(s)] = spec;
}

InitialRule depth_rule(InitialRule::Target target, double value) {
    InitialRule r;
    r.target = target;
    r.kind = InitialRule::Kind::Depth;
    r.value = value;
    return r;
}

DomainSpec case1() {
    DomainSpec d;
    ChannelSpec& c = d.channel;
    c.x0 = 0.0;
    c.x1 = 19.3;
    c.y_south = 1.8;
    c.y_north = 2.3;
    c.cells = 193;
    c.cells_across = 25;
    c.bed = 0.0;
    c.manning_n = kManning;
    c.upstream = BoundarySpec::wall();
    c.downstream = BoundarySpec::open();

    FloodplainSpec fp;
    fp.name = "floodplain";
    fp.x0 = 12.5;
    fp.x1 = 19.3;
    fp.y0 = 0.0;
    fp.y1 = 1.8;
    fp.nx = 68;
    fp.ny = 90;
    fp.manning_n = kManning;
    fp.boundary = walls();
    set_side(fp.boundary, Side::East, BoundarySpec::open());
    d.floodplains.push_back(fp);

    d.initial.push_back(depth_rule(InitialRule::Target::All, 0.003));
    InitialRule reservoir = depth_rule(InitialRule::Target::Channel, 0.504);
    reservoir.x0 = 0.0;
    reservoir.x1 = 6.10;
    reservoir.y0 = 1.8;
    reservoir.y1 = 2.3;
    d.initial.push_back(reservoir);

    d.probes = {{"P1", {3.0, 2.05}},  {"P2", {9.0, 2.05}},  {"P3", {14.0, 1.9}},
                {"P4", {14.0, 1.5}},  {"P5", {16.0, 0.9}},  {"P6", {18.0, 0.4}}};
    return d;
}

DomainSpec case2() {
    DomainSpec d;
    ChannelSpec& c = d.channel;
    c.x0 = 0.0;
    c.x1 = 19.3;
    c.y_south = 1.8;
    c.y_north = 2.3;
    c.cells = 193;
    c.cells_across = 25;
    c.bed = 0.0;
    c.manning_n = kManning;
    c.upstream = BoundarySpec::wall();
    c.downstream = BoundarySpec::open();

    FloodplainSpec fp;
    fp.name = "floodplain";
    fp.x0 = 10.5;
    fp.x1 = 16.0;
    fp.y0 = 0.0;
    fp.y1 = 1.8;
    fp.nx = 55;
    fp.ny = 90;
    fp.manning_n = kManning;
    fp.bed.z = 0.5;
    fp.boundary = walls();
    set_side(fp.boundary, Side::East, BoundarySpec::open());
    d.floodplains.push_back(fp);

    d.initial.push_back(depth_rule(InitialRule::Target::Channel, 0.7));
    InitialRule upstream = depth_rule(InitialRule::Target::Channel, 1.5);
    upstream.x1 = 8.5;
    d.initial.push_back(upstream);
    d.initial.push_back(depth_rule(InitialRule::Target::Floodplain, 0.2));

    d.probes = {{"P1", {4.0, 2.05}},  {"P2", {9.5, 2.05}},  {"P3", {13.0, 1.9}},
                {"P4", {17.5, 2.05}}, {"P5", {11.0, 1.5}},  {"P6", {13.0, 1.2}},
                {"P7", {15.0, 1.5}},  {"P8", {12.0, 0.5}},  {"P9", {15.5, 0.3}}};
    return d;
}

DomainSpec case3() {
    DomainSpec d;
    ChannelSpec& c = d.channel;
    c.x0 = 0.0;
    c.x1 = 20.0;
    c.y_south = 3.0;
    c.y_north = 4.0;
    c.cells = 600;
    c.cells_across = 30;
    c.bed = 0.0;
    c.manning_n = kManning;
    c.upstream = BoundarySpec::prescribed({0.08, 0.025, 10.0});
    c.downstream = BoundarySpec::wall();

    FloodplainSpec fp;
    fp.name = "floodplain";
    fp.x0 = 0.0;
    fp.x1 = 20.0;
    fp.y0 = 0.0;
    fp.y1 = 3.0;
    fp.nx = 600;
    fp.ny = 90;
    fp.manning_n = kManning;
    fp.bed.kind = BedProfile::Kind::Ramp;
    fp.bed.z_outer = 0.2;
    fp.bed.y_outer = 0.0;
    fp.bed.y_bank = 3.0;
    fp.bed.wall.kind = WallProfile::Kind::TanhPair;
    fp.bed.wall.amplitude = 0.06;
    fp.bed.wall.base = 0.14;
    fp.bed.wall.steepness = 3.0;
    fp.bed.wall.x_down = 9.0;
    fp.bed.wall.x_up = 15.5;
    fp.bed.wall.x_split = 10.5;
    fp.boundary = walls();
    d.floodplains.push_back(fp);

    d.initial.push_back(depth_rule(InitialRule::Target::Channel, 0.08));

    d.probes = {{"P1", {2.5, 3.5}},   {"P2", {4.0, 3.8}},   {"P3", {7.0, 3.3}},
                {"P4", {10.0, 3.4}},  {"P5", {11.0, 3.5}},  {"P6", {12.0, 3.3}},
                {"P7", {14.0, 3.4}},  {"P8", {16.0, 3.5}},  {"P9", {17.3, 3.5}},
                {"P10", {19.0, 3.5}}, {"P11", {12.0, 2.8}}, {"P12", {13.0, 2.8}},
                {"P13", {12.0, 2.5}}, {"P14", {12.0, 2.0}}, {"P15", {13.0, 1.0}}};
    return d;
}

} // namespace

void CaseSpec::validate() const {
    if (id < 1 || id > 3) {
        throw ConfigError("unknown case id " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
    if (!(scale > 0.0) || scale > 1.0) {
        throw ConfigError("resolution scale must lie in (0, 1]");
    }
}

DomainSpec case_domain(int id) {
    switch (id) {
    case 1: return case1();
    case 2: return case2();
    case 3: return case3();
    default: throw ConfigError("unknown case id " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
}

double case_end_time(int id) { return id == 3 ? 100.0 : 10.0; }

double case_output_interval(int id) { return id == 3 ? 0.5 : 0.05; }

SimConfig build_case(const CaseSpec& spec) {
    spec.validate();
    SimConfig cfg;
    cfg.mode = spec.mode;
    cfg.scale = spec.scale;
    cfg.end_time = case_end_time(spec.id);
    cfg.output_interval = case_output_interval(spec.id);
    cfg.domain = case_domain(spec.id);
    return cfg;
}

} // namespace hydrocouple
