#include "hydrocouple/cases.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace hydrocouple;
using doctest::Approx;

namespace {

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::string config_text(const SimConfig& cfg) {
    std::ostringstream out;
    write_config(out, cfg);
    return out.str();
}

std::string message_of(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_config(in);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

const char* kMinimal = R"(# two blocks
[run]
mode = hcm
end_time = 2

[channel]
x0 = 0
x1 = 4
y_south = 1
y_north = 1.5
cells = 41
cells_across = 5
bed = 0
manning_n = 0.01
upstream = prescribed
upstream_base = 0.1
downstream = open

[floodplain]
name = south
x0 = 0
x1 = 4
y0 = 0
y1 = 1
nx = 9
ny = 3
manning_n = 0.02
bed = flat
bed_z = 0.3
east = open

[initial]
target = all
kind = elevation
value = 0.2

[probe]
id = A
x = 1
y = 1.2
)";

} // namespace

TEST_CASE("case 1 constants") {
    const DomainSpec d = case_domain(1);
    CHECK(d.channel.x1 == 19.3);
    CHECK(d.channel.y_north - d.channel.y_south == Approx(0.5).epsilon(1e-14));
    CHECK(d.channel.cells == 193);
    CHECK(d.channel.cells_across == 25);
    CHECK(d.channel.manning_n == 0.009);
    CHECK(d.floodplains[0].nx == 68);
    CHECK(d.floodplains[0].ny == 90);
    CHECK(d.floodplains[0].manning_n == 0.009);
    CHECK(d.initial[0].value == 0.003);
    CHECK(d.initial[1].value == 0.504);
    CHECK(d.initial[1].x1 == 6.10);
    CHECK(d.channel.upstream.kind == BoundaryKind::Wall);
    CHECK(d.channel.downstream.kind == BoundaryKind::Open);
    CHECK(d.probes.size() == 6);
    CHECK(case_end_time(1) == 10.0);
}

TEST_CASE("case 2 constants") {
    const DomainSpec d = case_domain(2);
    CHECK(d.floodplains[0].x0 == 10.5);
    CHECK(d.floodplains[0].x1 == 16.0);
    CHECK(d.floodplains[0].bed.z == 0.5);
    CHECK(d.floodplains[0].nx == 55);
    CHECK(d.floodplains[0].ny == 90);
    CHECK(d.initial[0].value == 0.7);
    CHECK(d.initial[1].value == 1.5);
    CHECK(d.initial[1].x1 == 8.5);
    CHECK(d.initial[2].value == 0.2);
}

TEST_CASE("case 3 constants") {
    const DomainSpec d = case_domain(3);
    CHECK(d.channel.y_south == 3.0);
    CHECK(d.channel.y_north == 4.0);
    CHECK(d.channel.x1 == 20.0);
    CHECK(d.channel.cells == 600);
    CHECK(d.channel.cells_across == 30);
    CHECK(d.floodplains[0].nx == 600);
    CHECK(d.floodplains[0].ny == 90);
    const Hydrograph& h = d.channel.upstream.hydrograph;
    CHECK(d.channel.upstream.kind == BoundaryKind::PrescribedDepth);
    CHECK(h.base == 0.08);
    CHECK(h.amplitude == 0.025);
    CHECK(h.period == 10.0);
    CHECK(d.initial[0].value == 0.08);
    CHECK(d.probes.size() == 15);
    const BedProfile& bed = d.floodplains[0].bed;
    CHECK(bed.at({5.0, 0.0}) == 0.2);
    CHECK(bed.at({12.0, 3.0}) == Approx(0.06 * std::tanh(3.0 * (12.0 - 15.5)) + 0.14).epsilon(1e-15));
    CHECK(bed.at({5.0, 3.0}) == Approx(-0.06 * std::tanh(3.0 * (5.0 - 9.0)) + 0.14).epsilon(1e-15));
    CHECK(case_end_time(3) == 100.0);
    CHECK_THROWS_AS(case_domain(4), ConfigError);
}

TEST_CASE("resolution scaling rounds up") {
    CHECK(scaled_cells(193, 0.5) == 97);
    CHECK(scaled_cells(25, 0.5) == 13);
    CHECK(scaled_cells(90, 0.5) == 45);
    CHECK(scaled_cells(68, 1.0) == 68);
    CHECK(scaled_cells(1, 0.01) == 1);
    CHECK_THROWS_AS(scaled_cells(10, 0.0), ConfigError);
    CHECK_THROWS_AS(scaled_cells(10, 1.5), ConfigError);
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.0) == "0");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("probe CSV round trip") {
    const std::vector<Probe> probes{{"P1", {0, 0}}, {"P2", {1, 1}}};
    const std::vector<ProbeRecord> records{
        {0.0, {{1.0 / 3.0, 0.1, -2e-17, 0.0}, {0.5, 0.25, 1e10, -0.7}}},
        {0.05, {{0.3, 0.2, 0.1, 0.0}, {0.6, 0.35, 0.0, 1e-300}}},
    };
    std::stringstream s;
    write_probes(s, probes, records);
    const std::string text = s.str();
    CHECK(text.rfind("t,probe_id,eta,H,u,v\n", 0) == 0);
    CHECK(count_lines(text) == 5);
    const ProbeTable t = read_probes(s);
    CHECK(t.ids == std::vector<std::string>{"P1", "P2"});
    CHECK(t.records == records);

    std::stringstream empty;
    write_probes(empty, probes, {});
    CHECK(empty.str() == "t,probe_id,eta,H,u,v\n");

    std::istringstream bad("t,probe,eta,H,u,v\n");
    CHECK_THROWS_AS(read_probes(bad), ConfigError);
    std::istringstream short_row("t,probe_id,eta,H,u,v\n0,P1,1,2,3\n");
    CHECK_THROWS_AS(read_probes(short_row), ConfigError);
}

TEST_CASE("snapshot rows") {
    Simulation sim(build_case({1, Mode::HCM, 0.25, "."}));
    std::ostringstream out;
    write_snapshot(out, sim.mesh(), sim.field2d(), sim.channel());
    const std::string text = out.str();
    const int cells2d = 17 * 23;
    const int cells1d = 49;
    CHECK(text.rfind("x,y,zb,H,eta,u,v,vN,vS\n", 0) == 0);
    CHECK(count_lines(text) == 1 + cells2d + cells1d);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line.size() > 2);
    CHECK(line.substr(line.size() - 2) == ",,");
    std::string last;
    while (std::getline(in, line)) {
        last = line;
    }
    CHECK(std::count(last.begin(), last.end(), ',') == 8);
    CHECK(last.back() != ',');

    std::ostringstream again;
    write_snapshot(again, sim.mesh(), sim.field2d(), sim.channel());
    CHECK(again.str() == text);
}

TEST_CASE("config round trip of the built-in cases") {
    for (int id : {1, 2, 3}) {
        const SimConfig cfg = build_case({id, Mode::FBM, 0.5, "."});
        const std::string text = config_text(cfg);
        std::istringstream in(text);
        const SimConfig back = parse_config(in);
        CHECK(config_text(back) == text);
        CHECK(back.mode == Mode::FBM);
        CHECK(back.scale == 0.5);
        CHECK(back.domain.probes.size() == cfg.domain.probes.size());
    }
}

TEST_CASE("config parsing") {
    std::istringstream in(kMinimal);
    const SimConfig cfg = parse_config(in);
    CHECK(cfg.mode == Mode::HCM);
    CHECK(cfg.end_time == 2.0);
    CHECK(cfg.cfl == 0.45);
    CHECK(cfg.domain.channel.cells == 41);
    CHECK(cfg.domain.channel.upstream.kind == BoundaryKind::PrescribedDepth);
    CHECK(cfg.domain.channel.upstream.hydrograph.base == 0.1);
    CHECK(cfg.domain.floodplains[0].bed.z == 0.3);
    CHECK(cfg.domain.floodplains[0].boundary[static_cast<int>(Side::East)].kind == BoundaryKind::Open);
    CHECK(cfg.domain.floodplains[0].boundary[static_cast<int>(Side::West)].kind == BoundaryKind::Wall);
    CHECK(cfg.domain.initial[0].kind == InitialRule::Kind::Elevation);
    CHECK(cfg.domain.probes[0].id == "A");

    SimConfig half = cfg;
    half.scale = 0.5;
    Simulation sim(half);
    CHECK(sim.mesh().channel.size() == 21);
    CHECK(sim.mesh().floodplain.blocks[0].nx == 5);
    CHECK(sim.mesh().floodplain.blocks[0].ny == 2);
}

TEST_CASE("config errors name the key and line") {
    std::string text = kMinimal;
    text.replace(text.find("cells = 41"), 10, "cellz = 41");
    const std::string unknown = message_of(text);
    CHECK(unknown.find("cellz") != std::string::npos);
    CHECK(unknown.find("line 11") != std::string::npos);

    text = kMinimal;
    text.erase(text.find("end_time = 2\n"), 13);
    const std::string missing = message_of(text);
    CHECK(missing.find("end_time") != std::string::npos);
    CHECK(missing.find("missing") != std::string::npos);

    text = kMinimal;
    text.replace(text.find("mode = hcm"), 10, "mode = mixed");
    CHECK(message_of(text).find("mode") != std::string::npos);

    CHECK(message_of(std::string(kMinimal) + "[output]\n").find("[output]") != std::string::npos);
    CHECK(message_of(std::string(kMinimal) + "[probe]\nid = B\nx = 1\nx = 2\ny = 0\n").find("x") !=
          std::string::npos);
    CHECK(message_of("[run]\nmode = hcm\n") != "");
    CHECK(message_of(std::string(kMinimal) + "value 3\n").find("line 41") != std::string::npos);
}

namespace {

std::vector<std::vector<std::string>> snapshot_rows(const Simulation& sim) {
    std::ostringstream out;
    write_snapshot(out, sim.mesh(), sim.field2d(), sim.channel());
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) {
            cells.push_back(c);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("one record of one probe is two lines") {
    std::ostringstream out;
    write_probes(out, {{"P", {0, 0}}}, {{0.0, {{1.0, 1.0, 0.0, 0.0}}}});
    CHECK(out.str() == "t,probe_id,eta,H,u,v\n0,P,1,1,0,0\n");
}

TEST_CASE("lake-at-rest snapshot has a constant surface") {
    SimConfig cfg = build_case({2, Mode::HCM, 0.25, "."});
    InitialRule level;
    level.kind = InitialRule::Kind::Elevation;
    level.value = 1.6;
    cfg.domain.initial = {level};
    for (const auto& row : snapshot_rows(Simulation(cfg))) {
        CHECK(std::stod(row[4]) == 1.6);
    }
}

TEST_CASE("case 3 snapshot before overtopping has a dry floodplain") {
    SimConfig cfg = build_case({3, Mode::HCM, 0.25, "."});
    Simulation sim(cfg);
    sim.advance_to(5.0);
    const int cells2d = sim.mesh().floodplain.blocks[0].cell_count();
    const auto rows = snapshot_rows(sim);
    for (int k = 0; k < cells2d; ++k) {
        CHECK(rows[k][3] == "0");
    }
}

TEST_CASE("run output is byte-stable") {
    SimConfig cfg = build_case({1, Mode::HCM, 0.25, "."});
    cfg.end_time = 0.3;
    std::string first;
    for (int k = 0; k < 2; ++k) {
        const RunResult r = run(cfg);
        std::ostringstream out;
        write_probes(out, cfg.domain.probes, r.records);
        write_snapshot(out, r.mesh, r.field2d, r.channel);
        if (k == 0) {
            first = out.str();
        } else {
            CHECK(out.str() == first);
        }
    }
}
