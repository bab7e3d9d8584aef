#include "hydrocouple/io.hpp"

#include "hydrocouple/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hydrocouple {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return in;
}

void check_written(std::ostream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double parse_number(const std::string& text, const std::string& what, int line) {
    const std::string t = trim(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
        throw ConfigError("line " + std::to_string(line) + ": invalid number '" + t + "' for " + what);
    }
    return v;
}

} // namespace

void write_probes(std::ostream& out, const std::vector<Probe>& probes,
                  const std::vector<ProbeRecord>& records) {
    out << kProbeHeader << '\n';
    for (const ProbeRecord& r : records) {
        if (r.samples.size() != probes.size()) {
            throw Error("probe record does not match the probe list");
        }
        for (std::size_t p = 0; p < probes.size(); ++p) {
            const ProbeSample& s = r.samples[p];
            out << format_double(r.t) << ',' << probes[p].id << ',' << format_double(s.eta) << ','
                << format_double(s.h) << ',' << format_double(s.u) << ',' << format_double(s.v)
                << '\n';
        }
    }
}

void write_probes(const std::string& path, const std::vector<Probe>& probes,
                  const std::vector<ProbeRecord>& records) {
    std::ofstream out = open_out(path);
    write_probes(out, probes, records);
    check_written(out, path);
}

ProbeTable read_probes(std::istream& in) {
    ProbeTable table;
    std::string line;
    if (!std::getline(in, line) || trim(line) != kProbeHeader) {
        throw ConfigError("line 1: expected probe header '" + std::string(kProbeHeader) + "'");
    }
    std::map<std::string, std::size_t> index;
    int n = 1;
    while (std::getline(in, line)) {
        ++n;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_csv(trim(line));
        if (cells.size() != 6) {
            throw ConfigError("line " + std::to_string(n) + ": expected 6 columns");
        }
        const double t = parse_number(cells[0], "t", n);
        const std::string& id = cells[1];
        if (table.records.empty() || table.records.back().t != t) {
            table.records.push_back({t, {}});
        }
        ProbeRecord& r = table.records.back();
        if (table.records.size() == 1) {
            index[id] = table.ids.size();
            table.ids.push_back(id);
        } else if (r.samples.size() >= table.ids.size() || table.ids[r.samples.size()] != id) {
            throw ConfigError("line " + std::to_string(n) + ": unexpected probe '" + id + "'");
        }
        r.samples.push_back({parse_number(cells[2], "eta", n), parse_number(cells[3], "H", n),
                             parse_number(cells[4], "u", n), parse_number(cells[5], "v", n)});
    }
    return table;
}

ProbeTable read_probes(const std::string& path) {
    std::ifstream in = open_in(path);
    return read_probes(in);
}

void write_snapshot(std::ostream& out, const CoupledMesh& mesh, const Field2D& field2d,
                    const ChannelField& channel) {
    out << kSnapshotHeader << '\n';
    for (std::size_t b = 0; b < mesh.floodplain.blocks.size(); ++b) {
        const Grid2D& g = mesh.floodplain.blocks[b];
        for (int c = 0; c < g.cell_count(); ++c) {
            const State2D& w = field2d[b][c];
            const Vec2 p = g.center(c);
            out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(g.bed[c])
                << ',' << format_double(w.h) << ',' << format_double(g.bed[c] + w.h) << ','
                << format_double(velocity_x(w)) << ',' << format_double(velocity_y(w)) << ",,\n";
        }
    }
    const ChannelGrid1D& ch = mesh.channel;
    for (int i = 0; i < ch.size(); ++i) {
        const ChannelCrossSection& cs = ch.sections[i];
        const State1D& w = channel[i];
        const bool dry = is_dry(cs, w.area);
        const double h = w.area / cs.width;
        const double vs = dry ? 0.0 : w.qy_south / h;
        const double vn = dry ? 0.0 : w.qy_north / h;
        out << format_double(ch.center(i)) << ',' << format_double(ch.centerline()) << ','
            << format_double(cs.bed_elevation) << ',' << format_double(h) << ','
            << format_double(free_surface(cs, w.section())) << ','
            << format_double(section_velocity(cs, w.section())) << ','
            << format_double(0.5 * (vn + vs)) << ',' << format_double(vn) << ','
            << format_double(vs) << '\n';
    }
}

void write_snapshot(const std::string& path, const CoupledMesh& mesh, const Field2D& field2d,
                    const ChannelField& channel) {
    std::ofstream out = open_out(path);
    write_snapshot(out, mesh, field2d, channel);
    check_written(out, path);
}

// ---------------------------------------------------------------------------
// Configuration files

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, Entry> entries;
};

struct Schema {
    std::set<std::string> required;
    std::set<std::string> optional;
};

std::string side_key(Side s) {
    switch (s) {
    case Side::West: return "west";
    case Side::East: return "east";
    case Side::South: return "south";
    case Side::North: return "north";
    }
    return {};
}

std::set<std::string> boundary_keys(const std::string& prefix) {
    return {prefix + "_base", prefix + "_amplitude", prefix + "_period"};
}

const Schema& schema_for(const std::string& section) {
    static const std::map<std::string, Schema> schemas = [] {
        std::map<std::string, Schema> m;
        m["run"] = {{"mode", "end_time"},
                    {"cfl", "output_interval", "fallback_dt", "scale", "lateral"}};
        Schema channel{{"x0", "x1", "y_south", "y_north", "cells", "cells_across", "bed", "manning_n",
                        "upstream", "downstream"},
                       {}};
        for (const char* p : {"upstream", "downstream"}) {
            const auto keys = boundary_keys(p);
            channel.optional.insert(keys.begin(), keys.end());
        }
        m["channel"] = channel;
        Schema fp{{"name", "x0", "x1", "y0", "y1", "nx", "ny", "manning_n", "bed"},
                  {"bed_z", "bed_z_outer", "bed_y_outer", "bed_y_bank", "wall", "wall_value",
                   "wall_amplitude", "wall_base", "wall_steepness", "wall_x_down", "wall_x_up",
                   "wall_x_split"}};
        for (Side s : kAllSides) {
            fp.optional.insert(side_key(s));
            const auto keys = boundary_keys(side_key(s));
            fp.optional.insert(keys.begin(), keys.end());
        }
        m["floodplain"] = fp;
        m["initial"] = {{"target", "kind", "value"}, {"x0", "x1", "y0", "y1"}};
        m["probe"] = {{"id", "x", "y"}, {}};
        return m;
    }();
    const auto it = schemas.find(section);
    if (it == schemas.end()) {
        static const Schema none;
        return none;
    }
    return it->second;
}

class Reader {
public:
    explicit Reader(const Section& s) : s_(s) {}

    bool has(const std::string& key) const { return s_.entries.count(key) != 0; }

    const Entry& entry(const std::string& key) const {
        const auto it = s_.entries.find(key);
        if (it == s_.entries.end()) {
            throw ConfigError("[" + s_.name + "] at line " + std::to_string(s_.line) +
                              ": missing required key '" + key + "'");
        }
        return it->second;
    }

    std::string text(const std::string& key) const { return entry(key).value; }

    double number(const std::string& key) const {
        const Entry& e = entry(key);
        return parse_number(e.value, "'" + key + "'", e.line);
    }

    double number(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    int integer(const std::string& key) const {
        const Entry& e = entry(key);
        const double v = parse_number(e.value, "'" + key + "'", e.line);
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw ConfigError("line " + std::to_string(e.line) + ": '" + key + "' must be an integer");
        }
        return static_cast<int>(v);
    }

    [[noreturn]] void bad_value(const std::string& key, const std::string& expected) const {
        const Entry& e = entry(key);
        throw ConfigError("line " + std::to_string(e.line) + ": invalid value '" + e.value +
                          "' for '" + key + "' (expected " + expected + ")");
    }

    BoundarySpec boundary(const std::string& key, bool required) const {
        if (!required && !has(key)) {
            return BoundarySpec::wall();
        }
        const std::string v = text(key);
        if (v == "wall") {
            return BoundarySpec::wall();
        }
        if (v == "open") {
            return BoundarySpec::open();
        }
        if (v == "prescribed") {
            return BoundarySpec::prescribed(
                {number(key + "_base"), number(key + "_amplitude", 0.0), number(key + "_period", 1.0)});
        }
        bad_value(key, "wall, open or prescribed");
    }

private:
    const Section& s_;
};

std::vector<Section> read_sections(std::istream& in) {
    std::vector<Section> sections;
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("line " + std::to_string(n) + ": malformed section header");
            }
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (schema_for(name).required.empty()) {
                throw ConfigError("line " + std::to_string(n) + ": unknown section [" + name + "]");
            }
            sections.push_back({name, n, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(n) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (sections.empty()) {
            throw ConfigError("line " + std::to_string(n) + ": key '" + key + "' outside a section");
        }
        Section& s = sections.back();
        const Schema& schema = schema_for(s.name);
        if (!schema.required.count(key) && !schema.optional.count(key)) {
            throw ConfigError("line " + std::to_string(n) + ": unknown key '" + key + "' in [" +
                              s.name + "]");
        }
        if (value.empty()) {
            throw ConfigError("line " + std::to_string(n) + ": empty value for '" + key + "'");
        }
        if (!s.entries.emplace(key, Entry{value, n}).second) {
            throw ConfigError("line " + std::to_string(n) + ": duplicate key '" + key + "'");
        }
    }
    for (const Section& s : sections) {
        for (const std::string& key : schema_for(s.name).required) {
            Reader(s).entry(key);
        }
    }
    return sections;
}

WallProfile read_wall(const Reader& r) {
    WallProfile w;
    const std::string kind = r.text("wall");
    if (kind == "constant") {
        w.kind = WallProfile::Kind::Constant;
        w.value = r.number("wall_value");
    } else if (kind == "tanh_pair") {
        w.kind = WallProfile::Kind::TanhPair;
        w.amplitude = r.number("wall_amplitude");
        w.base = r.number("wall_base");
        w.steepness = r.number("wall_steepness");
        w.x_down = r.number("wall_x_down");
        w.x_up = r.number("wall_x_up");
        w.x_split = r.number("wall_x_split");
    } else {
        r.bad_value("wall", "constant or tanh_pair");
    }
    return w;
}

FloodplainSpec read_floodplain(const Reader& r) {
    FloodplainSpec fp;
    fp.name = r.text("name");
    fp.x0 = r.number("x0");
    fp.x1 = r.number("x1");
    fp.y0 = r.number("y0");
    fp.y1 = r.number("y1");
    fp.nx = r.integer("nx");
    fp.ny = r.integer("ny");
    fp.manning_n = r.number("manning_n");
    const std::string bed = r.text("bed");
    if (bed == "flat") {
        fp.bed.kind = BedProfile::Kind::Flat;
        fp.bed.z = r.number("bed_z");
    } else if (bed == "ramp") {
        fp.bed.kind = BedProfile::Kind::Ramp;
        fp.bed.z_outer = r.number("bed_z_outer");
        fp.bed.y_outer = r.number("bed_y_outer");
        fp.bed.y_bank = r.number("bed_y_bank");
        fp.bed.wall = read_wall(r);
    } else {
        r.bad_value("bed", "flat or ramp");
    }
    for (Side s : kAllSides) {
        fp.boundary[static_cast<int>(s)] = r.boundary(side_key(s), false);
    }
    return fp;
}

InitialRule read_initial(const Reader& r) {
    InitialRule rule;
    const std::string target = r.text("target");
    if (target == "channel") {
        rule.target = InitialRule::Target::Channel;
    } else if (target == "floodplain") {
        rule.target = InitialRule::Target::Floodplain;
    } else if (target == "all") {
        rule.target = InitialRule::Target::All;
    } else {
        r.bad_value("target", "channel, floodplain or all");
    }
    const std::string kind = r.text("kind");
    if (kind == "depth") {
        rule.kind = InitialRule::Kind::Depth;
    } else if (kind == "elevation") {
        rule.kind = InitialRule::Kind::Elevation;
    } else {
        r.bad_value("kind", "depth or elevation");
    }
    rule.value = r.number("value");
    rule.x0 = r.number("x0", rule.x0);
    rule.x1 = r.number("x1", rule.x1);
    rule.y0 = r.number("y0", rule.y0);
    rule.y1 = r.number("y1", rule.y1);
    return rule;
}

} // namespace

SimConfig parse_config(std::istream& in) {
    const std::vector<Section> sections = read_sections(in);
    SimConfig cfg;
    int runs = 0;
    int channels = 0;
    for (const Section& s : sections) {
        const Reader r(s);
        if (s.name == "run") {
            ++runs;
            try {
                cfg.mode = parse_mode(r.text("mode"));
            } catch (const ConfigError&) {
                r.bad_value("mode", "full2d, hcm or fbm");
            }
            cfg.end_time = r.number("end_time");
            cfg.cfl = r.number("cfl", cfg.cfl);
            cfg.output_interval = r.number("output_interval", cfg.output_interval);
            cfg.fallback_dt = r.number("fallback_dt", cfg.fallback_dt);
            cfg.scale = r.number("scale", cfg.scale);
            if (r.has("lateral")) {
                const std::string v = r.text("lateral");
                if (v != "true" && v != "false") {
                    r.bad_value("lateral", "true or false");
                }
                cfg.lateral_enabled = v == "true";
            }
        } else if (s.name == "channel") {
            ++channels;
            ChannelSpec& c = cfg.domain.channel;
            c.x0 = r.number("x0");
            c.x1 = r.number("x1");
            c.y_south = r.number("y_south");
            c.y_north = r.number("y_north");
            c.cells = r.integer("cells");
            c.cells_across = r.integer("cells_across");
            c.bed = r.number("bed");
            c.manning_n = r.number("manning_n");
            c.upstream = r.boundary("upstream", true);
            c.downstream = r.boundary("downstream", true);
        } else if (s.name == "floodplain") {
            cfg.domain.floodplains.push_back(read_floodplain(r));
        } else if (s.name == "initial") {
            cfg.domain.initial.push_back(read_initial(r));
        } else if (s.name == "probe") {
            cfg.domain.probes.push_back({r.text("id"), {r.number("x"), r.number("y")}});
        }
    }
    if (runs != 1) {
        throw ConfigError("configuration needs exactly one [run] section");
    }
    if (channels != 1) {
        throw ConfigError("configuration needs exactly one [channel] section");
    }
    cfg.validate();
    return cfg;
}

SimConfig parse_config(const std::string& path) {
    std::ifstream in = open_in(path);
    return parse_config(in);
}

namespace {

void write_boundary(std::ostream& out, const std::string& key, const BoundarySpec& b) {
    switch (b.kind) {
    case BoundaryKind::Open:
        out << key << " = open\n";
        return;
    case BoundaryKind::PrescribedDepth:
        out << key << " = prescribed\n"
            << key << "_base = " << format_double(b.hydrograph.base) << '\n'
            << key << "_amplitude = " << format_double(b.hydrograph.amplitude) << '\n'
            << key << "_period = " << format_double(b.hydrograph.period) << '\n';
        return;
    case BoundaryKind::Wall:
    case BoundaryKind::Interface:
        out << key << " = wall\n";
        return;
    }
}

const char* target_name(InitialRule::Target t) {
    switch (t) {
    case InitialRule::Target::Channel: return "channel";
    case InitialRule::Target::Floodplain: return "floodplain";
    case InitialRule::Target::All: return "all";
    }
    return "all";
}

} // namespace

void write_config(std::ostream& out, const SimConfig& cfg) {
    const auto num = [](double v) { return format_double(v); };
    out << "[run]\n"
        << "mode = " << to_string(cfg.mode) << '\n'
        << "end_time = " << num(cfg.end_time) << '\n'
        << "cfl = " << num(cfg.cfl) << '\n'
        << "output_interval = " << num(cfg.output_interval) << '\n'
        << "fallback_dt = " << num(cfg.fallback_dt) << '\n'
        << "scale = " << num(cfg.scale) << '\n'
        << "lateral = " << (cfg.lateral_enabled ? "true" : "false") << '\n';

    const ChannelSpec& c = cfg.domain.channel;
    out << "\n[channel]\n"
        << "x0 = " << num(c.x0) << '\n'
        << "x1 = " << num(c.x1) << '\n'
        << "y_south = " << num(c.y_south) << '\n'
        << "y_north = " << num(c.y_north) << '\n'
        << "cells = " << c.cells << '\n'
        << "cells_across = " << c.cells_across << '\n'
        << "bed = " << num(c.bed) << '\n'
        << "manning_n = " << num(c.manning_n) << '\n';
    write_boundary(out, "upstream", c.upstream);
    write_boundary(out, "downstream", c.downstream);

    for (const FloodplainSpec& fp : cfg.domain.floodplains) {
        out << "\n[floodplain]\n"
            << "name = " << fp.name << '\n'
            << "x0 = " << num(fp.x0) << '\n'
            << "x1 = " << num(fp.x1) << '\n'
            << "y0 = " << num(fp.y0) << '\n'
            << "y1 = " << num(fp.y1) << '\n'
            << "nx = " << fp.nx << '\n'
            << "ny = " << fp.ny << '\n'
            << "manning_n = " << num(fp.manning_n) << '\n';
        if (fp.bed.kind == BedProfile::Kind::Flat) {
            out << "bed = flat\nbed_z = " << num(fp.bed.z) << '\n';
        } else {
            const WallProfile& w = fp.bed.wall;
            out << "bed = ramp\n"
                << "bed_z_outer = " << num(fp.bed.z_outer) << '\n'
                << "bed_y_outer = " << num(fp.bed.y_outer) << '\n'
                << "bed_y_bank = " << num(fp.bed.y_bank) << '\n';
            if (w.kind == WallProfile::Kind::Constant) {
                out << "wall = constant\nwall_value = " << num(w.value) << '\n';
            } else {
                out << "wall = tanh_pair\n"
                    << "wall_amplitude = " << num(w.amplitude) << '\n'
                    << "wall_base = " << num(w.base) << '\n'
                    << "wall_steepness = " << num(w.steepness) << '\n'
                    << "wall_x_down = " << num(w.x_down) << '\n'
                    << "wall_x_up = " << num(w.x_up) << '\n'
                    << "wall_x_split = " << num(w.x_split) << '\n';
            }
        }
        for (Side s : kAllSides) {
            write_boundary(out, side_key(s), fp.boundary[static_cast<int>(s)]);
        }
    }

    const InitialRule unbounded;
    for (const InitialRule& r : cfg.domain.initial) {
        out << "\n[initial]\n"
            << "target = " << target_name(r.target) << '\n'
            << "kind = " << (r.kind == InitialRule::Kind::Depth ? "depth" : "elevation") << '\n'
            << "value = " << num(r.value) << '\n';
        if (r.x0 != unbounded.x0) out << "x0 = " << num(r.x0) << '\n';
        if (r.x1 != unbounded.x1) out << "x1 = " << num(r.x1) << '\n';
        if (r.y0 != unbounded.y0) out << "y0 = " << num(r.y0) << '\n';
        if (r.y1 != unbounded.y1) out << "y1 = " << num(r.y1) << '\n';
    }

    for (const Probe& p : cfg.domain.probes) {
        out << "\n[probe]\n"
            << "id = " << p.id << '\n'
            << "x = " << num(p.at.x) << '\n'
            << "y = " << num(p.at.y) << '\n';
    }
}

void write_config(const std::string& path, const SimConfig& config) {
    std::ofstream out = open_out(path);
    write_config(out, config);
    check_written(out, path);
}

} // namespace hydrocouple
