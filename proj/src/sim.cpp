#include "hydrocouple/sim.hpp"

#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace hydrocouple {

std::string to_string(Mode mode) {
    switch (mode) {
    case Mode::Full2D: return "full2d";
    case Mode::HCM: return "hcm";
    case Mode::FBM: return "fbm";
    }
    return "unknown";
}

Mode parse_mode(const std::string& text) {
    if (text == "full2d") {
        return Mode::Full2D;
    }
    if (text == "hcm") {
        return Mode::HCM;
    }
    if (text == "fbm") {
        return Mode::FBM;
    }
    throw ConfigError("unknown mode '" + text + "' (expected full2d, hcm or fbm)");
}

void SimConfig::validate() const {
    if (!(cfl > 0.0) || cfl > 1.0) {
        throw ConfigError("cfl must lie in (0, 1]");
    }
    if (!(end_time >= 0.0)) {
        throw ConfigError("end time must be non-negative");
    }
    if (!(output_interval > 0.0)) {
        throw ConfigError("output interval must be positive");
    }
    if (!(fallback_dt > 0.0)) {
        throw ConfigError("fallback time step must be positive");
    }
    if (!(scale > 0.0) || scale > 1.0) {
        throw ConfigError("resolution scale must lie in (0, 1]");
    }
}

Simulation::Simulation(SimConfig config) : config_(std::move(config)) {
    config_.validate();
    const DomainSpec& d = config_.domain;
    if (coupled()) {
        mesh_ = build_coupled_mesh(d, config_.scale);
        field2d_ = initial_field_2d(d, mesh_.floodplain, false);
        channel_ = initial_channel(d, mesh_.channel);
    } else {
        mesh_.floodplain = build_full2d_mesh(d, config_.scale);
        field2d_ = initial_field_2d(d, mesh_.floodplain, true);
    }

    for (const Probe& p : d.probes) {
        ProbeLocation where;
        const ChannelGrid1D& ch = mesh_.channel;
        if (coupled() && p.at.y >= ch.y_south && p.at.y <= ch.y_north) {
            if (auto i = ch.locate(p.at.x)) {
                where.channel_cell = *i;
                where.bank = p.at.y < ch.centerline() ? Bank::South : Bank::North;
            }
        }
        if (where.channel_cell < 0) {
            for (std::size_t b = 0; b < mesh_.floodplain.blocks.size(); ++b) {
                if (auto c = mesh_.floodplain.blocks[b].locate(p.at)) {
                    where.block = static_cast<int>(b);
                    where.cell = *c;
                    break;
                }
            }
        }
        if (where.channel_cell < 0 && where.block < 0) {
            throw ConfigError("probe '" + p.id + "' lies outside the domain");
        }
        probes_.push_back(where);
    }
}

double Simulation::cfl_dt() const {
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < mesh_.floodplain.blocks.size(); ++b) {
        const Grid2D& g = mesh_.floodplain.blocks[b];
        const double size = std::min(g.dx, g.dy);
        for (const State2D& w : field2d_[b]) {
            if (is_dry(w)) {
                continue;
            }
            const double speed = std::hypot(velocity_x(w), velocity_y(w)) + std::sqrt(kGravity * w.h);
            dt = std::min(dt, size / speed);
        }
    }
    for (int i = 0; i < mesh_.channel.size(); ++i) {
        const ChannelCrossSection& cs = mesh_.channel.sections[i];
        const SectionState s = channel_[i].section();
        if (is_dry(cs, s.area)) {
            continue;
        }
        const double speed = std::abs(section_velocity(cs, s)) + std::sqrt(kGravity * s.area / cs.width);
        dt = std::min(dt, mesh_.channel.dx(i) / speed);
    }
    if (!std::isfinite(dt)) {
        return config_.fallback_dt;
    }
    return config_.cfl * dt;
}

void Simulation::advance(double dt) {
    if (!(dt > 0.0)) {
        throw DomainError("time step must be positive");
    }
    if (!coupled()) {
        field2d_ = step_2d(mesh_.floodplain, field2d_, dt, t_);
        t_ += dt;
        ++steps_;
        return;
    }

    const std::vector<InterfaceEdge> edges = interface_edges(mesh_, channel_, field2d_);
    last_phi_ = assemble_coupling(mesh_.channel.size(), edges);
    const std::vector<ExternalFlux> external = external_fluxes(edges);

    Field2D next2d = step_2d(mesh_.floodplain, field2d_, dt, t_, external);
    ChannelField next1d = step_1d(mesh_.channel, channel_, dt, t_, &stats_1d_);
    for (int i = 0; i < mesh_.channel.size(); ++i) {
        next1d[i] = apply_coupling(next1d[i], last_phi_[i], dt, &diagnostics_, mesh_.channel.dx(i));
    }

    if (config_.mode == Mode::HCM && config_.lateral_enabled) {
        const auto lateral = step_lateral(mesh_, channel_, edges, dt, t_);
        for (int i = 0; i < mesh_.channel.size(); ++i) {
            const bool dry = is_dry(mesh_.channel.sections[i], next1d[i].area);
            next1d[i].qy_south = dry ? 0.0 : lateral[i][0];
            next1d[i].qy_north = dry ? 0.0 : lateral[i][1];
        }
    } else {
        for (State1D& w : next1d) {
            w.qy_south = 0.0;
            w.qy_north = 0.0;
        }
    }

    field2d_ = std::move(next2d);
    channel_ = std::move(next1d);
    t_ += dt;
    ++steps_;
}

void Simulation::advance_to(double t_target) {
    while (t_ < t_target) {
        double dt = cfl_dt();
        const bool last = t_ + dt >= t_target;
        if (last) {
            dt = t_target - t_;
        }
        advance(dt);
        if (last) {
            t_ = t_target;
        }
    }
}

double Simulation::total_volume() const {
    double v = 0.0;
    for (std::size_t b = 0; b < mesh_.floodplain.blocks.size(); ++b) {
        const double area = mesh_.floodplain.blocks[b].cell_area();
        for (const State2D& w : field2d_[b]) {
            v += w.h * area;
        }
    }
    for (int i = 0; i < mesh_.channel.size(); ++i) {
        v += channel_[i].area * mesh_.channel.dx(i);
    }
    return v;
}

ProbeSample Simulation::sample(const ProbeLocation& where) const {
    if (where.channel_cell >= 0) {
        const ChannelCrossSection& cs = mesh_.channel.sections[where.channel_cell];
        const State1D& w = channel_[where.channel_cell];
        ProbeSample s;
        s.h = w.area / cs.width;
        s.eta = free_surface(cs, w.section());
        s.u = section_velocity(cs, w.section());
        const double qy = where.bank == Bank::South ? w.qy_south : w.qy_north;
        s.v = is_dry(cs, w.area) ? 0.0 : qy / s.h;
        return s;
    }
    const Grid2D& g = mesh_.floodplain.blocks[where.block];
    const State2D& w = field2d_[where.block][where.cell];
    return {g.bed[where.cell] + w.h, w.h, velocity_x(w), velocity_y(w)};
}

ProbeRecord Simulation::sample_probes() const {
    ProbeRecord r;
    r.t = t_;
    for (const ProbeLocation& p : probes_) {
        r.samples.push_back(sample(p));
    }
    return r;
}

RunResult run(const SimConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Simulation sim(config);
    RunResult out;
    out.initial_volume = sim.total_volume();
    out.records.push_back(sim.sample_probes());
    for (long k = 1;; ++k) {
        const double t_out = std::min(k * config.output_interval, config.end_time);
        if (t_out <= sim.time()) {
            break;
        }
        sim.advance_to(t_out);
        out.records.push_back(sim.sample_probes());
    }
    out.mesh = sim.mesh();
    out.field2d = sim.field2d();
    out.channel = sim.channel();
    out.steps = sim.steps();
    out.final_volume = sim.total_volume();
    out.diagnostics = sim.coupling_diagnostics();
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace hydrocouple
