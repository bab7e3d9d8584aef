#include "hydrocouple/verify/criteria.hpp"

#include "hydrocouple/cases.hpp"
#include "hydrocouple/constants.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/verify/properties.hpp"
#include "hydrocouple/verify/stoker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>

namespace hydrocouple::verify {

namespace {

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

template <class F>
CriterionResult timed(int id, std::string name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, std::move(name)};
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// CFL steps landing exactly on `end`, calling `check` after each step.
template <class F>
void step_until(Simulation& sim, double end, F&& check) {
    while (sim.time() < end) {
        const double dt = std::min(sim.cfl_dt(), end - sim.time());
        sim.advance(dt);
        check(sim);
    }
}

bool coupling_is_zero(const Simulation& sim) {
    return std::all_of(sim.last_coupling().begin(), sim.last_coupling().end(),
                       [](const CouplingTerm& c) { return c.phi_a == 0.0 && c.phi_q == 0.0; });
}

SimConfig case_config(int id, Mode mode, double scale) {
    CaseSpec spec;
    spec.id = id;
    spec.mode = mode;
    spec.scale = scale;
    return build_case(spec);
}

InitialRule rule(InitialRule::Target target, InitialRule::Kind kind, double value) {
    InitialRule r;
    r.target = target;
    r.kind = kind;
    r.value = value;
    return r;
}

// 1D channel dam break over [0, 10], dam at 5, width 0.5, no friction.
std::vector<double> dam_break_1d(double h_left, double h_right, int cells, double t_end) {
    ChannelCrossSection cs;
    cs.width = 0.5;
    cs.bank_left = 1e9;
    cs.bank_right = 1e9;
    ChannelGrid1D channel = make_channel(0.0, 10.0, cells, 0.0, 0.5, cs);
    ChannelField w(cells);
    for (int i = 0; i < cells; ++i) {
        w[i].area = cs.width * (channel.center(i) < 5.0 ? h_left : h_right);
    }
    double t = 0.0;
    while (t < t_end) {
        double dt = 1e300;
        for (int i = 0; i < cells; ++i) {
            const SectionState s = w[i].section();
            if (is_dry(cs, s.area)) {
                continue;
            }
            const double speed = std::abs(section_velocity(cs, s)) + std::sqrt(kGravity * s.area / cs.width);
            dt = std::min(dt, channel.dx(i) / speed);
        }
        dt = std::min(kDefaultCfl * dt, t_end - t);
        w = step_1d(channel, w, dt, t);
        t += dt;
    }
    std::vector<double> depth(cells);
    for (int i = 0; i < cells; ++i) {
        depth[i] = w[i].area / cs.width;
    }
    return depth;
}

// The same dam break on a 2D block, uniform in y.
std::vector<double> dam_break_2d(double h_left, double h_right, int cells, double t_end) {
    const double dx = 10.0 / cells;
    const int ny = 2;
    Mesh2D mesh;
    Grid2D g("block", cells, ny, dx, dx, {0.0, 0.0});
    g.bed.assign(static_cast<std::size_t>(cells * ny), 0.0);
    mesh.blocks.push_back(g);
    Field2D field(1, std::vector<State2D>(cells * ny));
    for (int c = 0; c < cells * ny; ++c) {
        field[0][c].h = g.center(c).x < 5.0 ? h_left : h_right;
    }
    double t = 0.0;
    while (t < t_end) {
        double dt = 1e300;
        for (const State2D& w : field[0]) {
            if (!is_dry(w)) {
                dt = std::min(dt, dx / (std::hypot(velocity_x(w), velocity_y(w)) + std::sqrt(kGravity * w.h)));
            }
        }
        dt = std::min(kDefaultCfl * dt, t_end - t);
        field = step_2d(mesh, field, dt, t);
        t += dt;
    }
    std::vector<double> depth(cells);
    for (int i = 0; i < cells; ++i) {
        depth[i] = field[0][g.index(i, 0)].h;
    }
    return depth;
}

double probe_l1_gap(const std::vector<ProbeRecord>& a, const std::vector<ProbeRecord>& ref,
                    std::size_t probe) {
    double sum = 0.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        const double dt = a[k].t - a[k - 1].t;
        const double e0 = std::abs(a[k - 1].samples[probe].eta - ref[k - 1].samples[probe].eta);
        const double e1 = std::abs(a[k].samples[probe].eta - ref[k].samples[probe].eta);
        sum += 0.5 * dt * (e0 + e1);
    }
    return sum;
}

} // namespace

CriterionResult well_balance() {
    return timed(1, "well-balance, lake at rest", [](CriterionResult& r) {
        SimConfig cfg = case_config(2, Mode::HCM, 0.25);
        const double eta0 = 1.6;
        cfg.domain.initial = {rule(InitialRule::Target::All, InitialRule::Kind::Elevation, eta0)};
        Simulation sim(cfg);
        double eta_err = 0.0;
        double q_err = 0.0;
        bool phi_zero = true;
        const auto start = std::chrono::steady_clock::now();
        for (int s = 0; s < 1000; ++s) {
            sim.advance(sim.cfl_dt());
            phi_zero = phi_zero && coupling_is_zero(sim);
            for (std::size_t b = 0; b < sim.field2d().size(); ++b) {
                const Grid2D& g = sim.mesh().floodplain.blocks[b];
                for (int c = 0; c < g.cell_count(); ++c) {
                    const State2D& w = sim.field2d()[b][c];
                    if (w.h > 0.0) {
                        eta_err = std::max(eta_err, std::abs(w.h + g.bed[c] - eta0));
                    }
                    q_err = std::max({q_err, std::abs(w.qx), std::abs(w.qy)});
                }
            }
            for (int i = 0; i < sim.mesh().channel.size(); ++i) {
                const State1D& w = sim.channel()[i];
                const ChannelCrossSection& cs = sim.mesh().channel.sections[i];
                eta_err = std::max(eta_err, std::abs(free_surface(cs, w.section()) - eta0));
                q_err = std::max({q_err, std::abs(w.discharge), std::abs(w.qy_south),
                                  std::abs(w.qy_north)});
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.passed = eta_err <= 1e-10 && q_err <= 1e-12 && phi_zero && secs <= 10.0;
        r.detail = fmt("max|eta-eta0| %.2e (<=1e-10), max|q| %.2e (<=1e-12), Phi %s, %.2f s (<=10)",
                       eta_err, q_err, phi_zero ? "== 0 every step" : "NONZERO", secs);
    });
}

CriterionResult no_numerical_flooding() {
    return timed(2, "no numerical flooding", [](CriterionResult& r) {
        SimConfig cfg = case_config(3, Mode::HCM, 1.0);
        cfg.domain.channel.upstream = BoundarySpec::prescribed({0.08, 0.0, 10.0});
        Simulation sim(cfg);
        bool dry = true;
        bool phi_zero = true;
        step_until(sim, cfg.end_time, [&](const Simulation& s) {
            phi_zero = phi_zero && coupling_is_zero(s);
            for (const auto& block : s.field2d()) {
                for (const State2D& w : block) {
                    dry = dry && w.h == 0.0 && w.qx == 0.0 && w.qy == 0.0;
                }
            }
        });
        r.passed = dry && phi_zero;
        r.detail = fmt("%ld steps to t = %.0f s: floodplain H %s, Phi %s", sim.steps(), sim.time(),
                       dry ? "== 0 every step" : "NONZERO", phi_zero ? "== 0 every step" : "NONZERO");
    });
}

CriterionResult mass_conservation() {
    return timed(3, "mass conservation, closed Test-3", [](CriterionResult& r) {
        r.passed = true;
        for (Mode mode : {Mode::HCM, Mode::FBM}) {
            SimConfig cfg = case_config(3, mode, 0.5);
            cfg.domain.channel.upstream = BoundarySpec::wall();
            cfg.domain.initial = {rule(InitialRule::Target::Channel, InitialRule::Kind::Depth, 0.15)};
            Simulation sim(cfg);
            const double v0 = sim.total_volume();
            double drift = 0.0;
            step_until(sim, cfg.end_time, [&](const Simulation& s) {
                drift = std::max(drift, std::abs(s.total_volume() - v0) / v0);
            });
            const bool ok = drift <= 1e-10;
            r.passed = r.passed && ok;
            r.detail += fmt("%s%s drift %.2e (<=1e-10), %ld clips", r.detail.empty() ? "" : "; ",
                            to_string(mode).c_str(), drift, sim.coupling_diagnostics().clip_events);
        }
    });
}

CriterionResult dam_break_oracle() {
    return timed(4, "Stoker dam break, 1D and 2D", [](CriterionResult& r) {
        const Stoker exact(0.504, 0.003);
        r.passed = true;
        for (int dim : {1, 2}) {
            double err[3];
            double centre[3];
            const int cells[3] = {250, 500, 1000};  // dx = 0.04, 0.02, 0.01
            for (int k = 0; k < 3; ++k) {
                const auto h = dim == 1 ? dam_break_1d(0.504, 0.003, cells[k], 1.0)
                                        : dam_break_2d(0.504, 0.003, cells[k], 1.0);
                err[k] = l1_depth_error(exact, h, 0.0, 10.0, 1.0, 5.0);
                centre[k] = l1_depth_error(exact, h, 0.0, 10.0, 1.0, 5.0, Sampling::CellCentre);
            }
            const double order = std::log2(err[1] / err[2]);
            const bool ok = err[1] <= 0.015 && err[0] > err[1] && err[1] > err[2] && order >= 0.7;
            r.passed = r.passed && ok;
            r.detail += fmt("%s%dD L1 %.2e/%.2e/%.2e at dx .04/.02/.01 (<=0.015 at .02), order %.3f "
                            "(>=0.7) [centre-sampled order %.3f]",
                            dim == 1 ? "" : "; ", dim, err[0], err[1], err[2], order,
                            std::log2(centre[1] / centre[2]));
        }
    });
}

CriterionResult hll_properties() {
    return timed(5, "HLL consistency and rotation", [](CriterionResult& r) {
        const auto start = std::chrono::steady_clock::now();
        const PropertyReport reports[] = {
            hll_consistency(20000, 11),       normal_flux_rotation(20000, 12),
            step_rotation(10000, 13),         positivity(500, 14),
            volume_conservation_2d(1000, 15), lake_at_rest_2d(1000, 16),
        };
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.passed = secs <= 5.0;
        int failed = 0;
        for (const PropertyReport& p : reports) {
            if (!p.passed) {
                ++failed;
                r.passed = false;
                r.detail += p.name + " FAILED (" + (p.detail.empty() ? fmt("%.2e", p.worst) : p.detail) + "); ";
            }
        }
        r.detail += fmt("%d/6 suites pass, worst consistency %.1e, rotation %.1e, %.2f s (<=5)",
                        6 - failed, std::max(reports[0].worst, reports[1].worst),
                        reports[2].worst, secs);
    });
}

CriterionResult mode_nesting() {
    return timed(6, "FBM = HCM without lateral discharges", [](CriterionResult& r) {
        SimConfig hcm = case_config(1, Mode::HCM, 0.5);
        hcm.lateral_enabled = false;
        SimConfig fbm = hcm;
        fbm.mode = Mode::FBM;
        Simulation a(hcm);
        Simulation b(fbm);
        double worst = 0.0;
        bool same_dt = true;
        while (a.time() < hcm.end_time) {
            const double dt = std::min(a.cfl_dt(), hcm.end_time - a.time());
            same_dt = same_dt && std::min(b.cfl_dt(), hcm.end_time - b.time()) == dt;
            a.advance(dt);
            b.advance(dt);
            for (std::size_t k = 0; k < a.field2d().size(); ++k) {
                for (std::size_t c = 0; c < a.field2d()[k].size(); ++c) {
                    const State2D& x = a.field2d()[k][c];
                    const State2D& y = b.field2d()[k][c];
                    worst = std::max({worst, std::abs(x.h - y.h), std::abs(x.qx - y.qx), std::abs(x.qy - y.qy)});
                }
            }
            for (std::size_t i = 0; i < a.channel().size(); ++i) {
                const State1D& x = a.channel()[i];
                const State1D& y = b.channel()[i];
                worst = std::max({worst, std::abs(x.area - y.area), std::abs(x.discharge - y.discharge),
                                  std::abs(x.qy_south - y.qy_south), std::abs(x.qy_north - y.qy_north)});
            }
        }
        r.passed = worst <= 1e-14 && same_dt;
        r.detail = fmt("%ld steps, max field difference %.2e (<=1e-14), time steps %s", a.steps(),
                       worst, same_dt ? "identical" : "DIFFER");
    });
}

CriterionResult desk_scale_case1() {
    return timed(7, "desk-scale Test 1", [](CriterionResult& r) {
        const auto start = std::chrono::steady_clock::now();
        const RunResult full = run(case_config(1, Mode::Full2D, 0.5));
        const RunResult hcm = run(case_config(1, Mode::HCM, 0.5));
        const RunResult fbm = run(case_config(1, Mode::FBM, 0.5));
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const DomainSpec domain = case_domain(1);
        const std::size_t p3 = 2;
        const std::size_t p4 = 3;

        bool fbm_zero = true;
        double hcm_peak = 0.0;
        for (std::size_t k = 0; k < fbm.records.size(); ++k) {
            fbm_zero = fbm_zero && fbm.records[k].samples[p3].v == 0.0;
            // Flooding: the floodplain beside P3 carries more than the initial film.
            if (hcm.records[k].samples[p4].h > 0.003 + 1e-6) {
                hcm_peak = std::max(hcm_peak, std::abs(hcm.records[k].samples[p3].v));
            }
        }
        const bool a = fbm_zero && hcm_peak > 1e-6;

        int wins = 0;
        std::string gaps;
        for (std::size_t p = 0; p < domain.probes.size(); ++p) {
            const double gh = probe_l1_gap(hcm.records, full.records, p);
            const double gf = probe_l1_gap(fbm.records, full.records, p);
            wins += gh <= gf ? 1 : 0;
            gaps += fmt(" %s %.1e/%.1e", domain.probes[p].id.c_str(), gh, gf);
        }
        const bool b = wins >= 4;
        const bool c = hcm.steps < full.steps && fbm.steps < full.steps;

        r.passed = a && b && c && secs <= 300.0;
        r.detail = fmt("(a) FBM v(P3) %s, HCM max|v(P3)| %.2e: %s; (b) HCM<=FBM at %d/6 probes "
                       "[int|eta-eta2D| HCM/FBM:%s]: %s; (c) steps full2d %ld, hcm %ld, fbm %ld: %s; %.1f s",
                       fbm_zero ? "== 0" : "NONZERO", hcm_peak, a ? "ok" : "FAIL", wins, gaps.c_str(),
                       b ? "ok" : "FAIL", full.steps, hcm.steps, fbm.steps, c ? "ok" : "FAIL", secs);
    });
}

CriterionResult desk_scale_case3() {
    return timed(8, "desk-scale Test 3 flood-drain cycle", [](CriterionResult& r) {
        const SimConfig cfg = case_config(3, Mode::HCM, 0.5);
        const RunResult res = run(cfg);
        bool ok = true;
        std::string per_probe;
        for (std::size_t p = 10; p < 15; ++p) {
            std::size_t first_wet = res.records.size();
            std::size_t peak_at = 0;
            double peak = 0.0;
            for (std::size_t k = 0; k < res.records.size(); ++k) {
                const double h = res.records[k].samples[p].h;
                if (h > 0.0 && first_wet == res.records.size()) {
                    first_wet = k;
                }
                if (h > peak) {
                    peak = h;
                    peak_at = k;
                }
            }
            // Dry again from some record after the peak up to the end.
            std::size_t dry_from = res.records.size();
            for (std::size_t k = res.records.size(); k-- > peak_at;) {
                if (res.records[k].samples[p].h > 1e-6) {
                    break;
                }
                dry_from = k;
            }
            const bool starts_dry = first_wet > 0 && first_wet < res.records.size();
            const bool drains = dry_from < res.records.size() && res.records[dry_from].t < cfg.end_time;
            ok = ok && starts_dry && drains;
            per_probe += fmt(" %s wet@%.1fs peak %.1e final %.1e%s;", cfg.domain.probes[p].id.c_str(),
                             starts_dry ? res.records[first_wet].t : -1.0, peak,
                             res.records.back().samples[p].h, drains ? "" : " (not drained)");
        }
        r.passed = ok;
        r.detail = fmt("H == 0 before overtopping, <= 1e-6 before t = %.0f s:%s", cfg.end_time,
                       per_probe.c_str());
    });
}

CriterionResult run_criterion(int id) {
    switch (id) {
    case 1: return well_balance();
    case 2: return no_numerical_flooding();
    case 3: return mass_conservation();
    case 4: return dam_break_oracle();
    case 5: return hll_properties();
    case 6: return mode_nesting();
    case 7: return desk_scale_case1();
    case 8: return desk_scale_case3();
    default: throw ConfigError("unknown criterion " + std::to_string(id));
    }
}

std::string format_line(const CriterionResult& r) {
    return fmt("[%s] %d %-38s %7.2f s  %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
               r.seconds, r.detail.c_str());
}

std::vector<CriterionResult> run_all(const Options& options, std::ostream* out) {
    std::vector<int> ids = options.only;
    if (ids.empty()) {
        for (int id = 1; id <= kCriterionCount; ++id) {
            ids.push_back(id);
        }
    }
    std::vector<CriterionResult> results;
    for (int id : ids) {
        results.push_back(run_criterion(id));
        if (out != nullptr) {
            *out << format_line(results.back()) << std::endl;
        }
    }
    if (out != nullptr) {
        const auto passed = std::count_if(results.begin(), results.end(),
                                          [](const CriterionResult& r) { return r.passed; });
        *out << passed << "/" << results.size() << " criteria passed\n";
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

} // namespace hydrocouple::verify
