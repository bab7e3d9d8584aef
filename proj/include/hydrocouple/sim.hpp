#pragma once

// Time integration of the three run modes with a shared CFL time step and
// probe sampling.

#include "hydrocouple/coupling.hpp"
#include "hydrocouple/domain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hydrocouple {

enum class Mode { Full2D, HCM, FBM };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct SimConfig {
    Mode mode = Mode::HCM;
    double end_time = 1.0;
    double cfl = kDefaultCfl;
    double output_interval = 0.1;
    double fallback_dt = 1e-3;  // used while every cell is dry
    double scale = 1.0;
    bool lateral_enabled = true;  // HCM only; false reproduces FBM
    DomainSpec domain;

    void validate() const;
};

struct ProbeSample {
    double eta = 0.0;
    double h = 0.0;
    double u = 0.0;
    double v = 0.0;

    friend bool operator==(const ProbeSample&, const ProbeSample&) = default;
};

struct ProbeRecord {
    double t = 0.0;
    std::vector<ProbeSample> samples;  // one per probe, in config order

    friend bool operator==(const ProbeRecord&, const ProbeRecord&) = default;
};

/// Where a probe reads: a 2D cell, or a channel cell and bank.
struct ProbeLocation {
    int block = -1;
    int cell = -1;
    int channel_cell = -1;
    Bank bank = Bank::South;
};

class Simulation {
public:
    explicit Simulation(SimConfig config);

    const SimConfig& config() const { return config_; }
    Mode mode() const { return config_.mode; }
    bool coupled() const { return config_.mode != Mode::Full2D; }

    /// Channel grid and floodplain blocks; in Full2D the floodplain mesh holds every block.
    const CoupledMesh& mesh() const { return mesh_; }
    const Field2D& field2d() const { return field2d_; }
    const ChannelField& channel() const { return channel_; }
    Field2D& field2d() { return field2d_; }
    ChannelField& channel() { return channel_; }

    double time() const { return t_; }
    long steps() const { return steps_; }

    /// CFL-limited time step over all wet cells, or the fallback when all are dry.
    double cfl_dt() const;

    /// One step of size dt from level n.
    void advance(double dt);

    /// Advance with CFL steps, landing exactly on `t_target`.
    void advance_to(double t_target);

    double total_volume() const;

    /// Coupling term of the last step (empty in Full2D).
    const std::vector<CouplingTerm>& last_coupling() const { return last_phi_; }
    const CouplingDiagnostics& coupling_diagnostics() const { return diagnostics_; }
    const Step1DStats& channel_stats() const { return stats_1d_; }

    const std::vector<ProbeLocation>& probe_locations() const { return probes_; }
    ProbeSample sample(const ProbeLocation& where) const;
    ProbeRecord sample_probes() const;

private:
    SimConfig config_;
    CoupledMesh mesh_;
    Field2D field2d_;
    ChannelField channel_;
    double t_ = 0.0;
    long steps_ = 0;
    std::vector<CouplingTerm> last_phi_;
    CouplingDiagnostics diagnostics_;
    Step1DStats stats_1d_;
    std::vector<ProbeLocation> probes_;
};

struct RunResult {
    CoupledMesh mesh;
    Field2D field2d;
    ChannelField channel;
    std::vector<ProbeRecord> records;
    long steps = 0;
    double wall_seconds = 0.0;
    double initial_volume = 0.0;
    double final_volume = 0.0;
    CouplingDiagnostics diagnostics;
};

/// Integrate to the end time, sampling probes at t = 0 and every output interval.
RunResult run(const SimConfig& config);

} // namespace hydrocouple
