#pragma once

// Probe and snapshot CSV files, and the line-oriented configuration format.
//
// Configuration files hold `key = value` lines grouped in sections:
//
//   [run]          mode, end_time, cfl, output_interval, fallback_dt, scale, lateral
//   [channel]      extent, cells, bed, manning_n, upstream/downstream boundaries
//   [floodplain]   one per block: extent, cells, manning_n, bed profile, side boundaries
//   [initial]      one per rule, applied in file order
//   [probe]        one per probe: id, x, y
//
// `#` starts a comment. Unknown sections or keys are rejected with their line number.

#include "hydrocouple/sim.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hydrocouple {

inline constexpr const char* kProbeHeader = "t,probe_id,eta,H,u,v";
inline constexpr const char* kSnapshotHeader = "x,y,zb,H,eta,u,v,vN,vS";

/// Text for a double with 17 significant digits.
std::string format_double(double v);

void write_probes(std::ostream& out, const std::vector<Probe>& probes,
                  const std::vector<ProbeRecord>& records);
void write_probes(const std::string& path, const std::vector<Probe>& probes,
                  const std::vector<ProbeRecord>& records);

struct ProbeTable {
    std::vector<std::string> ids;
    std::vector<ProbeRecord> records;
};

ProbeTable read_probes(std::istream& in);
ProbeTable read_probes(const std::string& path);

/// One row per 2D cell, then one per channel cell; channel rows fill vN and vS.
void write_snapshot(std::ostream& out, const CoupledMesh& mesh, const Field2D& field2d,
                    const ChannelField& channel);
void write_snapshot(const std::string& path, const CoupledMesh& mesh, const Field2D& field2d,
                    const ChannelField& channel);

SimConfig parse_config(std::istream& in);
SimConfig parse_config(const std::string& path);

void write_config(std::ostream& out, const SimConfig& config);
void write_config(const std::string& path, const SimConfig& config);

} // namespace hydrocouple
