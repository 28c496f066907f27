#pragma once

#include <string>
#include <vector>

#include "lattice_spectra/eigensolver.hpp"
#include "lattice_spectra/inequalities.hpp"
#include "lattice_spectra/search.hpp"

namespace lspec {

/// Deterministic shortest-exact decimal for a double; +-inf serializes as
/// "inf"/"-inf" (never a large finite float).
std::string format_double(double v);

// Report CSV: region_id, inequality_id, k, lhs, rhs, slack, precondition_met,
// pass. The JSON mirror carries identical fields.
std::string report_to_csv(const std::string& region_id,
                          const std::vector<InequalityRecord>& records,
                          const std::string& manifest_ref = "");
std::string report_to_json(const std::string& region_id,
                           const std::vector<InequalityRecord>& records,
                           const std::string& manifest_ref = "");
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::string& manifest_ref = "");

// Trace CSV: step, objective, accepted, best_so_far.
std::string trace_to_csv(const SearchTrace& trace,
                         const std::string& manifest_ref = "");

/// Spectrum dump: {"eigenvalues": [...], "n": int, "N": int}, eigenvectors
/// optional.
std::string spectrum_to_json(const Spectrum& spec,
                             bool include_vectors = false);

struct RunManifest {
  std::string command;
  std::string config;  // echoed flag settings, JSON text
  std::string version;
  std::vector<std::uint64_t> seeds;
  std::string timestamp;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& manifest);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace lspec
