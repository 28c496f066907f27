#include "lattice_spectra/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lspec {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  // shortest representation that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return "0";  // unreachable
}

namespace {

std::string csv_header(const std::string& manifest_ref) {
  std::string out;
  if (!manifest_ref.empty()) out += "# manifest: " + manifest_ref + "\n";
  return out;
}

void append_record(std::ostringstream& os, const std::string& region_id,
                   const InequalityRecord& r) {
  os << region_id << ',' << r.inequality_id << ',' << r.k << ','
     << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
     << format_double(r.slack) << ',' << (r.precondition_met ? "true" : "false")
     << ',' << (r.pass ? "true" : "false") << '\n';
}

nlohmann::json record_to_json(const std::string& region_id,
                              const InequalityRecord& r) {
  nlohmann::json j;
  j["region_id"] = region_id;
  j["inequality_id"] = r.inequality_id;
  j["k"] = r.k;
  // infinities as strings so the document stays valid JSON
  j["lhs"] = std::isfinite(r.lhs) ? nlohmann::json(r.lhs)
                                  : nlohmann::json(format_double(r.lhs));
  j["rhs"] = std::isfinite(r.rhs) ? nlohmann::json(r.rhs)
                                  : nlohmann::json(format_double(r.rhs));
  j["slack"] = std::isfinite(r.slack) ? nlohmann::json(r.slack)
                                      : nlohmann::json(format_double(r.slack));
  j["precondition_met"] = r.precondition_met;
  j["pass"] = r.pass;
  return j;
}

}  // namespace

std::string report_to_csv(const std::string& region_id,
                          const std::vector<InequalityRecord>& records,
                          const std::string& manifest_ref) {
  std::ostringstream os;
  os << csv_header(manifest_ref)
     << "region_id,inequality_id,k,lhs,rhs,slack,precondition_met,pass\n";
  for (const auto& r : records) append_record(os, region_id, r);
  return os.str();
}

std::string report_to_json(const std::string& region_id,
                           const std::vector<InequalityRecord>& records,
                           const std::string& manifest_ref) {
  nlohmann::json j;
  if (!manifest_ref.empty()) j["manifest"] = manifest_ref;
  j["region_id"] = region_id;
  auto& arr = j["records"] = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(record_to_json(region_id, r));
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::string& manifest_ref) {
  std::ostringstream os;
  os << csv_header(manifest_ref)
     << "region_id,inequality_id,k,lhs,rhs,slack,precondition_met,pass\n";
  for (const auto& row : rows) append_record(os, row.region_id, row.record);
  return os.str();
}

std::string trace_to_csv(const SearchTrace& trace,
                         const std::string& manifest_ref) {
  std::ostringstream os;
  os << csv_header(manifest_ref) << "step,objective,accepted,best_so_far\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& e = trace.steps[i];
    os << i << ',' << format_double(e.objective) << ','
       << (e.accepted ? "true" : "false") << ','
       << format_double(e.best_so_far) << '\n';
  }
  return os.str();
}

std::string spectrum_to_json(const Spectrum& spec, bool include_vectors) {
  nlohmann::json j;
  j["eigenvalues"] = spec.eigenvalues;
  j["n"] = spec.n;
  j["N"] = spec.N;
  if (include_vectors) j["eigenvectors"] = spec.vectors;
  return j.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["config"] = manifest.config.empty()
                    ? nlohmann::json::object()
                    : nlohmann::json::parse(manifest.config);
  j["version"] = manifest.version;
  j["seeds"] = manifest.seeds;
  j["timestamp"] = manifest.timestamp;
  j["inputs"] = manifest.inputs;
  j["outputs"] = manifest.outputs;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace lspec
