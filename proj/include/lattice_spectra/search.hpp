#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattice_spectra/inequalities.hpp"
#include "lattice_spectra/region.hpp"

namespace lspec {

/// Infinite or inadmissible slacks sort after every finite value.
inline constexpr double kSlackSentinel = 1e300;

struct SearchConfig {
  int n = 2;
  std::size_t region_size = 8;
  std::string inequality_id = "ppw";
  int k = 1;
  int steps = 100;
  double t0 = -1.0;      // < 0: start at the initial slack magnitude
  double decay = 0.995;  // geometric per-step temperature decay
  std::uint64_t seed = 0;
};

struct TraceEntry {
  double objective = 0.0;
  bool accepted = false;
  double best_so_far = 0.0;
};

struct SearchTrace {
  std::vector<TraceEntry> steps;
  Region best_region;
  double best_slack = 0.0;
};

/// Slack of the named inequality at k on the given region (assemble -> full
/// spectrum -> checker). Returns the sentinel for +inf or vacuous records.
double slack_objective(const Region& region, const std::string& inequality_id,
                       int k);

/// Size- and connectivity-preserving move: add one boundary vertex, then drop
/// one vertex whose removal keeps the region connected (resampled up to
/// `max_retries` times). nullopt when no valid move was found.
std::optional<Region> propose_move(const Region& region, SplitMix64& rng,
                                   int max_retries = 64);

/// Metropolis annealing on the slack objective. Initial region is the straight
/// path of the configured size; deterministic per seed.
SearchTrace anneal(const SearchConfig& config);

enum class Family { boxes, l1balls, paths };

Family family_from_string(const std::string& name);

struct SweepRow {
  std::string region_id;
  InequalityRecord record;
};

/// full_report for every member of a parametric family, `size_min..size_max`
/// inclusive (side length for boxes, radius for l1 balls, vertex count for
/// paths). Empty `inequality_ids` means all. Members are evaluated on a worker
/// pool bounded by LATTICE_SPECTRA_THREADS (default: hardware concurrency).
std::vector<SweepRow> sweep_family(Family family, int n, int size_min,
                                   int size_max,
                                   const std::vector<std::string>& inequality_ids);

}  // namespace lspec
