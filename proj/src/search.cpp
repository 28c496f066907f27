#include "lattice_spectra/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "lattice_spectra/operator.hpp"

namespace lspec {

namespace {

InequalityRecord run_checker(const Spectrum& spec, const std::string& id, int k,
                             bool connected) {
  if (id == "ppw") return check_ppw(spec, k);
  if (id == "hp") return check_hp(spec, k);
  if (id == "yang1") return check_yang1(spec, k);
  if (id == "yang2") return check_yang2(spec, k);
  if (id == "ratio") return check_ratio_bound(spec, k);
  if (id == "variance") return check_variance(spec, k);
  if (id == "yang2_quad") return check_yang2_alt(spec, k).first;
  if (id == "yang2_weighted") return check_yang2_alt(spec, k).second;
  if (id == "hp_alt") return check_hp_alt(spec, k);
  if (id == "ppw_alt") return check_ppw_alt(spec, k);
  if (id == "first_gap") return check_first_gap(spec, connected).first;
  if (id == "first_ratio") return check_first_gap(spec, connected).second;
  if (id == "first_eig") return check_first_eig_bound(spec, connected);
  if (id == "recursion") {
    InequalityRecord r;
    r.inequality_id = "recursion";
    r.k = k;
    if (spec.eigenvalues[k - 1] < 1.0 - 1e-12) {
      const RecursionRecord rr = check_recursion(spec, k);
      r.lhs = rr.F_k1;
      r.rhs = rr.bound;
      r.slack = rr.bound - rr.F_k1;
      r.precondition_met = rr.hypothesis_met;
      r.pass = rr.pass;
    } else {
      r.precondition_met = false;
    }
    return r;
  }
  throw std::invalid_argument("unknown inequality id: " + id);
}

}  // namespace

double slack_objective(const Region& region, const std::string& inequality_id,
                       int k) {
  const Spectrum spec = full_spectrum(assemble(region));
  const InequalityRecord r =
      run_checker(spec, inequality_id, k, is_connected(region));
  if (!r.precondition_met || !std::isfinite(r.slack)) return kSlackSentinel;
  if (r.slack < -ineq_tol(r.lhs, r.rhs)) {
    // the theorems forbid this; a genuine observation means a solver bug
    std::cerr << "CRITICAL: negative slack " << r.slack << " for "
              << inequality_id << " k=" << k << " (N=" << region.size() << ")\n";
  }
  return r.slack;
}

std::optional<Region> propose_move(const Region& region, SplitMix64& rng,
                                   int max_retries) {
  if (region.size() < 2) throw std::invalid_argument("region too small to move");
  const std::vector<Point> bnd = boundary(region).points;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const Point& added = bnd[rng.next_below(bnd.size())];
    std::vector<Point> pts = region.points();
    pts.push_back(added);
    // drop any vertex other than the one just added
    const std::uint64_t drop = rng.next_below(pts.size() - 1);
    pts.erase(pts.begin() + static_cast<long>(drop));
    Region candidate(region.dim(), std::move(pts));
    if (candidate.size() == region.size() && is_connected(candidate))
      return candidate;
  }
  return std::nullopt;
}

SearchTrace anneal(const SearchConfig& config) {
  if (config.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (config.decay <= 0.0 || config.decay >= 1.0)
    throw std::invalid_argument("decay must be in (0, 1)");
  if (config.region_size < 2)
    throw std::invalid_argument("region_size must be >= 2");

  SplitMix64 rng(config.seed);
  Region current = path_region(config.n, config.region_size);
  double current_obj = slack_objective(current, config.inequality_id, config.k);

  SearchTrace trace{{}, current, current_obj};
  double temperature =
      config.t0 > 0.0 ? config.t0 : std::max(std::fabs(current_obj), 1e-3);

  for (int step = 0; step < config.steps; ++step) {
    std::optional<Region> candidate = propose_move(current, rng);
    double obj = current_obj;
    bool accepted = false;
    if (candidate) {
      obj = slack_objective(*candidate, config.inequality_id, config.k);
      const double delta = obj - current_obj;
      if (delta <= 0.0 || rng.next_double() < std::exp(-delta / temperature)) {
        accepted = true;
        current = std::move(*candidate);
        current_obj = obj;
        if (current_obj < trace.best_slack) {
          trace.best_slack = current_obj;
          trace.best_region = current;
        }
      }
    }
    trace.steps.push_back({obj, accepted, trace.best_slack});
    temperature *= config.decay;
  }
  return trace;
}

Family family_from_string(const std::string& name) {
  if (name == "boxes") return Family::boxes;
  if (name == "l1balls") return Family::l1balls;
  if (name == "paths") return Family::paths;
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("LATTICE_SPECTRA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

}  // namespace

std::vector<SweepRow> sweep_family(
    Family family, int n, int size_min, int size_max,
    const std::vector<std::string>& inequality_ids) {
  std::vector<std::pair<std::string, Region>> members;
  for (int s = size_min; s <= size_max; ++s) {
    switch (family) {
      case Family::boxes:
        members.emplace_back("box_m" + std::to_string(s),
                             box_region(std::vector<int>(n, s)));
        break;
      case Family::l1balls:
        members.emplace_back("l1ball_r" + std::to_string(s),
                             ball_region(n, s, Point(n, 0), BallMetric::l1));
        break;
      case Family::paths:
        members.emplace_back("path_s" + std::to_string(s),
                             path_region(n, static_cast<std::size_t>(s)));
        break;
    }
  }

  std::vector<std::vector<SweepRow>> slots(members.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= members.size()) break;
      const auto& [id, region] = members[i];
      const Spectrum spec = full_spectrum(assemble(region));
      for (auto& r : full_report(spec, is_connected(region))) {
        if (!inequality_ids.empty() &&
            std::find(inequality_ids.begin(), inequality_ids.end(),
                      r.inequality_id) == inequality_ids.end())
          continue;
        slots[i].push_back({id, std::move(r)});
      }
    }
  };

  const unsigned workers =
      std::min<std::size_t>(worker_count(), std::max<std::size_t>(members.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<SweepRow> out;
  for (auto& slot : slots)
    for (auto& row : slot) out.push_back(std::move(row));
  return out;
}

}  // namespace lspec
