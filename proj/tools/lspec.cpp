// lspec: generate lattice regions, verify eigenvalue inequalities on them,
// and search for near-extremal configurations.
//
// Exit codes: 0 success, 1 inequality failure, 2 I/O or usage error.

#include <algorithm>
#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lattice_spectra/inequalities.hpp"
#include "lattice_spectra/operator.hpp"
#include "lattice_spectra/proof_internals.hpp"
#include "lattice_spectra/report_io.hpp"
#include "lattice_spectra/search.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_manifest(const std::string& command, const std::string& config,
                    const std::vector<std::uint64_t>& seeds,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  if (outputs.empty()) return;
  lspec::RunManifest m;
  m.command = command;
  m.config = config;
  m.version = kVersion;
  m.seeds = seeds;
  m.timestamp = utc_now();
  m.inputs = inputs;
  m.outputs = outputs;
  lspec::write_text_file(outputs.front() + ".manifest.json",
                         lspec::manifest_to_json(m));
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) dims.push_back(std::stoi(item));
  return dims;
}

int cmd_gen(const std::string& shape, int n, const std::string& dims_text,
            int radius, const std::string& metric, int size,
            std::optional<std::uint64_t> seed, const std::string& out) {
  lspec::Region region = [&] {
    if (shape == "box") {
      std::vector<int> dims = parse_dims(dims_text);
      if (dims.empty()) throw CLI::ValidationError("--dims required for box");
      if (n > 0 && static_cast<int>(dims.size()) != n)
        throw CLI::ValidationError("--dims arity disagrees with --n");
      return lspec::box_region(dims);
    }
    if (shape == "ball") {
      if (radius < 0) throw CLI::ValidationError("--radius required for ball");
      return lspec::ball_region(n, radius, lspec::Point(n, 0),
                                metric == "linf" ? lspec::BallMetric::linf
                                                 : lspec::BallMetric::l1);
    }
    if (shape == "random") {
      if (size < 1) throw CLI::ValidationError("--size required for random");
      if (!seed) throw CLI::ValidationError("--seed required for random");
      return lspec::random_connected_region(n, static_cast<std::size_t>(size),
                                            *seed);
    }
    throw CLI::ValidationError("unknown shape: " + shape);
  }();

  const std::string manifest_ref = out + ".manifest.json";
  lspec::write_region_json(region, out, manifest_ref);
  nlohmann::json cfg{{"shape", shape}, {"n", region.dim()},
                     {"size", region.size()}};
  write_manifest("gen", cfg.dump(), seed ? std::vector<std::uint64_t>{*seed}
                                         : std::vector<std::uint64_t>{},
                 {}, {out});
  std::cout << "wrote " << out << " (N=" << region.size() << ")\n";
  return 0;
}

int cmd_verify(const std::string& region_path, const std::string& out,
               const std::string& json_out, bool proof_internals) {
  const lspec::Region region = lspec::read_region_json(region_path);
  const lspec::DirichletOperator op = lspec::assemble(region);
  const lspec::Spectrum spec = lspec::full_spectrum(op);
  const bool connected = lspec::is_connected(region);
  const std::vector<lspec::InequalityRecord> records =
      lspec::full_report(spec, connected);

  std::vector<std::string> outputs;
  if (!out.empty()) outputs.push_back(out);
  if (!json_out.empty()) outputs.push_back(json_out);
  const std::string manifest_ref =
      outputs.empty() ? "" : outputs.front() + ".manifest.json";
  if (!out.empty())
    lspec::write_text_file(out,
                           lspec::report_to_csv(region_path, records, manifest_ref));
  if (!json_out.empty())
    lspec::write_text_file(
        json_out, lspec::report_to_json(region_path, records, manifest_ref));
  nlohmann::json cfg{{"region", region_path},
                     {"proof_internals", proof_internals}};
  write_manifest("verify", cfg.dump(), {}, {region_path}, outputs);

  int checked = 0;
  int failed = 0;
  for (const auto& r : records) {
    if (!r.precondition_met) continue;
    ++checked;
    if (!r.pass) {
      ++failed;
      std::cout << "FAIL " << r.inequality_id << " k=" << r.k
                << " lhs=" << lspec::format_double(r.lhs)
                << " rhs=" << lspec::format_double(r.rhs)
                << " slack=" << lspec::format_double(r.slack) << "\n";
    }
  }

  if (proof_internals && region.size() >= 2) {
    const int kmax = std::min<int>(10, static_cast<int>(region.size()) - 1);
    double worst = 0.0;
    for (int k = 1; k <= kmax; ++k)
      for (int alpha = 1; alpha <= region.dim(); ++alpha) {
        const lspec::ProofData pd =
            lspec::build_proof_data(spec, region, k, alpha);
        worst = std::max(worst, lspec::check_prop31(pd, spec));
        worst = std::max(worst, lspec::check_kg_identity(pd, spec));
        worst = std::max(worst, lspec::check_orthogonality(pd, spec, region));
        for (const auto& c : lspec::check_lam1_chain(pd, spec)) {
          if (c.degenerate) continue;  // reported as a warning, not a failure
          worst = std::max(worst, std::max(-c.lower_slack, -c.upper_slack));
        }
        for (const auto& c : lspec::check_hp_claim(pd, spec))
          if (!c.vacuous) worst = std::max(worst, -c.slack);
      }
    const lspec::GradLemmaResult gl = lspec::check_grad_lemma(spec, region);
    worst = std::max({worst, gl.equality_residual, -gl.inequality_slack,
                      gl.energy_eigen_residual});
    ++checked;
    if (worst > 1e-8) {
      ++failed;
      std::cout << "FAIL proof-internals worst deviation "
                << lspec::format_double(worst) << "\n";
    } else {
      std::cout << "proof-internals worst deviation "
                << lspec::format_double(worst) << "\n";
    }
  }

  std::cout << (failed == 0 ? "PASS " : "FAIL ") << (checked - failed) << "/"
            << checked << "\n";
  return failed == 0 ? 0 : 1;
}

int cmd_search(const lspec::SearchConfig& config, const std::string& out,
               const std::string& best_out) {
  const lspec::SearchTrace trace = lspec::anneal(config);
  const std::string manifest_ref = out + ".manifest.json";
  lspec::write_text_file(out, lspec::trace_to_csv(trace, manifest_ref));
  std::vector<std::string> outputs{out};
  if (!best_out.empty()) {
    lspec::write_region_json(trace.best_region, best_out, manifest_ref);
    outputs.push_back(best_out);
  }
  nlohmann::json cfg{{"ineq", config.inequality_id}, {"k", config.k},
                     {"n", config.n},               {"size", config.region_size},
                     {"steps", config.steps},       {"decay", config.decay}};
  write_manifest("search", cfg.dump(), {config.seed}, {}, outputs);
  std::cout << "best slack " << lspec::format_double(trace.best_slack) << "\n";
  return 0;
}

int cmd_sweep(const std::string& family, int n, const std::string& sizes,
              const std::vector<std::string>& ineqs, const std::string& out) {
  const auto dots = sizes.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--sizes must look like 2..6");
  const int lo = std::stoi(sizes.substr(0, dots));
  const int hi = std::stoi(sizes.substr(dots + 2));
  const std::vector<lspec::SweepRow> rows =
      lspec::sweep_family(lspec::family_from_string(family), n, lo, hi, ineqs);
  const std::string manifest_ref = out + ".manifest.json";
  lspec::write_text_file(out, lspec::sweep_to_csv(rows, manifest_ref));
  nlohmann::json cfg{{"family", family}, {"n", n}, {"sizes", sizes}};
  write_manifest("sweep", cfg.dump(), {}, {}, {out});
  std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet Laplace eigenvalue toolkit for integer lattices"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a region file");
  std::string shape;
  int gen_n = 0;
  std::string dims;
  int radius = -1;
  std::string metric = "l1";
  int gen_size = 0;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out = "region.json";
  gen->add_option("--shape", shape, "box|ball|random")->required();
  gen->add_option("--n", gen_n, "ambient dimension");
  gen->add_option("--dims", dims, "box side lengths, comma separated");
  gen->add_option("--radius", radius, "ball radius");
  gen->add_option("--metric", metric, "l1|linf ball metric");
  gen->add_option("--size", gen_size, "random region vertex count");
  gen->add_option("--seed", gen_seed, "PRNG seed (required for random)");
  gen->add_option("--out", gen_out, "output region JSON path");

  // verify
  auto* verify = app.add_subcommand("verify", "run the full inequality report");
  std::string region_path;
  std::string verify_out;
  std::string verify_json;
  bool proof_internals = false;
  verify->add_option("--region", region_path, "region JSON file")->required();
  verify->add_option("--out", verify_out, "report CSV path");
  verify->add_option("--json", verify_json, "report JSON mirror path");
  verify->add_flag("--proof-internals", proof_internals,
                   "also verify the trial-function identities");

  // search
  auto* search = app.add_subcommand("search", "anneal toward minimal slack");
  lspec::SearchConfig config;
  std::string search_out = "trace.csv";
  std::string best_out;
  std::optional<std::uint64_t> search_seed;
  search->add_option("--ineq", config.inequality_id, "inequality id")->required();
  search->add_option("--k", config.k, "eigenvalue index")->required();
  search->add_option("--n", config.n, "ambient dimension")->required();
  search->add_option("--size", config.region_size, "region size")->required();
  search->add_option("--steps", config.steps, "annealing steps");
  search->add_option("--seed", search_seed, "PRNG seed")->required();
  search->add_option("--t0", config.t0, "initial temperature");
  search->add_option("--decay", config.decay, "temperature decay per step");
  search->add_option("--out", search_out, "trace CSV path");
  search->add_option("--best-out", best_out, "best region JSON path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "report over a region family");
  std::string family;
  int sweep_n = 1;
  std::string sizes;
  std::vector<std::string> ineqs;
  std::string sweep_out = "sweep.csv";
  sweep->add_option("--family", family, "boxes|l1balls|paths")->required();
  sweep->add_option("--n", sweep_n, "ambient dimension")->required();
  sweep->add_option("--sizes", sizes, "inclusive range, e.g. 2..6")->required();
  sweep->add_option("--ineq", ineqs, "restrict to these inequality ids");
  sweep->add_option("--out", sweep_out, "table CSV path");

  try {
    app.parse(argc, argv);
    if (*gen) return cmd_gen(shape, gen_n, dims, radius, metric, gen_size,
                             gen_seed, gen_out);
    if (*verify)
      return cmd_verify(region_path, verify_out, verify_json, proof_internals);
    if (*search) {
      config.seed = *search_seed;
      return cmd_search(config, search_out, best_out);
    }
    if (*sweep) return cmd_sweep(family, sweep_n, sizes, ineqs, sweep_out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
