#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include "czkit/admissibility.hpp"
#include "czkit/experiments.hpp"
#include "czkit/identities.hpp"
#include "czkit/kernel.hpp"

namespace {

int run_check(const std::string& file, int depth) {
  const auto K = czkit::load_kernel(file);
  const auto report = czkit::check_condition_iv(K, depth);
  czkit::print_report(std::cout, report);
  return report.verdict == czkit::Verdict::Pass ? 0 : 1;
}

int run_identities(int n_max, int N_max) {
  czkit::IdentitySuiteConfig cfg;
  cfg.n_max = n_max;
  cfg.N_max = N_max;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = czkit::run_identity_suite(cfg);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.ok) ++failed;
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << " " << r.params << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << results.size() << " checks, " << failed << " failed, " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}

int run_experiments(const std::string& name, const std::string& out, const czkit::ExperimentConfig& cfg) {
  std::vector<std::string> names;
  if (name == "all") names = czkit::experiment_names();
  else names.push_back(name);
  bool ok = true;
  for (const auto& n : names) {
    const auto r = czkit::run_experiment(n, cfg);
    r.print_summary(std::cout);
    const auto path = r.write_csv(std::filesystem::path(out));
    std::cout << "  wrote " << path.string() << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical tools for maximal singular integrals"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Decide the admissibility condition for an odd kernel file");
  std::string kernel_file;
  int depth = 14;
  check->add_option("file", kernel_file, "Kernel file ('dim n' header, then polynomial terms)")->required()->check(CLI::ExistingFile);
  check->add_option("--depth", depth, "Maximum refinement depth of the sphere search")->check(CLI::Range(0, 30));

  auto* ids = app.add_subcommand("identities", "Run the exact identity suite");
  int n_max = 5, N_max = 6;
  ids->add_option("--n-max", n_max, "Largest dimension n")->check(CLI::Range(2, 12));
  ids->add_option("--N-max", N_max, "Largest order N")->check(CLI::Range(1, 12));

  auto* exp = app.add_subcommand("exp", "Run a numerical experiment and write its CSV");
  std::string exp_name, out_dir = "results";
  czkit::ExperimentConfig cfg;
  std::vector<std::string> choices = czkit::experiment_names();
  choices.push_back("all");
  exp->add_option("name", exp_name, "Experiment name or 'all'")->required()->check(CLI::IsMember(choices));
  exp->add_option("--out", out_dir, "Output directory");
  exp->add_option("--mesh", cfg.mesh, "Mesh scale relative to the pinned default (0.5 halves every mesh)")
      ->check(CLI::PositiveNumber);
  exp->add_option("--window", cfg.window, "Window scale relative to the pinned default")->check(CLI::PositiveNumber);
  exp->add_option("--seed", cfg.seed, "Seed for random test fields");

  app.add_subcommand("version", "Print the version");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*check) return run_check(kernel_file, depth);
    if (*ids) return run_identities(n_max, N_max);
    if (*exp) return run_experiments(exp_name, out_dir, cfg);
    std::cout << "czkit " << CZKIT_VERSION << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
