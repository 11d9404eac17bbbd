#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ssg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"soliton lattice generator and verifier for the supersymmetric "
               "sinh-Gordon equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string suite = "all";
  std::string report_path;
  double tol = 0.0;
  std::uint64_t seed = 0;
  bool serial = false;

  CLI::Option* tol_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "run configuration (JSON)")
        ->required();
    tol_opt = sub->add_option("--tol", tol,
                              "override every check tolerance (must be > 0)");
    seed_opt = sub->add_option("--seed", seed, "override the sampling seed");
    sub->add_flag("--serial", serial, "disable parallel evaluation");
  };

  CLI::App* gen = app.add_subcommand(
      "gen", "evaluate the soliton field over the configured grid (CSV)");
  add_common(gen);
  gen->add_option("--out", out_path, "output file ('-' or empty = stdout)");

  CLI::App* lattice = app.add_subcommand(
      "lattice", "like gen, but requires at least three solitons");
  add_common(lattice);
  lattice->add_option("--out", out_path, "output file ('-' or empty = stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run residual check suites against the configuration");
  add_common(verify);
  verify->add_option(
      "--suite", suite, "eom, bt, perm, identities, lattice, or all");
  verify->add_option("--report", report_path, "also write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    ssg::RunConfig cfg = ssg::load_config(config_path);
    if (tol_opt->count() > 0) {
      if (!(tol > 0.0)) throw ssg::ConfigError("--tol must be positive");
      cfg.tolerance = tol;
    }
    if (seed_opt->count() > 0) cfg.seed = seed;
    const ssg::ExecPolicy policy =
        serial ? ssg::ExecPolicy::Serial : ssg::ExecPolicy::Parallel;

    if (gen->parsed()) return ssg::cmd_generate(cfg, out_path, 0, policy);
    if (lattice->parsed()) return ssg::cmd_generate(cfg, out_path, 3, policy);
    return ssg::cmd_verify(cfg, suite, report_path, std::cout, policy);
  } catch (const ssg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
