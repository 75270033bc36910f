#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace sqcat::cli;

  CLI::App app{"Squeezed-cat state preparation: verification, evolution, Wigner grids and sweeps"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommandOptions opts;
  std::string config_path;
  std::string preset;
  std::string outcome;
  double time = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON scenario config")->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--preset", preset, "parameter preset")->check(CLI::IsMember({"default", "deep-squeeze"}));
  };
  CLI::App* verify = app.add_subcommand("verify", "run the identity suite and write verify_report.json");
  CLI::App* evolve = app.add_subcommand("evolve", "evolve the scenario and write timeseries.csv");
  CLI::App* wig = app.add_subcommand("wigner", "write the Wigner grid of the collapsed field to wigner.csv");
  CLI::App* sweep = app.add_subcommand("sweep", "sweep beta or hbar_omega and write sweep.csv");
  for (CLI::App* sub : {verify, evolve, wig, sweep}) add_common(sub);
  wig->add_option("--time", time, "evaluation time (overrides the config)");
  wig->add_option("--outcome", outcome, "measured qubit outcome")->check(CLI::IsMember({"g", "e"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  if (!config_path.empty()) opts.config_path = config_path;
  if (!preset.empty()) opts.preset = parse_preset(preset);
  if (wig->count("--time") > 0) opts.time = time;
  if (!outcome.empty()) opts.outcome = outcome == "g" ? sqcat::Qubit::g : sqcat::Qubit::e;

  const std::string name = app.get_subcommands().front()->get_name();
  return run_command(name, opts, std::cout, std::cerr);
}
