// Command-line front end: single runs, figure presets, sweeps, plot data and
// config validation.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "wanderer/wanderer.hpp"

namespace {

using namespace wanderer;

int fail(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return static_cast<int>(e.code());
}

wanderer::RunConfig load_config(const std::string& path, std::optional<std::uint64_t> seed) {
  auto config = parse_config(read_file(path));
  if (seed) config.seed = *seed;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-subsystem exploration model simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, spec_path, trace_path, out_dir, preset_name;
  std::optional<std::uint64_t> seed;
  bool scripted = false;

  auto* run_cmd = app.add_subcommand("run", "Run one configuration and write its trace CSV");
  run_cmd->add_option("--config", config_path, "Run configuration file")->required();
  run_cmd->add_option("--seed", seed, "Override the seed from the file");
  run_cmd->add_option("--out", out_path, "Trace CSV destination")->required();

  auto* preset_cmd = app.add_subcommand("preset", "Run a figure preset (fig2..fig6)");
  preset_cmd->add_option("name", preset_name, "Preset name")
      ->required();
  preset_cmd->add_option("--seed", seed, "Seed (default 0)");
  preset_cmd->add_flag("--scripted", scripted, "Use the scripted event schedule");
  preset_cmd->add_option("--out", out_path, "Trace CSV destination")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep_cmd->add_option("--spec", spec_path, "Sweep specification file")->required();
  sweep_cmd->add_option("--out", out_path, "Summary CSV destination")->required();

  auto* plot_cmd = app.add_subcommand("plotdata", "Extract plot-ready series from a trace CSV");
  plot_cmd->add_option("--trace", trace_path, "Trace CSV")->required();
  plot_cmd->add_option("--out-dir", out_dir, "Output directory")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check a run configuration");
  validate_cmd->add_option("--config", config_path, "Run configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run_cmd) {
      write_trace(run(load_config(config_path, seed)), out_path);
    } else if (*preset_cmd) {
      const auto preset = make_preset(preset_name, scripted, seed.value_or(0));
      if (!preset) throw ConfigError("unknown preset '" + preset_name + "'");
      const auto trace = run(preset->config);
      write_trace(trace, out_path);
      std::cout << render_summary(*preset, trace);
    } else if (*sweep_cmd) {
      const auto spec = parse_sweep_spec(read_file(spec_path));
      write_file_atomic(out_path, sweep_to_csv(spec, sweep(spec)));
    } else if (*plot_cmd) {
      write_plotdata(parse_trace_csv(read_file(trace_path)), out_dir);
    } else if (*validate_cmd) {
      const auto config = load_config(config_path, std::nullopt);
      std::cout << render_config(config);
    }
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
