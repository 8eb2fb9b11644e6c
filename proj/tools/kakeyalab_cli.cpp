#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "kakeyalab/cli/config.hpp"
#include "kakeyalab/cli/experiment.hpp"
#include "kakeyalab/error.hpp"

namespace {

int guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const kl::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", kl::to_string(e.kind()), e.what());
    return kl::cli::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

std::string key_help() {
  std::string s = "config keys (key=value, one per line, # comments):\n";
  for (const auto& k : kl::cli::config_keys()) {
    s += "  " + k.key + (k.default_value.empty() ? " (required)" : " [" + k.default_value + "]") + ": " +
         k.description + "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kakeya-type tube experiments"};
  app.footer(key_help());
  app.require_subcommand(1);

  std::string config_path, run_id, out_dir = "out";
  auto* run = app.add_subcommand("run", "run an experiment and write its CSV");
  run->add_option("config", config_path, "config file")->required();
  auto* validate = app.add_subcommand("validate", "check a config file");
  validate->add_option("config", config_path, "config file")->required();
  auto* export_grid = app.add_subcommand("export-grid", "write the grid of a recorded run");
  export_grid->add_option("run-id", run_id, "run id printed by `run`")->required();
  export_grid->add_option("--out", out_dir, "output directory of the run");
  auto* fixtures = app.add_subcommand("fixtures", "builtin fixtures");
  auto* list = fixtures->add_subcommand("list", "list builtin fixtures");
  fixtures->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (run->parsed())
    return guarded([&] {
      const auto cfg = kl::cli::load_config(config_path);
      const auto out = kl::cli::run_and_write(cfg);
      std::printf("%s %s (%zu rows)\n", out.run_id.c_str(), out.csv_path.c_str(), out.rows);
    });
  if (validate->parsed())
    return guarded([&] {
      const auto cfg = kl::cli::load_config(config_path);
      std::printf("ok %s\n%s", cfg.run_id().c_str(), cfg.normalized().c_str());
    });
  if (export_grid->parsed())
    return guarded([&] {
      for (const auto& p : kl::cli::export_grid(run_id, out_dir)) std::printf("%s\n", p.c_str());
    });
  if (list->parsed()) {
    for (const auto& f : kl::cli::fixtures())
      std::printf("%-10s %-20s %s\n", f.group.c_str(), f.name.c_str(), f.description.c_str());
    return 0;
  }
  return 0;
}
