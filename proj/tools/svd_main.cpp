// Command-line runner for the set-valued dynamics toolkit. Every task reads a
// JSON config, writes one CSV, and prints a one-line summary. Exit codes:
// 0 completed, 1 invariant/certificate/audit violation, 2 config error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "svd/experiment.hpp"

namespace {

const char* const kTasks[] = {"entropy",   "entropy-se",       "dn-matrix",
                              "cw-check",  "horizon",          "split",
                              "separated-family", "spec-check", "orbit-spec",
                              "mixing",    "audit"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"svd - finite-resolution toolkit for set-valued dynamics"};
  app.require_subcommand(1);

  std::string config_path, out_path, preset;
  bool force_exact = false;
  std::size_t cap_override = 0;

  for (const char* task : kTasks) {
    auto* sub = app.add_subcommand(task, std::string("run the ") + task + " task");
    sub->add_option("--config", config_path, "experiment config (JSON)")->required();
    sub->add_option("--out", out_path, "CSV output path");
    sub->add_flag("--exact", force_exact, "force exact packing/cover modes");
    sub->add_option("--cap", cap_override, "enumeration cap");
  }
  auto* rep = app.add_subcommand("reproduce", "run a named reproduction preset");
  rep->add_option("preset", preset, "preset name")->required();
  rep->add_option("--out", out_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rep->parsed()) return svd::reproduce(preset, out_path);

    svd::ExperimentConfig config = svd::load_config(config_path);
    std::string task = app.get_subcommands().front()->get_name();
    if (config.task.empty()) config.task = task;
    if (config.task != task)
      throw svd::ConfigError("config task '" + config.task +
                             "' does not match subcommand '" + task + "'");
    if (force_exact) config.mode = "exact";
    if (cap_override > 0) config.cap = cap_override;
    if (!out_path.empty()) config.out = out_path;
    return svd::run_experiment(config);
  } catch (const svd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const svd::CertificateError& e) {
    std::cerr << "certificate violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
