#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "app/commands.hpp"
#include "app/config.hpp"

int main(int argc, char** argv) {
  using namespace nlwlab::app;
  CLI::App cli{"Numerical lab for the radial semilinear wave equation"};
  cli.require_subcommand(1, 1);
  std::string config_path;
  std::string out_dir = "out";
  unsigned threads = 1;
  for (const auto& name : scenarios()) {
    auto* sub = cli.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
    sub->add_option("--threads", threads, "worker threads for independent runs")
        ->check(CLI::Range(1u, std::max(1u, 4 * std::thread::hardware_concurrency())));
  }
  CLI11_PARSE(cli, argc, argv);
  const std::string scenario = cli.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    const auto cfg = load_config(config_path, scenario);
    const auto result = run_scenario(cfg, out_dir, threads);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << make_manifest(cfg, result, wall).dump(2) << '\n';

    for (const auto& c : result.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.value << ' ' << c.relation << ' ' << c.limit << '\n';
    }
    if (result.error) {
      std::cerr << "error in " << result.error->module << ": " << result.error->message << '\n';
      return 3;
    }
    return result.passed() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error at " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
