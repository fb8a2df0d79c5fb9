#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "incmap/driver.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Uniformly stressed inclusion contours for multiply connected domains"};

  std::string config_path;
  std::string out_dir = ".";
  std::optional<int> max_level, quadrature_n, samples;
  bool svg = false, oracle = false, dump = false;

  app.add_option("--config", config_path, "JSON problem description")->required();
  app.add_option("--out-dir", out_dir, "output directory (created if missing)");
  app.add_option("--max-level", max_level, "override truncation level");
  app.add_option("--quadrature-n", quadrature_n, "override quadrature parameter N");
  app.add_option("--samples", samples, "override samples per output contour");
  app.add_flag("--svg", svg, "also write a preview SVG");
  app.add_flag("--oracle", oracle, "compare against the analytic single-inclusion solution");
  app.add_flag("--dump-config", dump, "print the effective config and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    incmap::RunConfig config = incmap::load_config(config_path);
    if (max_level) config.numerics.max_level = *max_level;
    if (quadrature_n) config.numerics.quadrature_n = *quadrature_n;
    if (samples) config.numerics.samples_per_contour = *samples;

    if (dump) {
      std::cout << incmap::dump_config(config).dump(2) << "\n";
      return 0;
    }

    incmap::RunOptions options;
    options.oracle = oracle;
    incmap::RunResult result = incmap::run(config, options);

    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    if (result.exit_code == 1 && result.contours.empty()) return 1;

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    incmap::emit_contours(result.contours, dir / "contours.csv");
    incmap::emit_diagnostics(result.diagnostics, dir / "diagnostics.json");
    if (svg) incmap::emit_svg(result.contours, config.circles, dir / "preview.svg");

    if (result.exit_code == 2)
      std::cerr << "warning: computed inclusions overlap; contours written anyway\n";
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
