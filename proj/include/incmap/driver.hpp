#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "incmap/mapping.hpp"

namespace incmap {

/// Everything a run needs, mirroring the config-file schema.
struct RunConfig {
  std::vector<Circle> circles;
  LoadingParameters loading;
  MapGauge gauge;
  Numerics numerics;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json dump_config(const RunConfig& config);

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 error, 2 overlap
  std::string error;  // set when exit_code == 1
  std::vector<InclusionContour> contours;
  nlohmann::json diagnostics;
};

struct RunOptions {
  bool oracle = false;  // n = 1 only: report deviation from the analytic ellipse
};

RunResult run(const RunConfig& config, const RunOptions& options = {});

void emit_contours(const std::vector<InclusionContour>& contours,
                   const std::filesystem::path& path);
void emit_diagnostics(const nlohmann::json& diagnostics, const std::filesystem::path& path);
void emit_svg(const std::vector<InclusionContour>& contours, const std::vector<Circle>& circles,
              const std::filesystem::path& path);

}  // namespace incmap
