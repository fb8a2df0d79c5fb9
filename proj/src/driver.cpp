#include "incmap/driver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "incmap/simd_kernels.hpp"

namespace incmap {

using nlohmann::json;

namespace {

cplx parse_cplx(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw invalid_parameters_error(std::string(what) + " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

GaugeMode parse_gauge_mode(const std::string& s) {
  if (s == "explicit") return GaugeMode::explicit_values;
  if (s == "zero") return GaugeMode::zero;
  if (s == "antisymmetric") return GaugeMode::antisymmetric;
  throw invalid_parameters_error("gauge_mode must be one of explicit, zero, antisymmetric");
}

std::string gauge_mode_name(GaugeMode m) {
  switch (m) {
    case GaugeMode::explicit_values:
      return "explicit";
    case GaugeMode::zero:
      return "zero";
    case GaugeMode::antisymmetric:
      return "antisymmetric";
  }
  return "zero";
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig cfg;
  if (!j.contains("circles") || !j["circles"].is_array() || j["circles"].empty())
    throw invalid_parameters_error("config needs a nonempty 'circles' array");
  for (const auto& c : j["circles"])
    cfg.circles.emplace_back(parse_cplx(c.at("center"), "circle center"),
                             c.at("radius").get<double>());

  const auto& load = j.at("loading");
  cfg.loading.tau = parse_cplx(load.at("tau"), "tau");
  cfg.loading.tau_inf = parse_cplx(load.at("tau_inf"), "tau_inf");
  cfg.loading.kappa = load.at("kappa").get<std::vector<double>>();

  if (j.contains("gauge")) {
    const auto& g = j["gauge"];
    if (g.contains("c_minus1")) cfg.gauge.c_minus1 = parse_cplx(g["c_minus1"], "c_minus1");
    cfg.gauge.a0 = g.value("a0", 0.0);
    cfg.gauge.d0_tilde = g.value("d0_tilde", 0.0);
    cfg.gauge.mode = parse_gauge_mode(g.value("gauge_mode", std::string("zero")));
    if (g.contains("zeta_star") && !g["zeta_star"].is_null())
      cfg.gauge.zeta_star = parse_cplx(g["zeta_star"], "zeta_star");
  }
  if (j.contains("numerics")) {
    const auto& n = j["numerics"];
    cfg.numerics.max_level = n.value("max_level", 4);
    cfg.numerics.quadrature_n = n.value("quadrature_n", 64);
    cfg.numerics.samples_per_contour = n.value("samples_per_contour", 257);
    cfg.numerics.hard_residual_ceiling = n.value("hard_residual_ceiling", 1e-4);
    cfg.numerics.convergence_threshold = n.value("convergence_threshold", 0.75);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid_parameters_error("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw invalid_parameters_error("config parse error in " + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

json dump_config(const RunConfig& cfg) {
  json circles = json::array();
  for (const Circle& c : cfg.circles)
    circles.push_back({{"center", cplx_to_json(c.center)}, {"radius", c.radius}});
  json gauge = {{"c_minus1", cplx_to_json(cfg.gauge.c_minus1)},
                {"a0", cfg.gauge.a0},
                {"d0_tilde", cfg.gauge.d0_tilde},
                {"gauge_mode", gauge_mode_name(cfg.gauge.mode)}};
  if (cfg.gauge.zeta_star)
    gauge["zeta_star"] = cplx_to_json(*cfg.gauge.zeta_star);
  else
    gauge["zeta_star"] = nullptr;
  return {{"circles", circles},
          {"loading",
           {{"tau", cplx_to_json(cfg.loading.tau)},
            {"tau_inf", cplx_to_json(cfg.loading.tau_inf)},
            {"kappa", cfg.loading.kappa}}},
          {"gauge", gauge},
          {"numerics",
           {{"max_level", cfg.numerics.max_level},
            {"quadrature_n", cfg.numerics.quadrature_n},
            {"samples_per_contour", cfg.numerics.samples_per_contour},
            {"hard_residual_ceiling", cfg.numerics.hard_residual_ceiling},
            {"convergence_threshold", cfg.numerics.convergence_threshold}}}};
}

RunResult run(const RunConfig& config, const RunOptions& options) {
  RunResult result;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CircularDomain domain = validate_domain(config.circles);
    ProblemSetup setup(std::move(domain), config.loading, config.gauge, config.numerics);
    Solver solver(setup);
    result.contours = sample_contours(solver, config.numerics.samples_per_contour);
    const ResidualReport res = residual_report(solver, result.contours);
    const ConvergenceReport conv =
        convergence_report(setup.group(), config.numerics.convergence_threshold);

    json diag;
    diag["constants"] = {{"a", solver.constants().a}, {"d_tilde", solver.constants().d_tilde}};
    diag["residuals"] = {{"imF", res.im_F},
                         {"physical_bc", res.physical_bc},
                         {"symmetry", res.symmetry},
                         {"automorphicity", res.automorphicity}};
    diag["residue_identity_defects"] = res.residue_defects;
    diag["convergence"] = {{"level_sums", conv.level_sums},
                           {"ratio", conv.ratio},
                           {"verdict", to_string(conv.verdict)}};
    json pairs = json::array();
    for (auto [i, j] : res.overlap_pairs) pairs.push_back(json::array({i, j}));
    diag["overlap"] = {{"flag", res.overlap}, {"pairs", pairs}};
    diag["self_intersecting"] = res.self_intersecting;
    diag["zeta_star"] = cplx_to_json(setup.kernel().base_point());
    diag["simd_backend"] = simd::active_backend();
    if (!setup.domain().normalization_notice().empty())
      diag["notice"] = setup.domain().normalization_notice();

    if (options.oracle) {
      if (setup.n() != 1)
        throw invalid_parameters_error("--oracle applies to single-circle configurations only");
      if (std::abs(setup.domain().circle(0).center) > 1e-12 ||
          std::abs(setup.domain().circle(0).radius - 1.0) > 1e-12)
        throw invalid_parameters_error("--oracle needs the unit circle at the origin");
      const EllipseOracle oracle =
          make_ellipse_oracle(config.loading.kappa[0], config.loading.tau, config.loading.tau_inf,
                              config.gauge.c_minus1);
      const auto& samples = result.contours[0].samples;
      cplx mean_num{}, mean_or{};
      std::vector<cplx> oracle_pts(samples.size());
      for (std::size_t m = 0; m < samples.size(); ++m) {
        oracle_pts[m] = ellipse_point(oracle, samples[m].theta);
        mean_num += samples[m].z;
        mean_or += oracle_pts[m];
      }
      mean_num /= static_cast<double>(samples.size());
      mean_or /= static_cast<double>(samples.size());
      double dev = 0.0;
      for (std::size_t m = 0; m < samples.size(); ++m)
        dev = std::max(dev,
                       std::abs((samples[m].z - mean_num) - (oracle_pts[m] - mean_or)));
      diag["oracle_deviation"] = dev;
      diag["oracle_delta"] = cplx_to_json(oracle.delta);
      diag["oracle_degenerate"] = oracle.degenerate;
    }

    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    diag["runtime_seconds"] = runtime;
    result.diagnostics = std::move(diag);

    const double worst = std::max(res.im_F, res.physical_bc);
    if (worst > config.numerics.hard_residual_ceiling) {
      result.exit_code = 1;
      result.error = "boundary residual " + std::to_string(worst) +
                     " exceeds the hard ceiling " +
                     std::to_string(config.numerics.hard_residual_ceiling);
    } else if (res.overlap) {
      result.exit_code = 2;
    } else {
      result.exit_code = 0;
    }
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = e.what();
  }
  return result;
}

void emit_contours(const std::vector<InclusionContour>& contours,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw invalid_parameters_error("cannot write " + path.string());
  out << "inclusion_index,theta,x,y\n";
  for (const InclusionContour& c : contours)
    for (const ContourSample& s : c.samples)
      out << c.index << ',' << fmt17(s.theta) << ',' << fmt17(s.z.real()) << ','
          << fmt17(s.z.imag()) << '\n';
  if (!out) throw invalid_parameters_error("write failed for " + path.string());
}

void emit_diagnostics(const json& diagnostics, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw invalid_parameters_error("cannot write " + path.string());
  out << diagnostics.dump(2) << '\n';
}

void emit_svg(const std::vector<InclusionContour>& contours, const std::vector<Circle>& circles,
              const std::filesystem::path& path) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& c : contours)
    for (const auto& s : c.samples) grow(s.z.real(), s.z.imag());
  for (const Circle& c : circles) {
    grow(c.center.real() - c.radius, c.center.imag() - c.radius);
    grow(c.center.real() + c.radius, c.center.imag() + c.radius);
  }
  if (xmin > xmax) {
    xmin = ymin = -1;
    xmax = ymax = 1;
  }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double scale = 800.0 / std::max(xmax - xmin, ymax - ymin);
  auto px = [&](double x) { return (x - xmin) * scale; };
  auto py = [&](double y) { return (ymax - y) * scale; };

  std::ofstream out(path);
  if (!out) throw invalid_parameters_error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax - xmin) * scale
      << "\" height=\"" << (ymax - ymin) * scale << "\">\n";
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  for (const Circle& c : circles)
    out << "  <circle cx=\"" << px(c.center.real()) << "\" cy=\"" << py(c.center.imag())
        << "\" r=\"" << c.radius * scale
        << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n";
  for (std::size_t i = 0; i < contours.size(); ++i) {
    out << "  <path d=\"";
    const auto& samples = contours[i].samples;
    for (std::size_t m = 0; m < samples.size(); ++m)
      out << (m == 0 ? 'M' : 'L') << px(samples[m].z.real()) << ' ' << py(samples[m].z.imag());
    out << "Z\" fill=\"none\" stroke=\"" << colors[i % 5] << "\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace incmap
