// Command-line front end: dataset generation, radius estimation, tracing,
// fiber projection, the full pipeline, and the loop-defect diagnostic.
// Every command echoes its configuration as JSON into the output directory
// so a result can always be traced back to the exact invocation.
//
// Exit codes: 0 success, 1 usage error, 2 unreadable or invalid input data,
// 3 numerical failure (lost support, degenerate directions, no crossings).

#include "papa/datasets.hpp"
#include "papa/errors.hpp"
#include "papa/io.hpp"
#include "papa/neighbors.hpp"
#include "papa/pipeline.hpp"
#include "papa/projection.hpp"
#include "papa/rng.hpp"
#include "papa/tracer.hpp"
#include "papa/types.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace papa;

namespace {

// ---------------------------------------------------------------------------
// Input handling

struct InputFlags {
  std::string path;
  std::string delimiter = ",";
  bool has_header = false;
  int label_column = -1;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--in", in.path, "Delimited numeric table to analyze")
      ->required();
  cmd->add_option("--delimiter", in.delimiter, "Field separator (one character)")
      ->default_val(",");
  cmd->add_flag("--header", in.has_header, "Skip the first line of the input");
  cmd->add_option("--label-column", in.label_column,
                  "0-based column holding row labels, not coordinates");
}

/// Loads the input table; any problem with the file or its contents is an
/// input-data failure, distinct from a usage error.
PointCloud load_input(const InputFlags& in) {
  if (in.delimiter.size() != 1) {
    throw ValidationError("--delimiter must be a single character");
  }
  std::optional<int> label;
  if (in.label_column >= 0) label = in.label_column;
  try {
    return load_delimited(in.path, in.delimiter[0], in.has_header, label);
  } catch (const ValidationError& e) {
    throw IoError(in.path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Small shared helpers

Vector parse_vector(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ValidationError(flag + ": cannot parse '" + piece + "' as a number");
    }
    values.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

void write_config_echo(const fs::path& directory, const json& echo) {
  std::ofstream out(directory / "config.json");
  if (!out) {
    throw IoError("cannot write " + (directory / "config.json").string());
  }
  out << echo.dump(2) << "\n";
  out.flush();
  if (!out) {
    throw IoError("failed while writing " + (directory / "config.json").string());
  }
}

fs::path ensure_directory(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create " + dir.string() + ": " + ec.message());
  }
  return dir;
}

DistanceHistogram bin_values(const std::vector<double>& values, int bins) {
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  double width = (*hi_it - lo) / bins;
  if (width <= 0.0) width = 1.0;  // all values identical
  DistanceHistogram hist;
  hist.origin_index = -1;
  hist.bin_edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) hist.bin_edges[k] = lo + k * width;
  hist.counts.assign(bins, 0);
  for (double v : values) {
    const int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
    ++hist.counts[b];
  }
  return hist;
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= x.size();
  mean_y /= y.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
  }
  return sxy / sxx;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateFlags {
  std::string dataset;
  int n = 0;
  double sigma = 0.0;
  double scale = 0.1;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateFlags& flags) {
  GeneratedDataset data = [&] {
    if (flags.dataset == "zigzag") return gen_zigzag(flags.n, flags.sigma, flags.seed);
    if (flags.dataset == "boomerang") return gen_boomerang(flags.n, flags.sigma, flags.seed);
    return gen_swiss_roll(flags.n, flags.sigma, flags.seed, flags.scale);
  }();

  const fs::path dir = ensure_directory(flags.out);
  write_cloud_csv(dir / "cloud.csv", data.cloud);
  std::vector<Vector> params;
  params.reserve(data.samples.size());
  for (const LabeledSample& s : data.samples) params.push_back(s.params);
  write_params_csv(dir / "params.csv", params);

  json echo;
  echo["command"] = "generate";
  echo["dataset"] = flags.dataset;
  echo["n"] = flags.n;
  echo["sigma"] = flags.sigma;
  if (flags.dataset == "swiss-roll") echo["scale"] = flags.scale;
  echo["seed"] = flags.seed;
  echo["out"] = flags.out;
  write_config_echo(dir, echo);
  std::cout << echo.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// radius

struct RadiusFlags {
  InputFlags in;
  double bin_width = 0.0;  // 0 means auto: max distance / 50
  std::uint64_t origin_seed = 0;
  std::string out;
};

int run_radius(const RadiusFlags& flags) {
  const PointCloud cloud = load_input(flags.in);
  if (cloud.size() < 2) {
    throw IoError(flags.in.path + ": need at least two points for a distance histogram");
  }
  SplitRng rng(flags.origin_seed);
  const int origin = rng.uniform_index(cloud.size());

  double bin_width = flags.bin_width;
  if (bin_width <= 0.0) {
    double max_distance = 0.0;
    const Vector center = cloud.point(origin);
    for (int i = 0; i < cloud.size(); ++i) {
      max_distance = std::max(max_distance, (cloud.point(i) - center).norm());
    }
    bin_width = max_distance / 50.0;
  }

  const DistanceHistogram hist = distance_histogram(cloud, origin, bin_width);
  const double estimate = estimate_radius(hist);

  const fs::path dir = ensure_directory(flags.out);
  write_histogram_csv(dir / "histogram.csv", hist);

  json echo;
  echo["command"] = "radius";
  echo["in"] = flags.in.path;
  echo["origin_seed"] = flags.origin_seed;
  echo["origin_index"] = origin;
  echo["bin_width"] = bin_width;
  echo["out"] = flags.out;
  write_config_echo(dir, echo);

  std::cout << "estimated_radius " << format_double(estimate) << "\n";
  return 0;
}

// Auto-estimate used by trace and project when no radius is given: histogram
// from a seeded origin, binned at a fiftieth of that origin's distance range.
double auto_radius(const PointCloud& cloud, std::uint64_t origin_seed) {
  if (cloud.size() < 2) {
    throw IoError("need at least two points to estimate a radius");
  }
  SplitRng rng(origin_seed);
  const int origin = rng.uniform_index(cloud.size());
  double max_distance = 0.0;
  const Vector center = cloud.point(origin);
  for (int i = 0; i < cloud.size(); ++i) {
    max_distance = std::max(max_distance, (cloud.point(i) - center).norm());
  }
  return estimate_radius(distance_histogram(cloud, origin, max_distance / 50.0));
}

// ---------------------------------------------------------------------------
// trace

struct TraceFlags {
  InputFlags in;
  int seeds = 50;
  std::vector<int> seed_indices;
  double h = 0.01;
  int steps = 200;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_trace(const TraceFlags& flags) {
  if (flags.radius < 0.0) {
    throw ValidationError("--radius must be positive");
  }
  TraceConfig config;
  config.step = flags.h;
  config.max_steps_each_way = flags.steps;
  // Flag errors should surface before any file is read, so when no radius
  // was given the config is checked with a stand-in value.
  config.spec.radius = flags.radius > 0.0 ? flags.radius : 1.0;
  config.validate();

  const PointCloud cloud = load_input(flags.in);
  if (flags.radius == 0.0) {
    config.spec.radius = auto_radius(cloud, flags.seed);
    std::cout << "estimated_radius " << format_double(config.spec.radius) << "\n";
  }

  std::vector<int> chosen = flags.seed_indices;
  if (chosen.empty()) {
    if (flags.seeds < 1 || flags.seeds > cloud.size()) {
      throw ValidationError("--seeds must be between 1 and the point count");
    }
    SplitRng rng(flags.seed);
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < flags.seeds) {
      picks.insert(rng.uniform_index(cloud.size()));
    }
    chosen.assign(picks.begin(), picks.end());
  }
  for (int i : chosen) {
    if (i < 0 || i >= cloud.size()) {
      throw ValidationError("seed index " + std::to_string(i) + " out of range");
    }
  }

  const SpatialIndex index(cloud);
  std::vector<AutoparallelTrace> traces;
  traces.reserve(chosen.size());
  for (int i : chosen) {
    traces.push_back(trace_autoparallel(index, cloud.point(i), config, i));
  }

  const fs::path dir = ensure_directory(flags.out);
  write_traces_csv(dir / "traces.csv", traces);

  json echo;
  echo["command"] = "trace";
  echo["in"] = flags.in.path;
  echo["seed_indices"] = chosen;
  echo["step"] = flags.h;
  echo["steps"] = flags.steps;
  echo["radius"] = config.spec.radius;
  echo["seed"] = flags.seed;
  echo["out"] = flags.out;
  write_config_echo(dir, echo);

  for (std::size_t t = 0; t < traces.size(); ++t) {
    const AutoparallelTrace& trace = traces[t];
    std::cout << "trace " << t << " seed_index " << trace.seed_index
              << " states " << trace.states.size() << " forward "
              << to_string(trace.forward_termination) << " backward "
              << to_string(trace.backward_termination) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// project

struct ProjectFlags {
  InputFlags in;
  std::string anchor;
  std::string normal;
  bool plane_45z = false;
  double offset = 0.0;
  double h = 0.01;
  int steps = 200;
  double radius = 0.0;
  int bins = 50;
  std::string out;
};

BaseSpace make_plane(const ProjectFlags& flags, int dimension) {
  if (flags.plane_45z) {
    if (dimension != 3) {
      throw ValidationError("--plane-45z requires 3-dimensional data");
    }
    const double inv = 1.0 / std::sqrt(2.0);
    Vector normal(3);
    normal << inv, 0.0, inv;
    return BaseSpace(flags.offset * normal, normal);
  }
  if (flags.anchor.empty() || flags.normal.empty()) {
    throw ValidationError("provide either --plane-45z or both --anchor and --normal");
  }
  const Vector anchor = parse_vector(flags.anchor, "--anchor");
  const Vector normal = parse_vector(flags.normal, "--normal");
  if (anchor.size() != dimension || normal.size() != dimension) {
    throw ValidationError("--anchor and --normal must match the data dimension");
  }
  return BaseSpace(anchor, normal);
}

int run_project(const ProjectFlags& flags) {
  if (flags.radius < 0.0) {
    throw ValidationError("--radius must be positive");
  }
  TraceConfig config;
  config.step = flags.h;
  config.max_steps_each_way = flags.steps;
  // Same stand-in rule as the trace subcommand: flag errors come first.
  config.spec.radius = flags.radius > 0.0 ? flags.radius : 1.0;
  config.validate();
  if (flags.bins < 1) {
    throw ValidationError("--bins must be positive");
  }

  const PointCloud cloud = load_input(flags.in);
  if (flags.radius == 0.0) {
    config.spec.radius = auto_radius(cloud, 0);
    std::cout << "estimated_radius " << format_double(config.spec.radius) << "\n";
  }
  const BaseSpace plane = make_plane(flags, cloud.dimension());
  const SpatialIndex index(cloud);
  const ProjectionResult result = project_all(index, plane, config);

  const fs::path dir = ensure_directory(flags.out);
  write_projection_csv(dir / "projection.csv", result.projections);
  std::vector<double> distances;
  distances.reserve(result.projections.size());
  for (const FiberProjection& p : result.projections) {
    distances.push_back(p.signed_distance);
  }
  write_histogram_csv(dir / "histogram.csv", bin_values(distances, flags.bins));

  json echo;
  echo["command"] = "project";
  echo["in"] = flags.in.path;
  echo["anchor"] = std::vector<double>(plane.anchor().data(),
                                       plane.anchor().data() + plane.anchor().size());
  echo["normal"] = std::vector<double>(plane.normal().data(),
                                       plane.normal().data() + plane.normal().size());
  echo["step"] = flags.h;
  echo["steps"] = flags.steps;
  echo["radius"] = config.spec.radius;
  echo["bins"] = flags.bins;
  echo["out"] = flags.out;
  write_config_echo(dir, echo);

  std::cout << "projected " << result.projections.size() << "/" << cloud.size()
            << " points, " << result.failures.size() << " without a crossing\n";
  return 0;
}

// ---------------------------------------------------------------------------
// papa

struct PapaFlags {
  InputFlags in;
  std::string levels = "auto";
  double h = 0.01;
  int steps = 200;
  double radius = 0.0;  // 0 means auto-estimate per level
  int probes = 50;
  double isotropy_threshold = 1.5;
  bool no_isotropy_check = false;
  double bins = 50;
  std::uint64_t seed = 0;
  std::string out;
};

int run_papa_cmd(const PapaFlags& flags) {
  PapaConfig config;
  config.trace.step = flags.h;
  config.trace.max_steps_each_way = flags.steps;
  if (flags.radius > 0.0) config.radius = flags.radius;
  if (flags.levels != "auto") {
    int levels = 0;
    const auto [ptr, ec] = std::from_chars(
        flags.levels.data(), flags.levels.data() + flags.levels.size(), levels);
    if (ec != std::errc() || ptr != flags.levels.data() + flags.levels.size()) {
      throw ValidationError("--levels must be 'auto' or an integer");
    }
    config.levels = levels;
  }
  config.isotropy_probes = flags.probes;
  config.isotropy_threshold = flags.isotropy_threshold;
  config.check_isotropy = !flags.no_isotropy_check;
  config.histogram_bins = flags.bins;
  config.seed = flags.seed;

  const PointCloud cloud = load_input(flags.in);
  config.validate(cloud.dimension());

  const PapaModel model = run_papa(cloud, config);

  json echo;
  echo["command"] = "papa";
  echo["in"] = flags.in.path;
  echo["levels"] = flags.levels;
  echo["step"] = flags.h;
  echo["steps"] = flags.steps;
  if (config.radius) {
    echo["radius"] = *config.radius;
  } else {
    echo["radius"] = "auto";
  }
  echo["isotropy_probes"] = flags.probes;
  echo["isotropy_threshold"] = flags.isotropy_threshold;
  echo["check_isotropy"] = config.check_isotropy;
  echo["histogram_bins"] = flags.bins;
  echo["seed"] = flags.seed;
  echo["out"] = flags.out;
  save_model(flags.out, model, echo.dump(2));

  for (std::size_t l = 0; l < model.levels.size(); ++l) {
    std::cout << "level " << l << ": " << model.levels[l].point_indices.size()
              << " points, residual dimension "
              << model.levels[l].residual.dimension() << "\n";
  }
  std::cout << "stop_reason " << to_string(model.stop_reason) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// defect

struct DefectFlags {
  InputFlags in;
  int origin_index = 0;
  std::vector<double> epsilons;
  double radius = 0.0;
  double tie_threshold = 0.05;
};

int run_defect(const DefectFlags& flags) {
  NeighborhoodSpec spec;
  spec.radius = flags.radius;
  spec.validate();
  for (double epsilon : flags.epsilons) {
    if (!(epsilon > 0.0)) {
      throw ValidationError("--epsilon values must be positive");
    }
  }

  const PointCloud cloud = load_input(flags.in);
  if (flags.origin_index < 0 || flags.origin_index >= cloud.size()) {
    throw ValidationError("--origin-index out of range");
  }
  const SpatialIndex index(cloud);
  const Vector origin = cloud.point(flags.origin_index);

  std::vector<double> log_eps, log_norm;
  for (double epsilon : flags.epsilons) {
    const LoopDefect defect =
        loop_defect(index, origin, spec, epsilon, flags.tie_threshold);
    std::cout << "epsilon " << format_double(epsilon) << " defect_norm "
              << format_double(defect.norm) << "\n";
    if (defect.norm > 0.0) {
      log_eps.push_back(std::log(epsilon));
      log_norm.push_back(std::log(defect.norm));
    }
  }
  if (log_eps.size() >= 2) {
    std::cout << "log_log_slope " << format_double(fitted_slope(log_eps, log_norm))
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal autoparallel analysis for point-cloud manifolds"};
  app.require_subcommand(1);

  GenerateFlags generate;
  CLI::App* cmd_generate =
      app.add_subcommand("generate", "Write a synthetic dataset with ground-truth parameters");
  cmd_generate->add_option("dataset", generate.dataset, "zigzag, boomerang or swiss-roll")
      ->required()
      ->check(CLI::IsMember({"zigzag", "boomerang", "swiss-roll"}));
  cmd_generate->add_option("--n", generate.n, "Number of points")->required();
  cmd_generate->add_option("--sigma", generate.sigma, "Gaussian noise level")
      ->default_val(0.0);
  cmd_generate->add_option("--scale", generate.scale, "Swiss-roll scale factor")
      ->default_val(0.1);
  cmd_generate->add_option("--seed", generate.seed, "Random seed")->default_val(0);
  cmd_generate->add_option("--out", generate.out, "Output directory")->required();

  RadiusFlags radius;
  CLI::App* cmd_radius =
      app.add_subcommand("radius", "Estimate a neighborhood radius from a distance histogram");
  add_input_flags(cmd_radius, radius.in);
  cmd_radius->add_option("--bin-width", radius.bin_width,
                         "Histogram bin width (default: max distance / 50)");
  cmd_radius->add_option("--origin-seed", radius.origin_seed,
                         "Seed choosing the histogram origin point")
      ->default_val(0);
  cmd_radius->add_option("--out", radius.out, "Output directory")->required();

  TraceFlags trace;
  CLI::App* cmd_trace =
      app.add_subcommand("trace", "Integrate autoparallel curves from seed points");
  add_input_flags(cmd_trace, trace.in);
  CLI::Option* seeds_opt =
      cmd_trace->add_option("--seeds", trace.seeds, "How many random seed points")
          ->default_val(50);
  cmd_trace->add_option("--seed-indices", trace.seed_indices,
                        "Explicit seed point indices")
      ->delimiter(',')
      ->excludes(seeds_opt);
  cmd_trace->add_option("--step", trace.h, "Step length")->default_val(0.01);
  cmd_trace->add_option("--steps", trace.steps, "Max steps each way")->default_val(200);
  cmd_trace->add_option("--radius", trace.radius,
                        "Neighborhood radius (default: estimated from the distance histogram)");
  cmd_trace->add_option("--seed", trace.seed, "Random seed for picking seed points")
      ->default_val(0);
  cmd_trace->add_option("--out", trace.out, "Output directory")->required();

  ProjectFlags project;
  CLI::App* cmd_project =
      app.add_subcommand("project", "Project every point along its fiber onto a plane");
  add_input_flags(cmd_project, project.in);
  CLI::Option* anchor_opt =
      cmd_project->add_option("--anchor", project.anchor, "Plane anchor, comma-separated");
  CLI::Option* normal_opt =
      cmd_project->add_option("--normal", project.normal, "Plane normal, comma-separated");
  cmd_project->add_flag("--plane-45z", project.plane_45z,
                        "Plane at 45 degrees to the z axis")
      ->excludes(anchor_opt)
      ->excludes(normal_opt);
  cmd_project->add_option("--offset", project.offset,
                          "Signed offset of the 45-degree plane from the origin")
      ->default_val(0.0);
  cmd_project->add_option("--step", project.h, "Step length")->default_val(0.01);
  cmd_project->add_option("--steps", project.steps, "Max steps each way")->default_val(200);
  cmd_project->add_option("--radius", project.radius,
                          "Neighborhood radius (default: estimated from the distance histogram)");
  cmd_project->add_option("--bins", project.bins, "Signed-distance histogram bins")
      ->default_val(50);
  cmd_project->add_option("--out", project.out, "Output directory")->required();

  PapaFlags papa_flags;
  CLI::App* cmd_papa =
      app.add_subcommand("papa", "Run the full multi-level analysis");
  add_input_flags(cmd_papa, papa_flags.in);
  cmd_papa->add_option("--levels", papa_flags.levels, "'auto' or a level count")
      ->default_val("auto");
  cmd_papa->add_option("--step", papa_flags.h, "Step length")->default_val(0.01);
  cmd_papa->add_option("--steps", papa_flags.steps, "Max steps each way")->default_val(200);
  cmd_papa->add_option("--radius", papa_flags.radius,
                       "Neighborhood radius (default: estimated per level)");
  cmd_papa->add_option("--probes", papa_flags.probes, "Isotropy probe count")
      ->default_val(50);
  cmd_papa->add_option("--isotropy-threshold", papa_flags.isotropy_threshold,
                       "Spectral ratio below which data counts as isotropic")
      ->default_val(1.5);
  cmd_papa->add_flag("--no-isotropy-check", papa_flags.no_isotropy_check,
                     "Peel levels without the isotropy stop");
  cmd_papa->add_option("--bins", papa_flags.bins, "Radius-estimate histogram bins")
      ->default_val(50);
  cmd_papa->add_option("--seed", papa_flags.seed, "Random seed")->default_val(0);
  cmd_papa->add_option("--out", papa_flags.out, "Model output directory")->required();

  DefectFlags defect;
  CLI::App* cmd_defect =
      app.add_subcommand("defect", "Loop-closure defect at a datapoint");
  add_input_flags(cmd_defect, defect.in);
  cmd_defect->add_option("--origin-index", defect.origin_index, "Datapoint to probe")
      ->required();
  cmd_defect->add_option("--epsilon", defect.epsilons,
                         "Loop side lengths, comma-separated or repeated")
      ->delimiter(',')
      ->required();
  cmd_defect->add_option("--radius", defect.radius, "Neighborhood radius")->required();
  cmd_defect->add_option("--tie-threshold", defect.tie_threshold,
                         "Spectral ratio below which directions are degenerate")
      ->default_val(0.05);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cmd_generate->parsed()) return run_generate(generate);
    if (cmd_radius->parsed()) return run_radius(radius);
    if (cmd_trace->parsed()) return run_trace(trace);
    if (cmd_project->parsed()) return run_project(project);
    if (cmd_papa->parsed()) return run_papa_cmd(papa_flags);
    if (cmd_defect->parsed()) return run_defect(defect);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
