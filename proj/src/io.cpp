#include "papa/io.hpp"

#include "papa/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace papa {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw IoError("failed while writing " + path.string());
  }
}

}  // namespace

std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

void write_cloud_csv(const std::filesystem::path& path, const PointCloud& cloud) {
  std::ofstream out = open_out(path);
  for (int j = 0; j < cloud.dimension(); ++j) {
    out << (j ? "," : "") << "x_" << (j + 1);
  }
  if (cloud.has_labels()) out << ",label";
  out << "\n";
  for (int i = 0; i < cloud.size(); ++i) {
    for (int j = 0; j < cloud.dimension(); ++j) {
      out << (j ? "," : "") << format_double(cloud.points()(i, j));
    }
    if (cloud.has_labels()) out << "," << cloud.labels()[i];
    out << "\n";
  }
  finish(out, path);
}

void write_params_csv(const std::filesystem::path& path,
                      const std::vector<Vector>& params) {
  if (params.empty()) {
    throw ValidationError("no parameter rows to write");
  }
  std::ofstream out = open_out(path);
  for (Eigen::Index j = 0; j < params.front().size(); ++j) {
    out << (j ? "," : "") << "p_" << (j + 1);
  }
  out << "\n";
  for (const Vector& row : params) {
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << format_double(row[j]);
    }
    out << "\n";
  }
  finish(out, path);
}

void write_histogram_csv(const std::filesystem::path& path,
                         const DistanceHistogram& hist) {
  std::ofstream out = open_out(path);
  out << "bin_left_edge,count\n";
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    out << format_double(hist.bin_edges[k]) << "," << hist.counts[k] << "\n";
  }
  finish(out, path);
}

void write_traces_csv(const std::filesystem::path& path,
                      const std::vector<AutoparallelTrace>& traces) {
  if (traces.empty()) {
    throw ValidationError("no traces to write");
  }
  const Eigen::Index d = traces.front().states.front().position.size();
  std::ofstream out = open_out(path);
  out << "trace_id,step_index,arc_length";
  for (Eigen::Index j = 0; j < d; ++j) out << ",x_" << (j + 1);
  for (Eigen::Index j = 0; j < d; ++j) out << ",d_" << (j + 1);
  out << ",termination\n";
  for (std::size_t id = 0; id < traces.size(); ++id) {
    const AutoparallelTrace& trace = traces[id];
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      const TraceState& state = trace.states[k];
      const int step_index = static_cast<int>(k) - trace.seed_state;
      out << id << "," << step_index << "," << format_double(state.arc_length);
      for (Eigen::Index j = 0; j < d; ++j) out << "," << format_double(state.position[j]);
      for (Eigen::Index j = 0; j < d; ++j) out << "," << format_double(state.direction[j]);
      if (step_index < 0) {
        out << "," << to_string(trace.backward_termination);
      } else if (step_index > 0) {
        out << "," << to_string(trace.forward_termination);
      } else {
        out << ",seed";
      }
      out << "\n";
    }
  }
  finish(out, path);
}

void write_projection_csv(const std::filesystem::path& path,
                          const std::vector<FiberProjection>& projections) {
  if (projections.empty()) {
    throw ValidationError("no projections to write");
  }
  const Eigen::Index d = projections.front().intersection.size();
  std::ofstream out = open_out(path);
  out << "point_index,signed_distance";
  for (Eigen::Index j = 0; j < d; ++j) out << ",y_" << (j + 1);
  out << "\n";
  for (const FiberProjection& p : projections) {
    out << p.point_index << "," << format_double(p.signed_distance);
    for (Eigen::Index j = 0; j < d; ++j) out << "," << format_double(p.intersection[j]);
    out << "\n";
  }
  finish(out, path);
}

void write_column_csv(const std::filesystem::path& path, const std::string& header,
                      const std::vector<double>& values) {
  std::ofstream out = open_out(path);
  out << header << "\n";
  for (double v : values) {
    out << format_double(v) << "\n";
  }
  finish(out, path);
}

void save_model(const std::filesystem::path& directory, const PapaModel& model,
                const std::string& config_echo_json) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) {
    throw IoError("cannot create " + directory.string() + ": " + ec.message());
  }

  for (std::size_t k = 0; k < model.levels.size(); ++k) {
    const PapaLevel& level = model.levels[k];
    const fs::path level_dir = directory / ("level_" + std::to_string(k));
    fs::create_directories(level_dir, ec);
    if (ec) {
      throw IoError("cannot create " + level_dir.string() + ": " + ec.message());
    }

    nlohmann::json base;
    base["anchor"] = std::vector<double>(
        level.base.anchor().data(), level.base.anchor().data() + level.base.anchor().size());
    base["normal"] = std::vector<double>(
        level.base.normal().data(), level.base.normal().data() + level.base.normal().size());
    std::ofstream base_out = open_out(level_dir / "base.json");
    base_out << base.dump(2) << "\n";
    finish(base_out, level_dir / "base.json");

    std::ofstream coords = open_out(level_dir / "coordinates.csv");
    coords << "point_index,coordinate\n";
    for (std::size_t i = 0; i < level.coordinates.size(); ++i) {
      coords << level.point_indices[i] << "," << format_double(level.coordinates[i]) << "\n";
    }
    finish(coords, level_dir / "coordinates.csv");

    write_cloud_csv(level_dir / "residual.csv", level.residual);
  }

  nlohmann::json manifest;
  manifest["levels"] = model.levels.size();
  manifest["stop_reason"] = to_string(model.stop_reason);
  manifest["config"] = nlohmann::json::parse(config_echo_json);
  std::ofstream out = open_out(directory / "manifest.json");
  out << manifest.dump(2) << "\n";
  finish(out, directory / "manifest.json");
}

}  // namespace papa
