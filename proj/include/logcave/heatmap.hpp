#pragma once

#include <string>
#include <vector>

#include "logcave/types.hpp"

namespace logcave {

struct FieldSample {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

enum class Palette { Viridis, Diverging, Gray };

Palette palette_from_string(const std::string& name);

struct HeatmapOptions {
  Palette palette = Palette::Viridis;
  std::string title;
  std::vector<Vec2> outline;  ///< closed polyline, optional
  double cell = 0.0;          ///< node spacing; inferred from the data when zero
  bool mark_max = true;       ///< circle the largest value (the worst point for margin fields)
};

/// Reads x,y,value rows (header line required; extra columns ignored, the value column chosen by name).
std::vector<FieldSample> read_field_csv(const std::string& path, const std::string& column = "");
std::vector<Vec2> read_outline_csv(const std::string& path);

/// Deterministic SVG text. Throws DomainError on an empty field.
std::string render_heatmap(const std::vector<FieldSample>& field, const HeatmapOptions& options);

}  // namespace logcave
