#pragma once

#include "mmplan/geometry.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmplan {

enum class PointClass : std::uint8_t {
  LinearStem,
  Wire,
  LinearOther,
  PlanarGround,
  PlanarOther,
  Volumetric,
  Unclassified,
};

inline constexpr std::size_t kNumPointClasses = 7;

using ClassCounts = std::array<std::size_t, kNumPointClasses>;

std::string_view to_string(PointClass c);
std::optional<PointClass> parse_point_class(std::string_view token);

inline bool is_linear(PointClass c) {
  return c == PointClass::LinearStem || c == PointClass::Wire || c == PointClass::LinearOther;
}
inline bool is_planar(PointClass c) {
  return c == PointClass::PlanarGround || c == PointClass::PlanarOther;
}

struct CloudPoint {
  Vec3 position = Vec3::Zero();
  PointClass label = PointClass::Unclassified;

  CloudPoint() = default;
  CloudPoint(double x, double y, double z, PointClass c = PointClass::Unclassified)
      : position(x, y, z), label(c) {}
  explicit CloudPoint(const Vec3& p, PointClass c = PointClass::Unclassified) : position(p), label(c) {}

  double x() const { return position.x(); }
  double y() const { return position.y(); }
  double z() const { return position.z(); }
};

using PointCloud = std::vector<CloudPoint>;

/// Malformed cloud input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: one point per line, "x y z" with an optional fourth class token.
// Lines starting with '#' and blank lines are skipped.
PointCloud parse_cloud(std::istream& in);
PointCloud load_cloud(const std::filesystem::path& path);
void write_cloud(std::ostream& out, std::span<const CloudPoint> points, bool with_labels);
void save_cloud(const std::filesystem::path& path, std::span<const CloudPoint> points, bool with_labels);  // creates parent dirs

/// Greedy first-kept-wins thinning: scans in input order and keeps a point only if
/// no already-kept point lies strictly closer than `min_spacing` (3D).
PointCloud downsample(std::span<const CloudPoint> points, double min_spacing);

ClassCounts count_classes(std::span<const CloudPoint> points);

}  // namespace mmplan
