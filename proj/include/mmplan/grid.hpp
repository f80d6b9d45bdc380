#pragma once

#include "mmplan/cloud.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mmplan {

struct CellKey {
  std::int64_t ix = 0;
  std::int64_t iy = 0;
  auto operator<=>(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    const std::uint64_t h = static_cast<std::uint64_t>(k.ix) * 0x9E3779B97F4A7C15ULL ^
                            (static_cast<std::uint64_t>(k.iy) + 0x632BE59BD9B4E019ULL);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

enum class Proximity : std::uint8_t { Unlabeled, Close, Far };

struct GridCell {
  CellKey key;
  std::vector<CloudPoint> points;
  ClassCounts class_counts{};
  Proximity proximity = Proximity::Unlabeled;

  std::size_t classified_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c + 1 < kNumPointClasses; ++c) n += class_counts[c];
    return n;
  }
};

/// 2D hash of cloud points keyed by (floor(x / s), floor(y / s)); z is never hashed.
///
/// Cells are kept in ascending key order and points inside a cell in lexicographic
/// (x, y, z) order, so every traversal is independent of the input permutation.
/// A grid is built once, then treated as immutable and shared read-only.
class HashedGrid {
 public:
  static constexpr double kDefaultCellSize = 1.0;

  explicit HashedGrid(double cell_size = kDefaultCellSize);

  double cell_size() const { return cell_size_; }
  CellKey key_for(double x, double y) const {
    return {static_cast<std::int64_t>(std::floor(x / cell_size_)),
            static_cast<std::int64_t>(std::floor(y / cell_size_))};
  }

  std::size_t cell_count() const { return cells_.size(); }
  std::size_t point_count() const { return point_count_; }
  bool empty() const { return point_count_ == 0; }

  const std::vector<GridCell>& cells() const { return cells_; }
  std::vector<GridCell>& mutable_cells() { return cells_; }
  const GridCell* find(const CellKey& key) const;
  GridCell* find(const CellKey& key);

  /// Offset of the first point of cells()[i] in the flattened point order.
  std::size_t point_offset(std::size_t cell_index) const { return offsets_[cell_index]; }

  void insert(const CloudPoint& p);
  /// Restores canonical ordering, rebuilds the index and recounts classes.
  void finalize();
  void recount();

  PointCloud flatten() const;

  /// Visits every cell whose footprint intersects the closed xy-disk.
  template <typename F>
  void for_each_cell_in_disk(const Vec2& center, double radius, F&& f) const;

  /// Visits every cell whose footprint lies within `radius` of the 2D segment [a, b].
  template <typename F>
  void for_each_cell_near_segment(const Vec2& a, const Vec2& b, double radius, F&& f) const;

  /// Visits every point whose 3D distance to `center` is at most `radius`.
  template <typename F>
  void for_each_point_within(const Vec3& center, double radius, F&& f) const;

 private:
  Vec2 cell_lo(const CellKey& k) const { return {k.ix * cell_size_, k.iy * cell_size_}; }

  double cell_size_;
  std::vector<GridCell> cells_;
  std::unordered_map<CellKey, std::uint32_t, CellKeyHash> index_;
  std::vector<std::size_t> offsets_;
  std::size_t point_count_ = 0;
};

HashedGrid build_grid(std::span<const CloudPoint> points, double cell_size = HashedGrid::kDefaultCellSize);
HashedGrid merge_grids(const HashedGrid& a, const HashedGrid& b);
PointCloud neighbors_within(const HashedGrid& grid, const Vec3& center, double radius);

// ---------------------------------------------------------------------------

template <typename F>
void HashedGrid::for_each_cell_in_disk(const Vec2& center, double radius, F&& f) const {
  if (cells_.empty()) return;
  const std::int64_t x0 = static_cast<std::int64_t>(std::floor((center.x() - radius) / cell_size_));
  const std::int64_t x1 = static_cast<std::int64_t>(std::floor((center.x() + radius) / cell_size_));
  const std::int64_t y0 = static_cast<std::int64_t>(std::floor((center.y() - radius) / cell_size_));
  const std::int64_t y1 = static_cast<std::int64_t>(std::floor((center.y() + radius) / cell_size_));
  const double r2 = radius * radius;
  for (std::int64_t ix = x0; ix <= x1; ++ix) {
    const double lo_x = ix * cell_size_;
    const double dx = std::max({lo_x - center.x(), 0.0, center.x() - (lo_x + cell_size_)});
    for (std::int64_t iy = y0; iy <= y1; ++iy) {
      const double lo_y = iy * cell_size_;
      const double dy = std::max({lo_y - center.y(), 0.0, center.y() - (lo_y + cell_size_)});
      if (dx * dx + dy * dy > r2) continue;
      if (const GridCell* cell = find({ix, iy})) f(*cell);
    }
  }
}

template <typename F>
void HashedGrid::for_each_cell_near_segment(const Vec2& a, const Vec2& b, double radius, F&& f) const {
  if (cells_.empty()) return;
  const Vec2 d = b - a;
  // Sweep columns along the dominant axis u; v is the other axis.
  const bool swap = std::abs(d.y()) > std::abs(d.x());
  const int u = swap ? 1 : 0;
  const int v = swap ? 0 : 1;
  const double cs = cell_size_;
  const double u_min = std::min(a[u], b[u]) - radius;
  const double u_max = std::max(a[u], b[u]) + radius;
  const std::int64_t c0 = static_cast<std::int64_t>(std::floor(u_min / cs));
  const std::int64_t c1 = static_cast<std::int64_t>(std::floor(u_max / cs));
  for (std::int64_t cu = c0; cu <= c1; ++cu) {
    const double lo_u = cu * cs - radius;
    const double hi_u = (cu + 1) * cs + radius;
    double t0 = 0.0;
    double t1 = 1.0;
    if (std::abs(d[u]) > 1e-15) {
      double ta = (lo_u - a[u]) / d[u];
      double tb = (hi_u - a[u]) / d[u];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1) continue;
    }
    double v0 = a[v] + t0 * d[v];
    double v1 = a[v] + t1 * d[v];
    if (v0 > v1) std::swap(v0, v1);
    const std::int64_t r0 = static_cast<std::int64_t>(std::floor((v0 - radius) / cs));
    const std::int64_t r1 = static_cast<std::int64_t>(std::floor((v1 + radius) / cs));
    for (std::int64_t cv = r0; cv <= r1; ++cv) {
      const CellKey key = swap ? CellKey{cv, cu} : CellKey{cu, cv};
      const GridCell* cell = find(key);
      if (!cell) continue;
      const Vec2 lo = cell_lo(key);
      const Vec2 hi = lo + Vec2(cs, cs);
      if (rect_segment_distance<double>(lo, hi, a, b) <= radius) f(*cell);
    }
  }
}

template <typename F>
void HashedGrid::for_each_point_within(const Vec3& center, double radius, F&& f) const {
  const double r2 = radius * radius;
  for_each_cell_in_disk(center.head<2>(), radius, [&](const GridCell& cell) {
    for (const auto& p : cell.points) {
      if ((p.position - center).squaredNorm() <= r2) f(p);
    }
  });
}

}  // namespace mmplan
