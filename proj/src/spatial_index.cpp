// SPDX-License-Identifier: Apache-2.0

#include "pcgs/spatial_index.hpp"

#include <algorithm>
#include <cmath>

namespace pcgs {

namespace {
// floor division; queries may lie below the grid origin
int floorDiv(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}
}  // namespace

VoxelGridIndex::VoxelGridIndex(std::span<const Point3> points)
    : points_(points.begin(), points.end()) {
  if (points_.empty()) return;
  Point3 lo = points_[0], hi = points_[0];
  for (const auto& p : points_) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  minCorner_ = lo;
  const double volume = double(hi.x - lo.x + 1) * double(hi.y - lo.y + 1) *
                        double(hi.z - lo.z + 1);
  // aim for ~1 point per cell
  const double edge = std::cbrt(volume / static_cast<double>(points_.size()));
  cellSize_ = std::max(1, static_cast<int>(std::lround(edge)));
  cells_.reserve(points_.size() * 2);
  for (size_t i = 0; i < points_.size(); ++i) {
    const Point3& p = points_[i];
    cells_[cellKey((p.x - lo.x) / cellSize_, (p.y - lo.y) / cellSize_,
                   (p.z - lo.z) / cellSize_)]
        .push_back(static_cast<int>(i));
  }
}

int64_t VoxelGridIndex::cellKey(int cx, int cy, int cz) const {
  return (static_cast<int64_t>(cx) << 42) ^ (static_cast<int64_t>(cy) << 21) ^
         static_cast<int64_t>(cz);
}

void VoxelGridIndex::scanCell(int cx, int cy, int cz, const Point3& query,
                              std::vector<Candidate>& best, int k) const {
  const auto it = cells_.find(cellKey(cx, cy, cz));
  if (it == cells_.end()) return;
  for (int idx : it->second) {
    const Candidate c{squaredDistance(points_[idx], query), idx};
    if (static_cast<int>(best.size()) < k) {
      best.insert(std::upper_bound(best.begin(), best.end(), c), c);
    } else if (c < best.back()) {
      best.pop_back();
      best.insert(std::upper_bound(best.begin(), best.end(), c), c);
    }
  }
}

std::vector<int> VoxelGridIndex::kNearest(const Point3& query, int k) const {
  std::vector<int> out;
  if (points_.empty() || k <= 0) return out;
  k = std::min<int>(k, static_cast<int>(points_.size()));

  const int qx = floorDiv(query.x - minCorner_.x, cellSize_);
  const int qy = floorDiv(query.y - minCorner_.y, cellSize_);
  const int qz = floorDiv(query.z - minCorner_.z, cellSize_);

  std::vector<Candidate> best;
  best.reserve(k + 1);
  // Shell s holds cells at Chebyshev distance s from the query's cell; any
  // point there lies at least (s-1)*cellSize away, which bounds when the
  // search may stop. Since k <= |points|, the heap always fills once every
  // populated cell has been visited, so the bound eventually fires.
  for (int s = 0;; ++s) {
    if (static_cast<int>(best.size()) == k) {
      const int64_t bound = static_cast<int64_t>(s - 1) * cellSize_;
      if (bound * bound > best.back().d2) break;
    }
    for (int dx = -s; dx <= s; ++dx) {
      for (int dy = -s; dy <= s; ++dy) {
        if (std::max(std::abs(dx), std::abs(dy)) == s) {
          for (int dz = -s; dz <= s; ++dz)
            scanCell(qx + dx, qy + dy, qz + dz, query, best, k);
        } else {
          scanCell(qx + dx, qy + dy, qz - s, query, best, k);
          scanCell(qx + dx, qy + dy, qz + s, query, best, k);
        }
      }
    }
  }
  out.reserve(best.size());
  for (const auto& c : best) out.push_back(c.index);
  return out;
}

int VoxelGridIndex::nearest(const Point3& query) const {
  const auto v = kNearest(query, 1);
  return v.empty() ? -1 : v[0];
}

}  // namespace pcgs
