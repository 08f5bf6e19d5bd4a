// SPDX-License-Identifier: Apache-2.0
//
// Exact nearest-neighbor queries over voxel clouds via a regular-grid
// spatial hash with expanding-shell search. Ties in distance are broken by
// point index, so results are deterministic and match a brute-force scan.

#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "pcgs/geometry.hpp"

namespace pcgs {

class VoxelGridIndex {
 public:
  explicit VoxelGridIndex(std::span<const Point3> points);

  // Index of the nearest point; smallest index wins among equal distances.
  // Returns -1 on an empty index.
  int nearest(const Point3& query) const;

  // The k nearest points (including an exact-coincident one), ordered by
  // (squared distance, index).
  std::vector<int> kNearest(const Point3& query, int k) const;

  size_t size() const { return points_.size(); }

 private:
  struct Candidate {
    int64_t d2;
    int index;
    bool operator<(const Candidate& o) const {
      return d2 != o.d2 ? d2 < o.d2 : index < o.index;
    }
  };

  int64_t cellKey(int cx, int cy, int cz) const;
  void scanCell(int cx, int cy, int cz, const Point3& query,
                std::vector<Candidate>& heap, int k) const;

  std::vector<Point3> points_;
  std::unordered_map<int64_t, std::vector<int>> cells_;
  int cellSize_ = 1;
  Point3 minCorner_{};
};

}  // namespace pcgs
