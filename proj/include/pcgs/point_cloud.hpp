// SPDX-License-Identifier: Apache-2.0
//
// Point cloud data model and voxelization.

#pragma once

#include <stdexcept>
#include <vector>

#include "pcgs/geometry.hpp"

namespace pcgs {

// Cloud as loaded from disk: real-valued coordinates, not yet voxelized.
struct RawCloud {
  std::vector<Vec3d> positions;
  std::vector<Vec3d> normals;  // empty, or one unit vector per position

  bool hasNormals() const { return !normals.empty(); }
  size_t size() const { return positions.size(); }
};

// Voxelized cloud: integer coordinates in [0, 2^bitDepth - 1], duplicates
// removed. Normals, when present, run parallel to points and are unit length.
struct PointCloud {
  std::vector<Point3> points;
  std::vector<Vec3d> normals;
  int bitDepth = 0;

  bool hasNormals() const { return !normals.empty(); }
  size_t size() const { return points.size(); }

  RawCloud toRaw() const;
};

// Affinely maps coordinates onto [0, 2^bitDepth - 1]: per-axis minimum goes
// to 0, the largest axis extent is stretched to fill the range (uniform
// scale, shape preserved), coordinates rounded to nearest integer and
// duplicates dropped keeping the first occurrence. Idempotent on its own
// output. Throws std::invalid_argument on an empty cloud or bad bit depth.
PointCloud voxelize(const RawCloud& cloud, int bitDepth);
PointCloud voxelize(const PointCloud& cloud, int bitDepth);

// Checks that a raw cloud is already integer-valued and within range for the
// given bit depth; converts without remapping. Returns false if any
// coordinate is fractional or out of range.
bool asVoxelized(const RawCloud& cloud, int bitDepth, PointCloud& out);

}  // namespace pcgs
