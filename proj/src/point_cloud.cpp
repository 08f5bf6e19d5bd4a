// SPDX-License-Identifier: Apache-2.0

#include "pcgs/point_cloud.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>

namespace pcgs {

RawCloud PointCloud::toRaw() const {
  RawCloud raw;
  raw.positions.reserve(points.size());
  for (const auto& p : points) raw.positions.push_back(p.toVec());
  raw.normals = normals;
  return raw;
}

PointCloud voxelize(const RawCloud& cloud, int bitDepth) {
  if (cloud.positions.empty()) throw std::invalid_argument("voxelize: empty cloud");
  if (bitDepth < 1 || bitDepth > 16)
    throw std::invalid_argument("voxelize: bit depth must be in [1, 16]");

  Vec3d lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           std::numeric_limits<double>::max()};
  Vec3d hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
           std::numeric_limits<double>::lowest()};
  for (const auto& p : cloud.positions) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const double extent =
      std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z});
  const double range = static_cast<double>((1 << bitDepth) - 1);
  const double scale = extent > 0.0 ? range / extent : 1.0;

  PointCloud out;
  out.bitDepth = bitDepth;
  out.points.reserve(cloud.positions.size());
  const bool keepNormals = cloud.hasNormals();
  if (keepNormals) out.normals.reserve(cloud.positions.size());

  std::unordered_set<uint64_t> seen;
  seen.reserve(cloud.positions.size() * 2);
  const int32_t maxCoord = (1 << bitDepth) - 1;
  for (size_t i = 0; i < cloud.positions.size(); ++i) {
    const Vec3d& p = cloud.positions[i];
    Point3 q{
        static_cast<int32_t>(std::llround((p.x - lo.x) * scale)),
        static_cast<int32_t>(std::llround((p.y - lo.y) * scale)),
        static_cast<int32_t>(std::llround((p.z - lo.z) * scale))};
    q.x = clampValue(q.x, 0, maxCoord);
    q.y = clampValue(q.y, 0, maxCoord);
    q.z = clampValue(q.z, 0, maxCoord);
    if (!seen.insert(packPoint(q)).second) continue;
    out.points.push_back(q);
    if (keepNormals) out.normals.push_back(cloud.normals[i]);
  }
  return out;
}

PointCloud voxelize(const PointCloud& cloud, int bitDepth) {
  return voxelize(cloud.toRaw(), bitDepth);
}

bool asVoxelized(const RawCloud& cloud, int bitDepth, PointCloud& out) {
  if (cloud.positions.empty() || bitDepth < 1 || bitDepth > 16) return false;
  const double maxCoord = static_cast<double>((1 << bitDepth) - 1);
  out = PointCloud{};
  out.bitDepth = bitDepth;
  out.points.reserve(cloud.positions.size());
  const bool keepNormals = cloud.hasNormals();

  std::unordered_set<uint64_t> seen;
  seen.reserve(cloud.positions.size() * 2);
  for (size_t i = 0; i < cloud.positions.size(); ++i) {
    const Vec3d& p = cloud.positions[i];
    for (int a = 0; a < 3; ++a) {
      const double c = p[a];
      if (c < 0.0 || c > maxCoord || c != std::floor(c)) return false;
    }
    Point3 q{static_cast<int32_t>(p.x), static_cast<int32_t>(p.y),
             static_cast<int32_t>(p.z)};
    if (!seen.insert(packPoint(q)).second) continue;
    out.points.push_back(q);
    if (keepNormals) out.normals.push_back(cloud.normals[i]);
  }
  return true;
}

}  // namespace pcgs
