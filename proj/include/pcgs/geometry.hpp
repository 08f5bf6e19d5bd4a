// SPDX-License-Identifier: Apache-2.0
//
// Basic geometric value types shared across the library.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace pcgs {

struct Vec3d {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3d operator+(const Vec3d& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3d operator-(const Vec3d& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3d operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3d& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3d normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec3d{x / n, y / n, z / n} : Vec3d{0.0, 0.0, 0.0};
  }
};

// Voxel coordinate. All components non-negative and within the geometry
// bit depth once a cloud has been voxelized.
struct Point3 {
  int32_t x = 0;
  int32_t y = 0;
  int32_t z = 0;

  bool operator==(const Point3&) const = default;
  int32_t operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  int32_t& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  Vec3d toVec() const {
    return {static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)};
  }
};

// Packs a point with coordinates < 2^21 into one key for hashing/dedup.
inline uint64_t packPoint(const Point3& p) {
  return (static_cast<uint64_t>(p.x) << 42) | (static_cast<uint64_t>(p.y) << 21) |
         static_cast<uint64_t>(p.z);
}

inline int64_t squaredDistance(const Point3& a, const Point3& b) {
  const int64_t dx = a.x - b.x;
  const int64_t dy = a.y - b.y;
  const int64_t dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

template <typename T>
T clampValue(T v, T lo, T hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace pcgs
