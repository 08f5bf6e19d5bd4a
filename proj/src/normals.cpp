// SPDX-License-Identifier: Apache-2.0

#include "pcgs/normals.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <stdexcept>

#include "pcgs/parallel.hpp"
#include "pcgs/spatial_index.hpp"

namespace pcgs {

PointCloud estimateNormals(const PointCloud& cloud, int k,
                           NormalEstimationStats* stats) {
  if (k < 3) throw std::invalid_argument("estimateNormals: k must be >= 3");
  if (cloud.points.size() < static_cast<size_t>(k))
    throw std::invalid_argument("estimateNormals: cloud smaller than k");

  PointCloud out = cloud;
  out.normals.assign(cloud.points.size(), Vec3d{0, 0, 1});

  Point3 lo = cloud.points[0], hi = cloud.points[0];
  for (const auto& p : cloud.points) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  const Vec3d center{(lo.x + hi.x) * 0.5, (lo.y + hi.y) * 0.5,
                     (lo.z + hi.z) * 0.5};

  const VoxelGridIndex index(cloud.points);
  std::atomic<int> degenerate{0};

  parallelFor(cloud.points.size(), [&](size_t i) {
    const auto nbrs = index.kNearest(cloud.points[i], k);

    Vec3d mean{0, 0, 0};
    for (int j : nbrs) mean = mean + cloud.points[j].toVec();
    mean = mean * (1.0 / static_cast<double>(nbrs.size()));

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (int j : nbrs) {
      const Vec3d d = cloud.points[j].toVec() - mean;
      const Eigen::Vector3d v(d.x, d.y, d.z);
      cov += v * v.transpose();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
    const auto& evals = solver.eigenvalues();  // ascending
    // rank <= 1 covariance means a collinear support: no plane to fit
    if (evals[1] <= 1e-9 * std::max(evals[2], 1.0)) {
      degenerate.fetch_add(1, std::memory_order_relaxed);
      out.normals[i] = Vec3d{0, 0, 1};
      return;
    }
    const Eigen::Vector3d ev = solver.eigenvectors().col(0);
    Vec3d n{ev[0], ev[1], ev[2]};
    n = n.normalized();

    // dominant axis of the normal, ties toward x then y
    int dom = 0;
    double domAbs = std::abs(n.x);
    if (std::abs(n.y) > domAbs) { dom = 1; domAbs = std::abs(n.y); }
    if (std::abs(n.z) > domAbs) dom = 2;
    const double side = cloud.points[i].toVec()[dom] - center[dom];
    const double comp = n[dom];
    if ((side >= 0.0 && comp < 0.0) || (side < 0.0 && comp > 0.0))
      n = n * -1.0;
    out.normals[i] = n;
  });

  if (stats) stats->degenerateNeighborhoods = degenerate.load();
  return out;
}

}  // namespace pcgs
