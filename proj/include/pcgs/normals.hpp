// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pcgs/point_cloud.hpp"

namespace pcgs {

struct NormalEstimationStats {
  int degenerateNeighborhoods = 0;  // collinear supports that got the fallback
};

// Per-point unit normal from the least-squares plane over the k nearest
// neighbors (the point itself included). Neighbor ties in distance are broken
// by point index, so the result is deterministic and thread-count invariant.
// Signs are oriented away from the bounding-box center along each normal's
// dominant axis. Degenerate (collinear) neighborhoods fall back to (0,0,1)
// and are counted in stats. Requires |points| >= k >= 3.
PointCloud estimateNormals(const PointCloud& cloud, int k,
                           NormalEstimationStats* stats = nullptr);

}  // namespace pcgs
