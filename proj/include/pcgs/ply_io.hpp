// SPDX-License-Identifier: Apache-2.0
//
// ASCII PLY reader/writer. Mandatory x,y,z vertex properties, optional
// nx,ny,nz normals; everything else is skipped positionally.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "pcgs/point_cloud.hpp"

namespace pcgs {

struct PlyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Header does not follow "ply / format ... / element ... / end_header".
struct PlyMalformedHeader : PlyError {
  using PlyError::PlyError;
};
// Declared format is binary; only ascii 1.0 is supported.
struct PlyUnsupportedFormat : PlyError {
  using PlyError::PlyError;
};
// Vertex element lacks x, y or z.
struct PlyMissingProperty : PlyError {
  using PlyError::PlyError;
};

// Reads coordinates verbatim (no voxelization). Normals are loaded when all
// of nx,ny,nz are declared and renormalized to unit length.
RawCloud loadPly(const std::filesystem::path& path);

// Integer cloud: writes int x,y,z (plus float normals when present).
void savePly(const std::filesystem::path& path, const PointCloud& cloud);
// Raw cloud: writes double-precision coordinates that re-read bit-exactly.
void savePly(const std::filesystem::path& path, const RawCloud& cloud);

}  // namespace pcgs
