// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace pcgs {

// Single-channel integer image. Used for depth layers (values in
// [0, 2^b - 1]) and occupancy masks (values in {0, 1}).
struct FrameBuffer {
  int width = 0;
  int height = 0;
  std::vector<int32_t> data;

  FrameBuffer() = default;
  FrameBuffer(int w, int h, int32_t fill = 0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  int32_t at(int x, int y) const {
    assert(x >= 0 && x < width && y >= 0 && y < height);
    return data[static_cast<size_t>(y) * width + x];
  }
  int32_t& at(int x, int y) {
    assert(x >= 0 && x < width && y >= 0 && y < height);
    return data[static_cast<size_t>(y) * width + x];
  }

  bool sameSize(const FrameBuffer& o) const {
    return width == o.width && height == o.height;
  }
  bool operator==(const FrameBuffer&) const = default;
};

}  // namespace pcgs
