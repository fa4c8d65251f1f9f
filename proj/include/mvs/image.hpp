#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mvs {

/// Dense row-major 2D array. x is the column index, y the row index.
template <typename T>
struct Grid {
  int width = 0, height = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int w, int h, T fill = T{})
      : width(w), height(h), data(size_t(w) * size_t(h), fill) {}

  size_t idx(int x, int y) const { return size_t(y) * width + x; }
  T& at(int x, int y) { return data[idx(x, y)]; }
  const T& at(int x, int y) const { return data[idx(x, y)]; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  bool same_size(const Grid& o) const {
    return width == o.width && height == o.height;
  }
};

using GrayImage = Grid<double>;  // luminance in [0, 255]

/// Per-pixel perpendicular depths in meters plus validity flags.
struct DepthMap {
  int width = 0, height = 0;
  std::vector<double> depth;
  std::vector<uint8_t> valid;

  DepthMap() = default;
  DepthMap(int w, int h)
      : width(w),
        height(h),
        depth(size_t(w) * size_t(h), 0.0),
        valid(size_t(w) * size_t(h), 0) {}

  size_t idx(int x, int y) const { return size_t(y) * width + x; }
  double& at(int x, int y) { return depth[idx(x, y)]; }
  double at(int x, int y) const { return depth[idx(x, y)]; }
  bool is_valid(int x, int y) const { return valid[idx(x, y)] != 0; }
  void set(int x, int y, double d, bool v) {
    depth[idx(x, y)] = d;
    valid[idx(x, y)] = v ? 1 : 0;
  }
  size_t count_valid() const {
    size_t n = 0;
    for (uint8_t v : valid) n += v != 0;
    return n;
  }
  bool same_size(const DepthMap& o) const {
    return width == o.width && height == o.height;
  }
};

/// Per-pixel unit normals (camera frame unless stated otherwise).
struct NormalMap {
  int width = 0, height = 0;
  std::vector<Eigen::Vector3d> normal;
  std::vector<uint8_t> valid;

  NormalMap() = default;
  NormalMap(int w, int h)
      : width(w),
        height(h),
        normal(size_t(w) * size_t(h), Eigen::Vector3d::Zero()),
        valid(size_t(w) * size_t(h), 0) {}

  size_t idx(int x, int y) const { return size_t(y) * width + x; }
  bool is_valid(int x, int y) const { return valid[idx(x, y)] != 0; }
  void set(int x, int y, const Eigen::Vector3d& n, bool v) {
    normal[idx(x, y)] = n;
    valid[idx(x, y)] = v ? 1 : 0;
  }
  bool same_size(const NormalMap& o) const {
    return width == o.width && height == o.height;
  }
};

}  // namespace mvs
