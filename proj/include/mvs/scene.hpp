#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace mvs {

/// Closest ray/primitive intersection.
struct Hit {
  bool hit = false;
  double t = 0.0;  // ray parameter in units of the (possibly non-unit) direction
  Eigen::Vector3d point = Eigen::Vector3d::Zero();
  Eigen::Vector3d normal = Eigen::Vector3d::Zero();  // world frame, unit
  int prim_id = -1;
};

struct SpherePrim {
  Eigen::Vector3d center;
  double radius;
};

struct BoxPrim {
  Eigen::Vector3d lo;
  Eigen::Vector3d hi;
};

/// Axis-aligned room face: plane coord[axis] == offset with inward normal
/// sign * e_axis, clipped to the room extents on the other two axes.
struct RoomFace {
  int axis;
  double offset;
  double sign;
};

/// Analytic scene: an axis-aligned room (5 faces, the z=0 side left open)
/// plus boxes and spheres. Every primitive carries a deterministic
/// procedural texture derived from (seed, primitive id, surface point).
struct Scene {
  Eigen::Vector3d room_size = Eigen::Vector3d(4.0, 3.0, 4.0);  // x, y(up), z
  std::vector<RoomFace> faces;
  std::vector<BoxPrim> boxes;
  std::vector<SpherePrim> spheres;
  uint64_t texture_seed = 1;
  double texture_corr = 0.08;  // value-noise lattice spacing in meters

  int primitive_count() const {
    return int(faces.size() + boxes.size() + spheres.size());
  }

  Eigen::Vector3d center() const { return 0.5 * room_size; }

  bool inside_room(const Eigen::Vector3d& p, double margin = 0.0) const;

  /// True if p is inside (or within `clearance` of) any box or sphere.
  bool near_obstacle(const Eigen::Vector3d& p, double clearance = 0.0) const;

  /// Nearest intersection of the ray origin + t*dir, t > 1e-9. dir need not
  /// be unit length; Hit::t is reported in units of |dir|.
  Hit raycast(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir) const;

  /// Deterministic texture sample: F-channel value-noise vector at a surface
  /// point, L2-normalized.
  void texture(int prim_id, const Eigen::Vector3d& point, int channels,
               double* out) const;

  /// Scalar luminance in [0, 255] for image rendering.
  double luminance(int prim_id, const Eigen::Vector3d& point) const;
};

/// Room with the five faces installed and no occluders.
Scene make_room(const Eigen::Vector3d& size, uint64_t texture_seed,
                double texture_corr);

}  // namespace mvs
