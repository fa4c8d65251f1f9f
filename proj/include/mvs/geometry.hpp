#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace mvs {

/// Pinhole camera intrinsics, all quantities in pixels.
struct Intrinsics {
  double fx = 0.0, fy = 0.0;
  double cx = 0.0, cy = 0.0;
  int width = 0, height = 0;

  Intrinsics() = default;
  Intrinsics(double fx_, double fy_, double cx_, double cy_, int w, int h);

  /// Rescale the camera by factor s (image size and all four parameters).
  Intrinsics scaled(double s) const;

  /// True if px lies inside the sampleable image area [0, W-1] x [0, H-1].
  bool contains(const Eigen::Vector2d& px) const {
    return px.x() >= 0.0 && px.x() <= double(width - 1) && px.y() >= 0.0 &&
           px.y() <= double(height - 1);
  }
};

/// Rigid camera-to-world transform (column-vector convention).
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Pose() = default;
  Pose(const Eigen::Matrix3d& r, const Eigen::Vector3d& t)
      : rotation(r), translation(t) {}

  static Pose identity() { return Pose(); }

  /// Camera at `eye` looking toward `target`, x right / y down / z forward.
  static Pose look_at(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                      const Eigen::Vector3d& up = Eigen::Vector3d(0, 1, 0));

  Pose compose(const Pose& other) const {
    return Pose(rotation * other.rotation,
                rotation * other.translation + translation);
  }

  Pose inverse() const {
    Eigen::Matrix3d rt = rotation.transpose();
    return Pose(rt, -(rt * translation));
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }

  bool is_valid(double tol = 1e-9) const;
};

/// Unit direction in the world frame.
struct Ray {
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
};

/// Result of warping a reference pixel onto a source view at a given plane.
struct WarpSample {
  Eigen::Vector2d src_pixel = Eigen::Vector2d::Zero();
  double src_depth = 0.0;  // signed perpendicular depth in the source frame
  bool valid = false;
};

struct Projection {
  Eigen::Vector2d pixel = Eigen::Vector2d::Zero();
  double depth = 0.0;
  bool in_front = false;
};

/// Relative transform taking coordinates of frame b into frame a: inv(a) ∘ b.
Pose relative_pose(const Pose& a, const Pose& b);

/// sqrt(‖t‖ + 2/3 · tr(I − R)) of the relative pose between a and b.
double pose_distance(const Pose& a, const Pose& b);

Eigen::Vector3d backproject(const Eigen::Vector2d& pixel, double depth,
                            const Intrinsics& k);

Projection project(const Eigen::Vector3d& point, const Intrinsics& k);

WarpSample warp_to_plane(const Eigen::Vector2d& ref_pixel, double plane_depth,
                         const Pose& ref_pose, const Pose& src_pose,
                         const Intrinsics& k_ref, const Intrinsics& k_src);

Ray ray_direction(const Eigen::Vector2d& pixel, const Intrinsics& k,
                  const Pose& pose, double plane_depth);

double relative_ray_angle(const Ray& r0, const Ray& rn);

}  // namespace mvs
