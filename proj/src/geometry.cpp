#include "mvs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mvs {

Intrinsics::Intrinsics(double fx_, double fy_, double cx_, double cy_, int w,
                       int h)
    : fx(fx_), fy(fy_), cx(cx_), cy(cy_), width(w), height(h) {
  if (fx <= 0.0 || fy <= 0.0)
    throw std::invalid_argument("Intrinsics: focal lengths must be positive");
  if (cx < 0.0 || cx >= double(width) || cy < 0.0 || cy >= double(height))
    throw std::invalid_argument(
        "Intrinsics: principal point outside image bounds");
}

Intrinsics Intrinsics::scaled(double s) const {
  if (s <= 0.0) throw std::invalid_argument("Intrinsics::scaled: s must be > 0");
  return Intrinsics(fx * s, fy * s, cx * s, cy * s,
                    std::max(1, int(std::lround(width * s))),
                    std::max(1, int(std::lround(height * s))));
}

Pose Pose::look_at(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                   const Eigen::Vector3d& up) {
  Eigen::Vector3d forward = target - eye;
  double n = forward.norm();
  if (n < 1e-12)
    throw std::invalid_argument("Pose::look_at: eye coincides with target");
  forward /= n;
  Eigen::Vector3d down = -up;
  // project world-down onto the plane orthogonal to forward
  Eigen::Vector3d ydir = down - down.dot(forward) * forward;
  if (ydir.norm() < 1e-9) {
    // looking straight up/down; fall back to an arbitrary horizontal axis
    Eigen::Vector3d alt(1, 0, 0);
    ydir = alt - alt.dot(forward) * forward;
  }
  ydir.normalize();
  Eigen::Vector3d xdir = ydir.cross(forward);
  Eigen::Matrix3d r;
  r.col(0) = xdir;
  r.col(1) = ydir;
  r.col(2) = forward;
  return Pose(r, eye);
}

bool Pose::is_valid(double tol) const {
  Eigen::Matrix3d err = rotation.transpose() * rotation -
                        Eigen::Matrix3d::Identity();
  if (err.cwiseAbs().maxCoeff() > tol) return false;
  return rotation.determinant() > 0.0;
}

Pose relative_pose(const Pose& a, const Pose& b) {
  return a.inverse().compose(b);
}

double pose_distance(const Pose& a, const Pose& b) {
  Pose rel = relative_pose(a, b);
  double rot_term = 3.0 - rel.rotation.trace();  // tr(I - R)
  // tr(I - R) ∈ [0, 4] for rotations; clamp away round-off
  rot_term = std::max(0.0, rot_term);
  return std::sqrt(rel.translation.norm() + (2.0 / 3.0) * rot_term);
}

Eigen::Vector3d backproject(const Eigen::Vector2d& pixel, double depth,
                            const Intrinsics& k) {
  if (depth <= 0.0)
    throw std::invalid_argument("backproject: depth must be positive");
  return Eigen::Vector3d((pixel.x() - k.cx) / k.fx * depth,
                         (pixel.y() - k.cy) / k.fy * depth, depth);
}

Projection project(const Eigen::Vector3d& point, const Intrinsics& k) {
  Projection p;
  p.depth = point.z();
  p.in_front = point.z() > 0.0;
  if (p.in_front) {
    p.pixel.x() = k.fx * point.x() / point.z() + k.cx;
    p.pixel.y() = k.fy * point.y() / point.z() + k.cy;
  }
  return p;
}

WarpSample warp_to_plane(const Eigen::Vector2d& ref_pixel, double plane_depth,
                         const Pose& ref_pose, const Pose& src_pose,
                         const Intrinsics& k_ref, const Intrinsics& k_src) {
  if (plane_depth <= 0.0)
    throw std::invalid_argument("warp_to_plane: plane_depth must be positive");
  Eigen::Vector3d world = ref_pose.apply(backproject(ref_pixel, plane_depth, k_ref));
  Eigen::Vector3d in_src = src_pose.inverse().apply(world);
  WarpSample w;
  w.src_depth = in_src.z();
  Projection p = project(in_src, k_src);
  if (p.in_front) {
    w.src_pixel = p.pixel;
    w.valid = k_src.contains(p.pixel);
  }
  return w;
}

Ray ray_direction(const Eigen::Vector2d& pixel, const Intrinsics& k,
                  const Pose& pose, double plane_depth) {
  if (plane_depth <= 0.0)
    throw std::invalid_argument("ray_direction: plane_depth must be positive");
  Eigen::Vector3d world = pose.apply(backproject(pixel, plane_depth, k));
  Eigen::Vector3d d = world - pose.translation;
  double n = d.norm();
  if (n < 1e-12)
    throw std::invalid_argument("ray_direction: degenerate zero-length direction");
  return Ray{d / n};
}

double relative_ray_angle(const Ray& r0, const Ray& rn) {
  double d = r0.direction.dot(rn.direction);
  return std::acos(std::clamp(d, -1.0, 1.0));
}

}  // namespace mvs
