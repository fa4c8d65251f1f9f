#include "mvs/scene.hpp"

#include "mvs/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mvs {

namespace {

constexpr double kRayEps = 1e-9;

// lattice value in [-1, 1] at integer coords for a given stream
double lattice_value(uint64_t stream, int64_t ix, int64_t iy, int64_t iz) {
  uint64_t h = mix64(stream + uint64_t(ix) * 0x8da6b343u);
  h = mix64(h + uint64_t(iy) * 0xd8163841u);
  h = mix64(h + uint64_t(iz) * 0xcb1ab31fu);
  return double(h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

double smoothstep(double f) { return f * f * (3.0 - 2.0 * f); }

// trilinear value noise with smoothstep fade, lattice spacing `cell`
double value_noise(uint64_t stream, const Eigen::Vector3d& p, double cell) {
  Eigen::Vector3d q = p / cell;
  int64_t ix = int64_t(std::floor(q.x()));
  int64_t iy = int64_t(std::floor(q.y()));
  int64_t iz = int64_t(std::floor(q.z()));
  double fx = smoothstep(q.x() - double(ix));
  double fy = smoothstep(q.y() - double(iy));
  double fz = smoothstep(q.z() - double(iz));
  double acc = 0.0;
  for (int dz = 0; dz < 2; ++dz)
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) {
        double w = (dx ? fx : 1.0 - fx) * (dy ? fy : 1.0 - fy) *
                   (dz ? fz : 1.0 - fz);
        acc += w * lattice_value(stream, ix + dx, iy + dy, iz + dz);
      }
  return acc;
}

bool ray_sphere(const Eigen::Vector3d& o, const Eigen::Vector3d& d,
                const SpherePrim& s, double& t_out) {
  Eigen::Vector3d oc = o - s.center;
  double a = d.squaredNorm();
  double b = 2.0 * d.dot(oc);
  double c = oc.squaredNorm() - s.radius * s.radius;
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return false;
  double sq = std::sqrt(disc);
  double t0 = (-b - sq) / (2.0 * a);
  double t1 = (-b + sq) / (2.0 * a);
  double t = t0 > kRayEps ? t0 : t1;
  if (t <= kRayEps) return false;
  t_out = t;
  return true;
}

bool ray_box(const Eigen::Vector3d& o, const Eigen::Vector3d& d,
             const BoxPrim& b, double& t_out, Eigen::Vector3d& n_out) {
  double t_near = -std::numeric_limits<double>::infinity();
  double t_far = std::numeric_limits<double>::infinity();
  int near_axis = -1, far_axis = -1;
  double near_sign = 0.0, far_sign = 0.0;
  for (int a = 0; a < 3; ++a) {
    if (std::abs(d[a]) < 1e-15) {
      if (o[a] < b.lo[a] || o[a] > b.hi[a]) return false;
      continue;
    }
    double inv = 1.0 / d[a];
    double t0 = (b.lo[a] - o[a]) * inv;
    double t1 = (b.hi[a] - o[a]) * inv;
    double sgn = -1.0;  // entering through the lo face
    if (t0 > t1) {
      std::swap(t0, t1);
      sgn = 1.0;
    }
    if (t0 > t_near) {
      t_near = t0;
      near_axis = a;
      near_sign = sgn;
    }
    if (t1 < t_far) {
      t_far = t1;
      far_axis = a;
      far_sign = -sgn;
    }
    if (t_near > t_far) return false;
  }
  double t = t_near;
  int axis = near_axis;
  double sign = near_sign;
  if (t <= kRayEps) {  // origin inside the box: exit face
    t = t_far;
    axis = far_axis;
    sign = far_sign;
  }
  if (t <= kRayEps || axis < 0) return false;
  t_out = t;
  n_out = Eigen::Vector3d::Zero();
  n_out[axis] = sign;
  return true;
}

}  // namespace

bool Scene::inside_room(const Eigen::Vector3d& p, double margin) const {
  for (int a = 0; a < 3; ++a)
    if (p[a] < margin || p[a] > room_size[a] - margin) return false;
  return true;
}

bool Scene::near_obstacle(const Eigen::Vector3d& p, double clearance) const {
  for (const auto& s : spheres)
    if ((p - s.center).norm() < s.radius + clearance) return true;
  for (const auto& b : boxes) {
    Eigen::Vector3d c = p.cwiseMax(b.lo).cwiseMin(b.hi);
    if ((p - c).norm() < clearance || (c - p).norm() == 0.0) return true;
  }
  return false;
}

Hit Scene::raycast(const Eigen::Vector3d& origin,
                   const Eigen::Vector3d& dir) const {
  Hit best;
  best.t = std::numeric_limits<double>::infinity();
  int id = 0;
  for (const auto& f : faces) {
    if (std::abs(dir[f.axis]) > 1e-15) {
      double t = (f.offset - origin[f.axis]) / dir[f.axis];
      if (t > kRayEps && t < best.t) {
        Eigen::Vector3d p = origin + t * dir;
        bool inside = true;
        for (int a = 0; a < 3 && inside; ++a) {
          if (a == f.axis) continue;
          inside = p[a] >= -1e-9 && p[a] <= room_size[a] + 1e-9;
        }
        if (inside) {
          best.hit = true;
          best.t = t;
          best.point = p;
          best.normal = Eigen::Vector3d::Zero();
          best.normal[f.axis] = f.sign;
          best.prim_id = id;
        }
      }
    }
    ++id;
  }
  for (const auto& b : boxes) {
    double t;
    Eigen::Vector3d n;
    if (ray_box(origin, dir, b, t, n) && t < best.t) {
      best.hit = true;
      best.t = t;
      best.point = origin + t * dir;
      best.normal = n;
      best.prim_id = id;
    }
    ++id;
  }
  for (const auto& s : spheres) {
    double t;
    if (ray_sphere(origin, dir, s, t) && t < best.t) {
      best.hit = true;
      best.t = t;
      best.point = origin + t * dir;
      best.normal = (best.point - s.center).normalized();
      best.prim_id = id;
    }
    ++id;
  }
  if (!best.hit) best.t = 0.0;
  return best;
}

void Scene::texture(int prim_id, const Eigen::Vector3d& point, int channels,
                    double* out) const {
  double norm_sq = 0.0;
  for (int c = 0; c < channels; ++c) {
    uint64_t stream =
        mix64(texture_seed ^ (uint64_t(prim_id) * 0x9e3779b9u + uint64_t(c)));
    out[c] = value_noise(stream, point, texture_corr);
    norm_sq += out[c] * out[c];
  }
  if (norm_sq < 1e-24) {
    std::fill(out, out + channels, 0.0);
    out[0] = 1.0;
    return;
  }
  double inv = 1.0 / std::sqrt(norm_sq);
  for (int c = 0; c < channels; ++c) out[c] *= inv;
}

double Scene::luminance(int prim_id, const Eigen::Vector3d& point) const {
  // two octaves so that small patches see gradient structure
  uint64_t stream =
      mix64(texture_seed ^ (uint64_t(prim_id) * 0x9e3779b9u + 0x1001u));
  double v = value_noise(stream, point, texture_corr);
  v += 0.5 * value_noise(mix64(stream + 0x51u), point, 0.5 * texture_corr);
  v /= 1.5;
  return std::clamp(127.5 * (1.0 + v), 0.0, 255.0);
}

Scene make_room(const Eigen::Vector3d& size, uint64_t texture_seed,
                double texture_corr) {
  Scene s;
  s.room_size = size;
  s.texture_seed = texture_seed;
  s.texture_corr = texture_corr;
  s.faces = {
      {0, 0.0, +1.0},        // x = 0 wall
      {0, size.x(), -1.0},   // x = Lx wall
      {1, 0.0, +1.0},        // floor
      {1, size.y(), -1.0},   // ceiling
      {2, size.z(), -1.0},   // far wall; z = 0 side is open
  };
  return s;
}

}  // namespace mvs
