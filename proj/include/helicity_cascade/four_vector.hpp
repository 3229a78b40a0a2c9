// Copyright 2026 helicity-cascade developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

#include "helicity_cascade/errors.hpp"

namespace hcas {

using Vec3 = std::array<double, 3>;

/// Energy-momentum four-vector in MeV, metric (+,-,-,-).
struct FourMomentum {
  double e = 0.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  Vec3 spatial() const { return {px, py, pz}; }
};

inline FourMomentum operator+(const FourMomentum& a, const FourMomentum& b) {
  return {a.e + b.e, a.px + b.px, a.py + b.py, a.pz + b.pz};
}

inline FourMomentum operator-(const FourMomentum& a, const FourMomentum& b) {
  return {a.e - b.e, a.px - b.px, a.py - b.py, a.pz - b.pz};
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Minkowski product a·b = a⁰b⁰ − a⃗·b⃗.
inline double minkowski_dot(const FourMomentum& a, const FourMomentum& b) {
  return a.e * b.e - a.px * b.px - a.py * b.py - a.pz * b.pz;
}

inline double invariant_mass_sq(const FourMomentum& p) {
  return minkowski_dot(p, p);
}

inline double three_norm(const FourMomentum& p) { return norm(p.spatial()); }

/// E = sqrt(|p3|^2 + m^2). Total function for m >= 0.
inline double on_shell_energy(const Vec3& p3, double m) {
  return std::sqrt(dot(p3, p3) + m * m);
}

/// Lift a three-momentum onto the mass shell.
inline FourMomentum from_three(const Vec3& p3, double m) {
  return {on_shell_energy(p3, m), p3[0], p3[1], p3[2]};
}

struct PolarAngles {
  double theta;  // [0, pi]
  double phi;    // [0, 2*pi)
};

/// Spherical angles of the three-momentum. Throws ZeroMomentum below 1e-14 MeV;
/// callers fall back to the rest-frame convention (theta = phi = 0) there.
inline PolarAngles polar_of(const FourMomentum& p) {
  const double pm = three_norm(p);
  if (pm < 1e-14) {
    throw ZeroMomentum("polar_of: |p| below 1e-14 MeV, direction undefined");
  }
  const double pt = std::hypot(p.px, p.py);
  const double theta = std::atan2(pt, p.pz);
  double phi = std::atan2(p.py, p.px);
  if (phi < 0.0) {
    phi += 2.0 * M_PI;
  }
  if (phi >= 2.0 * M_PI) {
    phi = 0.0;
  }
  return {theta, phi};
}

/// Relative residual of the on-shell condition E^2 - |p|^2 = m^2.
inline double on_shell_residual(const FourMomentum& p, double m) {
  const double lhs = p.e * p.e - dot(p.spatial(), p.spatial());
  const double scale = p.e * p.e + m * m;
  return std::abs(lhs - m * m) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace hcas
