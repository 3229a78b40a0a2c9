// Copyright 2026 helicity-cascade developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helicity_cascade/errors.hpp"
#include "helicity_cascade/four_vector.hpp"

namespace hcas {

/// Default particle masses in MeV.
inline constexpr double electron_mass = 0.510999;
inline constexpr double proton_mass = 938.272;

/// Outgoing-projectile direction for one scattering.
struct ScatterAngles {
  double theta;  // [0, pi]
  double phi;    // [0, 2*pi)
};

/// One (theta, phi) pair per scattering; phi of the first collision is fixed
/// to zero by the azimuthal gauge freedom of the setup.
struct ScatterGeometry {
  std::vector<ScatterAngles> angles;

  std::size_t size() const { return angles.size(); }

  void validate() const {
    if (angles.empty()) {
      throw std::invalid_argument("ScatterGeometry: at least one scattering required");
    }
    if (std::abs(angles.front().phi) > 1e-14) {
      throw std::invalid_argument("ScatterGeometry: phi of the first scattering must be 0");
    }
    for (const auto& a : angles) {
      if (!(a.theta >= 0.0 && a.theta <= M_PI)) {
        throw std::invalid_argument("ScatterGeometry: theta outside [0, pi]");
      }
      if (!(a.phi >= 0.0 && a.phi < 2.0 * M_PI)) {
        throw std::invalid_argument("ScatterGeometry: phi outside [0, 2*pi)");
      }
    }
  }
};

inline Vec3 unit_direction(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

/// In/out momenta of a single two-body collision.
struct ScatterStep {
  FourMomentum k_in;   // projectile in (mass m)
  FourMomentum k_out;  // projectile out
  FourMomentum p_in;   // target in (mass M)
  FourMomentum p_out;  // target out
};

/// Full kinematic record of a chain of collisions off the same target.
struct CascadeKinematics {
  std::vector<ScatterStep> steps;
  double m = electron_mass;  // projectile mass
  double M = proton_mass;    // target mass
};

namespace detail {

// Coefficients of sqrt(k^2 + m^2) = a + b*k, obtained from four-momentum
// conservation projected onto the outgoing direction e(theta, phi).
struct RootCoefficients {
  double a;
  double b;
};

inline RootCoefficients root_coefficients(const FourMomentum& k_in,
                                          const FourMomentum& p_in, double m,
                                          double M, const Vec3& e) {
  const double sum_e = k_in.e + p_in.e;
  const Vec3 pp = p_in.spatial();
  const Vec3 total = {pp[0] + k_in.px, pp[1] + k_in.py, pp[2] + k_in.pz};
  const double a = p_in.e - (M * M - m * m + dot(pp, total)) / sum_e;
  const double b = dot(e, total) / sum_e;
  return {a, b};
}

inline bool root_is_valid(double k, double a, double b, double m) {
  if (k < 0.0) {
    return false;
  }
  const double lhs = std::sqrt(k * k + m * m);
  const double rhs = a + b * k;
  const double tol = 1e-6 * (std::abs(a) + std::abs(b) * k + m + 1.0);
  return std::abs(lhs - rhs) <= tol;
}

}  // namespace detail

/// Magnitude of the outgoing projectile momentum for a collision with incoming
/// projectile k_in (mass m) and target p_in (mass M), with the projectile
/// deflected into direction (theta, phi).
///
/// Solves sqrt(k^2 + m^2) = a + b*k. Squaring introduces sign-spurious roots,
/// so every candidate is substituted back into the unsquared equation. A root
/// that lands within 1e-10 * max(1, a) of zero is snapped to exactly zero
/// (total momentum transfer, e.g. an equal-mass head-on collision).
inline double outgoing_projectile_magnitude(const FourMomentum& k_in,
                                            const FourMomentum& p_in, double m,
                                            double M, double theta, double phi,
                                            std::size_t scatter_index =
                                                KinematicallyForbidden::no_index) {
  const Vec3 e = unit_direction(theta, phi);
  const auto [a, b] = detail::root_coefficients(k_in, p_in, m, M, e);
  const double bsq_minus_1 = b * b - 1.0;

  std::vector<double> candidates;
  if (std::abs(bsq_minus_1) < 1e-12) {
    // Degenerate quadratic: the squared equation is linear in k.
    if (std::abs(a * b) < 1e-300) {
      throw KinematicallyForbidden("degenerate kinematics with a*b = 0",
                                   scatter_index);
    }
    candidates.push_back((a * a - m * m) / (2.0 * a * b));
  } else {
    const double disc = a * a + m * m * bsq_minus_1;
    if (disc < 0.0) {
      throw KinematicallyForbidden(
          "scattering angle outside the allowed cone (negative discriminant)",
          scatter_index);
    }
    const double sq = std::sqrt(disc);
    candidates.push_back((a * b + sq) / (-bsq_minus_1));
    candidates.push_back((a * b - sq) / (-bsq_minus_1));
  }

  const double snap_tol = 1e-10 * std::max(1.0, std::abs(a));
  double positive_root = -1.0;
  int n_positive = 0;
  bool zero_valid = false;
  for (double k : candidates) {
    if (std::abs(k) < snap_tol) {
      k = 0.0;
    }
    if (!detail::root_is_valid(k, a, b, m)) {
      continue;
    }
    if (k == 0.0) {
      zero_valid = true;
    } else {
      ++n_positive;
      positive_root = k;
    }
  }

  if (n_positive == 1) {
    return positive_root;
  }
  if (n_positive > 1) {
    // Two admissible branches (projectile heavier than target): the angle does
    // not determine the final state.
    throw KinematicallyForbidden("ambiguous kinematics: two positive roots",
                                 scatter_index);
  }
  if (zero_valid) {
    return 0.0;
  }
  throw KinematicallyForbidden("no admissible root for the requested angle",
                               scatter_index);
}

/// Outgoing (projectile, target) momenta; the target follows from
/// three-momentum conservation and stays on shell by construction of the root.
inline std::pair<FourMomentum, FourMomentum> solve_scattering(
    const FourMomentum& k_in, const FourMomentum& p_in, double m, double M,
    double theta, double phi,
    std::size_t scatter_index = KinematicallyForbidden::no_index) {
  const double k =
      outgoing_projectile_magnitude(k_in, p_in, m, M, theta, phi, scatter_index);
  const Vec3 e = unit_direction(theta, phi);
  const FourMomentum k_out = from_three({k * e[0], k * e[1], k * e[2]}, m);
  const FourMomentum p_out = k_in + p_in - k_out;
  return {k_out, p_out};
}

/// Chain of collisions: a fresh beam particle (momentum p along +z, mass m)
/// hits the same target in every step; the target starts at rest with mass M.
inline CascadeKinematics build_cascade(double p, double m, double M,
                                       const ScatterGeometry& geometry) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("build_cascade: beam momentum must be positive");
  }
  geometry.validate();

  CascadeKinematics kin;
  kin.m = m;
  kin.M = M;
  const FourMomentum beam = from_three({0.0, 0.0, p}, m);
  FourMomentum target = {M, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < geometry.size(); ++i) {
    const auto& ang = geometry.angles[i];
    auto [k_out, p_out] = solve_scattering(beam, target, m, M, ang.theta, ang.phi, i);
    kin.steps.push_back({beam, k_out, target, p_out});
    target = p_out;
  }
  return kin;
}

/// Closed form for the first collision off a target at rest (phi = 0).
/// Equals the general root construction; kept as an algebraic cross-check.
inline double first_scatter_magnitude(double p, double m, double M,
                                      double theta) {
  const double E = std::sqrt(p * p + m * m);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double under = M * M - m * m * st * st;
  if (under < 0.0) {
    throw KinematicallyForbidden("angle outside the allowed cone");
  }
  const double num = (m * m + M * E) * ct + (M + E) * std::sqrt(under);
  const double den = (M + E) * (M + E) - p * p * ct * ct;
  return p * num / den;
}

}  // namespace hcas
