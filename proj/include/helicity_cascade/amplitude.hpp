// Copyright 2026 helicity-cascade developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "helicity_cascade/dirac.hpp"
#include "helicity_cascade/errors.hpp"
#include "helicity_cascade/four_vector.hpp"

namespace hcas {

// Tree-level one-photon-exchange amplitude between two distinguishable
// spin-1/2 particles. Conventions:
//   - line 1 -> 3 is the target (mass m_target), line 2 -> 4 the projectile;
//   - coupling defaults to 1 and the propagator is taken in Feynman gauge
//     (normalized density matrices cancel all multiplicative constants);
//   - an optional gauge_xi adds xi * q^mu q^nu / q^2 to the propagator
//     numerator, which must not change the result for conserved currents.

namespace detail {

inline void require_on_shell(const FourMomentum& p, double m, const char* name) {
  if (on_shell_residual(p, m) > 1e-8) {
    throw OffShellInput(std::string("amplitude input ") + name +
                        " violates the mass-shell condition");
  }
  if (!(p.e > 0.0)) {
    throw OffShellInput(std::string("amplitude input ") + name +
                        " has non-positive energy");
  }
}

inline void require_conservation(const FourMomentum& p1, const FourMomentum& p2,
                                 const FourMomentum& p3, const FourMomentum& p4) {
  const FourMomentum r = (p1 + p2) - (p3 + p4);
  const double scale = p1.e + p2.e;
  const double residual =
      std::max(std::max(std::abs(r.e), std::abs(r.px)),
               std::max(std::abs(r.py), std::abs(r.pz)));
  if (residual > 1e-8 * scale) {
    throw OffShellInput("amplitude inputs violate four-momentum conservation");
  }
}

}  // namespace detail

/// M(p3,h3; p4,h4 | p1,h1; p2,h2) for the t-channel photon exchange,
/// t = (p1 - p3)^2. Throws SingularKinematics at |t| < 1e-12 MeV^2.
inline Complex t_channel_amplitude(const FourMomentum& p1, int h1,
                                   const FourMomentum& p2, int h2,
                                   const FourMomentum& p3, int h3,
                                   const FourMomentum& p4, int h4,
                                   double m_target, double m_projectile,
                                   double coupling = 1.0, double gauge_xi = 0.0) {
  detail::require_on_shell(p1, m_target, "p1");
  detail::require_on_shell(p3, m_target, "p3");
  detail::require_on_shell(p2, m_projectile, "p2");
  detail::require_on_shell(p4, m_projectile, "p4");
  detail::require_conservation(p1, p2, p3, p4);

  const FourMomentum q = p1 - p3;
  const double t = minkowski_dot(q, q);
  if (std::abs(t) < 1e-12) {
    throw SingularKinematics("amplitude at the forward pole t = 0");
  }

  const DiracSpinor u1 = helicity_spinor(p1, m_target, h1);
  const DiracSpinor u3 = helicity_spinor(p3, m_target, h3);
  const DiracSpinor u2 = helicity_spinor(p2, m_projectile, h2);
  const DiracSpinor u4 = helicity_spinor(p4, m_projectile, h4);

  const auto j_target = current(u3, u1);
  const auto j_proj = current(u4, u2);

  Complex contracted = j_target[0] * j_proj[0] - j_target[1] * j_proj[1] -
                       j_target[2] * j_proj[2] - j_target[3] * j_proj[3];
  if (gauge_xi != 0.0) {
    contracted += gauge_xi * contract(q, j_target) * contract(q, j_proj) / t;
  }
  return coupling * coupling * contracted / t;
}

/// All 16 helicity amplitudes of one collision at fixed kinematics.
struct HelicityAmplitudeTable {
  std::array<Complex, 16> entries{};
  FourMomentum p1, p2, p3, p4;
  double m_target = 0.0;
  double m_projectile = 0.0;

  static int bit(int h) { return h > 0 ? 0 : 1; }

  static int index(int h3, int h4, int h1, int h2) {
    return (bit(h3) << 3) | (bit(h4) << 2) | (bit(h1) << 1) | bit(h2);
  }

  /// Entry M(h3, h4 | h1, h2); target-line helicities h1 -> h3.
  const Complex& operator()(int h3, int h4, int h1, int h2) const {
    return entries[static_cast<std::size_t>(index(h3, h4, h1, h2))];
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& a : entries) {
      m = std::max(m, std::abs(a));
    }
    return m;
  }

  double sum_abs_sq() const {
    double s = 0.0;
    for (const auto& a : entries) {
      s += std::norm(a);
    }
    return s;
  }
};

inline HelicityAmplitudeTable amplitude_table(const FourMomentum& p1,
                                              const FourMomentum& p2,
                                              const FourMomentum& p3,
                                              const FourMomentum& p4,
                                              double m_target,
                                              double m_projectile) {
  HelicityAmplitudeTable table;
  table.p1 = p1;
  table.p2 = p2;
  table.p3 = p3;
  table.p4 = p4;
  table.m_target = m_target;
  table.m_projectile = m_projectile;
  constexpr std::array<int, 2> hs = {+1, -1};
  for (int h3 : hs) {
    for (int h4 : hs) {
      for (int h1 : hs) {
        for (int h2 : hs) {
          table.entries[static_cast<std::size_t>(
              HelicityAmplitudeTable::index(h3, h4, h1, h2))] =
              t_channel_amplitude(p1, h1, p2, h2, p3, h3, p4, h4, m_target,
                                  m_projectile);
        }
      }
    }
  }
  return table;
}

/// Unpolarized spin sum via trace identities, evaluated with explicit 4x4
/// matrix products and never through the spinor table:
///   sum_spins |M|^2 = (1/t^2) Tr[(p3+M) g^mu (p1+M) g^nu]
///                            Tr[(p4+m) g_mu (p2+m) g_nu].
inline double unpolarized_oracle(const FourMomentum& p1, const FourMomentum& p2,
                                 const FourMomentum& p3, const FourMomentum& p4,
                                 double m_target, double m_projectile) {
  detail::require_on_shell(p1, m_target, "p1");
  detail::require_on_shell(p3, m_target, "p3");
  detail::require_on_shell(p2, m_projectile, "p2");
  detail::require_on_shell(p4, m_projectile, "p4");
  detail::require_conservation(p1, p2, p3, p4);

  const FourMomentum q = p1 - p3;
  const double t = minkowski_dot(q, q);
  if (std::abs(t) < 1e-12) {
    throw SingularKinematics("spin sum at the forward pole t = 0");
  }

  const auto& g = chiral_gammas();
  const Matrix4c target_in = feynman_slash(p1) + m_target * Matrix4c::Identity();
  const Matrix4c target_out = feynman_slash(p3) + m_target * Matrix4c::Identity();
  const Matrix4c proj_in = feynman_slash(p2) + m_projectile * Matrix4c::Identity();
  const Matrix4c proj_out = feynman_slash(p4) + m_projectile * Matrix4c::Identity();

  Complex total = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Complex t1 =
          (g.gamma[mu] * target_in * g.gamma[nu] * target_out).trace();
      const Complex t2 = (g.gamma[mu] * proj_in * g.gamma[nu] * proj_out).trace();
      total += metric_sign[mu] * metric_sign[nu] * t1 * t2;
    }
  }
  return total.real() / (t * t);
}

}  // namespace hcas
