// Copyright 2026 helicity-cascade developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "helicity_cascade/errors.hpp"
#include "helicity_cascade/four_vector.hpp"

namespace hcas {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

/// Metric signs (+,-,-,-) used to raise/lower a single Lorentz index.
inline constexpr std::array<double, 4> metric_sign = {1.0, -1.0, -1.0, -1.0};

/// Gamma matrices in the chiral (Weyl) representation.
struct GammaSet {
  std::array<Matrix4c, 4> gamma;
  Matrix4c gamma5;
};

inline const GammaSet& chiral_gammas() {
  static const GammaSet g = [] {
    GammaSet set;
    const Complex i(0.0, 1.0);
    Matrix4c g0 = Matrix4c::Zero(), g1 = Matrix4c::Zero(), g2 = Matrix4c::Zero(),
             g3 = Matrix4c::Zero();
    // gamma^0 = [[0, I], [I, 0]], gamma^i = [[0, sigma_i], [-sigma_i, 0]]
    g0(0, 2) = g0(1, 3) = g0(2, 0) = g0(3, 1) = 1.0;
    g1(0, 3) = g1(1, 2) = 1.0;
    g1(2, 1) = g1(3, 0) = -1.0;
    g2(0, 3) = -i;
    g2(1, 2) = i;
    g2(2, 1) = -i;
    g2(3, 0) = i;
    g3(0, 2) = 1.0;
    g3(1, 3) = -1.0;
    g3(2, 0) = -1.0;
    g3(3, 1) = 1.0;
    set.gamma = {g0, g1, g2, g3};
    set.gamma5 = i * g0 * g1 * g2 * g3;
    return set;
  }();
  return g;
}

/// Feynman slash: p_mu gamma^mu.
inline Matrix4c feynman_slash(const FourMomentum& p) {
  const auto& g = chiral_gammas();
  return p.e * g.gamma[0] - p.px * g.gamma[1] - p.py * g.gamma[2] -
         p.pz * g.gamma[3];
}

/// Positive-energy helicity spinor u_h(p), normalized to u†u = 2E.
struct DiracSpinor {
  Vector4c components;
  int helicity = +1;  // +1 or -1
  FourMomentum momentum;
  double mass = 0.0;
};

namespace detail {

inline Eigen::Vector2cd pauli_helicity_eigenvector(int h, double theta,
                                                   double phi) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  if (h > 0) {
    return {Complex(c), std::exp(i * phi) * s};
  }
  return {-std::exp(-i * phi) * s, Complex(c)};
}

}  // namespace detail

/// Helicity-basis spinor in the chiral representation: the upper (left) Weyl
/// block carries sqrt(E - h|p|), the lower sqrt(E + h|p|). A particle at rest
/// uses the theta = phi = 0 spin-z basis.
inline DiracSpinor helicity_spinor(const FourMomentum& p, double m, int h) {
  const double pm = three_norm(p);
  double theta = 0.0, phi = 0.0;
  if (pm >= 1e-14) {
    const auto ang = polar_of(p);
    theta = ang.theta;
    phi = ang.phi;
  }
  const Eigen::Vector2cd chi = detail::pauli_helicity_eigenvector(h, theta, phi);
  const double w_upper = std::sqrt(std::max(p.e - h * pm, 0.0));
  const double w_lower = std::sqrt(std::max(p.e + h * pm, 0.0));

  DiracSpinor u;
  u.components << w_upper * chi(0), w_upper * chi(1), w_lower * chi(0),
      w_lower * chi(1);
  u.helicity = h;
  u.momentum = p;
  u.mass = m;
  return u;
}

/// Dirac adjoint u-bar = u† gamma^0.
inline Eigen::RowVector4cd adjoint(const DiracSpinor& u) {
  return u.components.adjoint() * chiral_gammas().gamma[0];
}

/// Vector current j^mu = u-bar_out gamma^mu u_in.
inline std::array<Complex, 4> current(const DiracSpinor& u_out,
                                      const DiracSpinor& u_in) {
  const auto& g = chiral_gammas();
  const Eigen::RowVector4cd bar = adjoint(u_out);
  std::array<Complex, 4> j;
  for (int mu = 0; mu < 4; ++mu) {
    j[mu] = bar * (g.gamma[mu] * u_in.components);
  }
  return j;
}

/// Minkowski contraction of a four-vector with a current.
inline Complex contract(const FourMomentum& q, const std::array<Complex, 4>& j) {
  return q.e * j[0] - q.px * j[1] - q.py * j[2] - q.pz * j[3];
}

}  // namespace hcas
