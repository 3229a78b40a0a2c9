// Copyright 2026 helicity-cascade developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcas {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested scattering angle lies outside the kinematically allowed
/// region (negative discriminant or no admissible root).
class KinematicallyForbidden : public Error {
 public:
  static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

  explicit KinematicallyForbidden(const std::string& what,
                                  std::size_t scatter_index = no_index)
      : Error(what), scatter_index_(scatter_index) {}

  /// Zero-based index of the scattering at which the failure occurred,
  /// or no_index when raised outside a cascade.
  std::size_t scatter_index() const { return scatter_index_; }

 private:
  std::size_t scatter_index_;
};

/// Exactly forward kinematics: the photon propagator pole t = 0.
class SingularKinematics : public Error {
 public:
  static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

  explicit SingularKinematics(const std::string& what,
                              std::size_t scatter_index = no_index)
      : Error(what), scatter_index_(scatter_index) {}

  std::size_t scatter_index() const { return scatter_index_; }

 private:
  std::size_t scatter_index_;
};

class OffShellInput : public Error {
 public:
  using Error::Error;
};

class ZeroMomentum : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class MixedState : public Error {
 public:
  using Error::Error;
};

class NullState : public Error {
 public:
  using Error::Error;
};

class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

class NoInteriorMaximum : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario configuration (CLI or config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcas
