// Copyright 2026 helicity-cascade developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "helicity_cascade/errors.hpp"

namespace hcas {

/// Density matrix over a register of labeled qubits (first label = most
/// significant bit of the computational index).
class DensityMatrix {
 public:
  DensityMatrix(Eigen::MatrixXcd entries, std::vector<std::string> labels)
      : entries_(std::move(entries)), labels_(std::move(labels)) {
    const auto dim = static_cast<std::size_t>(entries_.rows());
    if (entries_.rows() != entries_.cols()) {
      throw WrongDimension("density matrix must be square");
    }
    if (dim != (std::size_t{1} << labels_.size())) {
      throw WrongDimension("density matrix dimension must be 2^(#labels)");
    }
  }

  const Eigen::MatrixXcd& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t num_qubits() const { return labels_.size(); }

  std::size_t label_position(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) {
        return i;
      }
    }
    throw UnknownLabel("unknown subsystem label: " + label);
  }

  /// Largest deviation from hermiticity (absolute).
  double hermiticity_residual() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  }

  double trace_real() const { return entries_.trace().real(); }

  /// Smallest eigenvalue (Hermitian part); diagnostic for positivity.
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (entries_ + entries_.adjoint()));
    return es.eigenvalues().minCoeff();
  }

 private:
  Eigen::MatrixXcd entries_;
  std::vector<std::string> labels_;
};

/// Tr rho^2.
inline double purity(const DensityMatrix& rho) {
  return (rho.entries() * rho.entries()).trace().real();
}

/// Reduce onto the subsystems in `keep` (original register order preserved).
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw UnknownLabel("partial_trace: keep set must be non-empty");
  }
  const std::size_t n = rho.num_qubits();
  std::vector<bool> keep_mask(n, false);
  for (const auto& label : keep) {
    keep_mask[rho.label_position(label)] = true;
  }

  std::vector<std::size_t> kept, traced;
  std::vector<std::string> kept_labels;
  for (std::size_t q = 0; q < n; ++q) {
    if (keep_mask[q]) {
      kept.push_back(q);
      kept_labels.push_back(rho.labels()[q]);
    } else {
      traced.push_back(q);
    }
  }

  // Qubit q occupies bit (n - 1 - q) of the computational index.
  auto compose = [n](const std::vector<std::size_t>& qubits, std::size_t bits) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      const std::size_t bit = (bits >> (qubits.size() - 1 - i)) & 1u;
      idx |= bit << (n - 1 - qubits[i]);
    }
    return idx;
  };

  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t s = 0; s < dt; ++s) {
        const std::size_t row = compose(kept, i) | compose(traced, s);
        const std::size_t col = compose(kept, j) | compose(traced, s);
        acc += rho.entries()(static_cast<Eigen::Index>(row),
                             static_cast<Eigen::Index>(col));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_labels));
}

}  // namespace hcas
