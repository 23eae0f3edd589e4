// Copyright 2026 The phasent developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <doctest.h>

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <vector>

#include "phasent/core.hpp"
#include "phasent/random.hpp"
#include "phasent/transform.hpp"

// Shared generators and reference oracles. The oracles are deliberately
// written as plain loops so they stay independent of the library paths
// they are used to check.
namespace testsupport {

using phasent::Complex;
using phasent::DenseMatrix;
using phasent::PhaseProfile;
using phasent::SplitMix64;
using phasent::StateVector;

inline PhaseProfile random_profile(int num_qubits, SplitMix64& rng) {
  std::vector<double> phi(phasent::dimension(num_qubits));
  for (double& p : phi) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return PhaseProfile(num_qubits, std::move(phi));
}

inline std::vector<Complex> random_unit_phases(std::size_t n, SplitMix64& rng) {
  std::vector<Complex> values(n);
  for (Complex& v : values) {
    v = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return values;
}

inline std::vector<Complex> random_amplitudes(std::size_t n, SplitMix64& rng) {
  std::vector<Complex> values(n);
  for (Complex& v : values) {
    v = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  return values;
}

inline StateVector random_state(int num_qubits, SplitMix64& rng) {
  return StateVector(num_qubits, random_amplitudes(phasent::dimension(num_qubits), rng));
}

inline StateVector random_single_qubit_state(SplitMix64& rng) {
  std::vector<Complex> amps;
  do {
    amps = random_amplitudes(2, rng);
  } while (std::abs(amps[0]) + std::abs(amps[1]) < 0.2);
  return StateVector(1, std::move(amps));
}

inline StateVector random_product_state(int num_qubits, SplitMix64& rng) {
  StateVector state = random_single_qubit_state(rng);
  for (int q = 1; q < num_qubits; ++q) {
    state = kron(state, random_single_qubit_state(rng));
  }
  return state;
}

inline double state_max_diff(const StateVector& a, const StateVector& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

// Reference product: plain triple loop.
inline DenseMatrix naive_product(const DenseMatrix& a, const DenseMatrix& b) {
  REQUIRE(a.dim() == b.dim());
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        sum += a(i, k) * b(k, j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

// Reference transform: g(y) = sum_x K(x, y) f(x), summed exactly as written.
inline StateVector direct_transform(const DenseMatrix& kernel, const StateVector& f) {
  REQUIRE(kernel.dim() == f.size());
  std::vector<Complex> out(f.size());
  for (std::size_t y = 0; y < f.size(); ++y) {
    Complex sum(0.0, 0.0);
    for (std::size_t x = 0; x < f.size(); ++x) {
      sum += kernel(x, y) * f[x];
    }
    out[y] = sum;
  }
  return StateVector(f.num_qubits(), std::move(out));
}

inline DenseMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
  Eigen::MatrixXcd seed_matrix(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      seed_matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(seed_matrix);
  return DenseMatrix(Eigen::MatrixXcd(qr.householderQ()));
}

}  // namespace testsupport
