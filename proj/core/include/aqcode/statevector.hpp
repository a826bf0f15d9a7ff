// Copyright 2026 The aqcode Authors
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

#include <complex>
#include <cstdint>
#include <vector>

#include "aqcode/hamiltonian.hpp"
#include "aqcode/pauli.hpp"

namespace aqcode {

using Complex = std::complex<double>;

/// Dense amplitude vector over 2^n basis states, qubit q <-> bit q of the
/// basis index. Desk-scale guard: n <= 14.
class StateVector {
 public:
  static constexpr std::size_t kMaxQubits = 14;

  StateVector() = default;
  explicit StateVector(std::size_t n);  // |0...0>
  static StateVector basis_state(std::size_t n, std::uint64_t index);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  Complex amplitude(std::uint64_t index) const { return amps_[index]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }

  double norm() const;
  void normalize();

  /// <this|other>.
  Complex inner_product(const StateVector& other) const;
  /// |<this|other>|^2.
  double overlap(const StateVector& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> amps_;
};

/// P|psi> via the signed-permutation action of a Pauli; exact.
StateVector apply_pauli(const PauliString& p, const StateVector& psi);

/// <psi|P|psi>.
Complex pauli_expectation(const PauliString& p, const StateVector& psi);

struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> a;  // row-major

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t d) : dim(d), a(d * d, Complex{0.0, 0.0}) {}
  Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

/// Sum of coeff * (Pauli tensor product) as a dense Hermitian matrix.
DenseMatrix dense_matrix(const PauliHamiltonian& h);

/// Spectral decomposition of a Hermitian Pauli sum; reusable exact
/// propagator exp(-iHt) for arbitrary t.
class Propagator {
 public:
  explicit Propagator(const PauliHamiltonian& h);

  StateVector evolve(const StateVector& psi, double t) const;

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  double spectral_norm() const;
  double ground_energy() const { return eigenvalues_.front(); }

  /// Squared projection of psi onto the eigenspace within degeneracy_tol of
  /// the lowest eigenvalue.
  double ground_overlap(const StateVector& psi, double degeneracy_tol = 1e-9) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> eigenvalues_;        // ascending
  std::vector<Complex> eigenvectors_;      // column-major, dim_ x dim_
};

/// One-shot exp(-iHt)|psi>; norm is preserved to 1e-9.
StateVector evolve(const StateVector& psi, const PauliHamiltonian& h, double t);

}  // namespace aqcode
