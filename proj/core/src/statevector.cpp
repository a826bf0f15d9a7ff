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

#include "aqcode/statevector.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Dense>

#include "aqcode/errors.hpp"

namespace aqcode {

namespace {

void check_qubit_guard(std::size_t n) {
  if (n > StateVector::kMaxQubits) {
    throw ResourceError("dense simulation guard: " + std::to_string(n) + " qubits exceeds " +
                        std::to_string(StateVector::kMaxQubits));
  }
}

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
  check_qubit_guard(n);
  amps_.assign(std::size_t{1} << n, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::basis_state(std::size_t n, std::uint64_t index) {
  StateVector s(n);
  s.amps_[0] = Complex{0.0, 0.0};
  s.amps_[index] = Complex{1.0, 0.0};
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw ParameterError("cannot normalize the zero vector");
  for (Complex& a : amps_) a /= nrm;
}

Complex StateVector::inner_product(const StateVector& other) const {
  if (n_ != other.n_) throw DimensionError("state vectors differ in qubit count");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

double StateVector::overlap(const StateVector& other) const {
  return std::norm(inner_product(other));
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  if (p.num_qubits() != psi.num_qubits()) {
    throw DimensionError("Pauli and state differ in qubit count");
  }
  const std::uint64_t x_mask = p.x_bits().words().empty() ? 0 : p.x_bits().words()[0];
  const std::uint64_t z_mask = p.z_bits().words().empty() ? 0 : p.z_bits().words()[0];
  const Complex front = kPhases[p.phase() & 3];

  StateVector out = psi;
  auto& dst = out.amplitudes();
  const auto& src = psi.amplitudes();
  // X^x Z^z |b> = (-1)^{|z & b|} |b ^ x>.
  for (std::uint64_t b = 0; b < src.size(); ++b) {
    const bool minus = std::popcount(b & z_mask) & 1;
    dst[b ^ x_mask] = (minus ? -front : front) * src[b];
  }
  return out;
}

Complex pauli_expectation(const PauliString& p, const StateVector& psi) {
  return psi.inner_product(apply_pauli(p, psi));
}

DenseMatrix dense_matrix(const PauliHamiltonian& h) {
  check_qubit_guard(h.num_qubits());
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  DenseMatrix m(dim);
  for (const PauliTerm& t : h.terms()) {
    const std::uint64_t x_mask = t.op.x_bits().words().empty() ? 0 : t.op.x_bits().words()[0];
    const std::uint64_t z_mask = t.op.z_bits().words().empty() ? 0 : t.op.z_bits().words()[0];
    const Complex front = t.coeff * kPhases[t.op.phase() & 3];
    for (std::uint64_t b = 0; b < dim; ++b) {
      const bool minus = std::popcount(b & z_mask) & 1;
      m.at(b ^ x_mask, b) += minus ? -front : front;
    }
  }
  return m;
}

Propagator::Propagator(const PauliHamiltonian& h) {
  const DenseMatrix m = dense_matrix(h);
  dim_ = m.dim;
  Eigen::MatrixXcd em(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) em(r, c) = m.at(r, c);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed");
  }
  eigenvalues_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + dim_);
  eigenvectors_.resize(dim_ * dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r < dim_; ++r) eigenvectors_[c * dim_ + r] = solver.eigenvectors()(r, c);
  }
}

StateVector Propagator::evolve(const StateVector& psi, double t) const {
  if (psi.dim() != dim_) throw DimensionError("state dimension does not match propagator");
  // V diag(exp(-i lambda t)) V^dagger psi.
  std::vector<Complex> coeffs(dim_, Complex{0.0, 0.0});
  for (std::size_t c = 0; c < dim_; ++c) {
    Complex acc{0.0, 0.0};
    const Complex* col = &eigenvectors_[c * dim_];
    for (std::size_t r = 0; r < dim_; ++r) acc += std::conj(col[r]) * psi.amplitude(r);
    coeffs[c] = acc * std::exp(Complex{0.0, -eigenvalues_[c] * t});
  }
  StateVector out = psi;
  auto& dst = out.amplitudes();
  std::fill(dst.begin(), dst.end(), Complex{0.0, 0.0});
  for (std::size_t c = 0; c < dim_; ++c) {
    const Complex* col = &eigenvectors_[c * dim_];
    for (std::size_t r = 0; r < dim_; ++r) dst[r] += coeffs[c] * col[r];
  }
  return out;
}

double Propagator::spectral_norm() const {
  return std::max(std::abs(eigenvalues_.front()), std::abs(eigenvalues_.back()));
}

double Propagator::ground_overlap(const StateVector& psi, double degeneracy_tol) const {
  if (psi.dim() != dim_) throw DimensionError("state dimension does not match propagator");
  double total = 0.0;
  for (std::size_t c = 0; c < dim_ && eigenvalues_[c] <= eigenvalues_.front() + degeneracy_tol; ++c) {
    Complex acc{0.0, 0.0};
    const Complex* col = &eigenvectors_[c * dim_];
    for (std::size_t r = 0; r < dim_; ++r) acc += std::conj(col[r]) * psi.amplitude(r);
    total += std::norm(acc);
  }
  return total;
}

StateVector evolve(const StateVector& psi, const PauliHamiltonian& h, double t) {
  if (h.num_qubits() != psi.num_qubits()) {
    throw DimensionError("Hamiltonian and state differ in qubit count");
  }
  return Propagator(h).evolve(psi, t);
}

}  // namespace aqcode
