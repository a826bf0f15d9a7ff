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

#include <functional>
#include <utility>
#include <vector>

#include "aqcode/code.hpp"
#include "aqcode/pauli.hpp"

namespace aqcode {

struct PauliTerm {
  double coeff = 0.0;
  PauliString op;
};

/// A real-weighted sum of Pauli operators. Terms are kept Hermitian: adding a
/// term folds the operator phase into the coefficient (i^2 = -1) and rejects
/// odd leftover phases. canonicalized() merges duplicates, drops zero
/// coefficients and sorts terms into the deterministic bit-pattern order.
class PauliHamiltonian {
 public:
  PauliHamiltonian() = default;
  explicit PauliHamiltonian(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Accumulates coeff * op. The coefficient must be finite; op must act on
  /// num_qubits() qubits and be Hermitian up to a sign.
  void add_term(double coeff, const PauliString& op);

  PauliHamiltonian canonicalized() const;

  PauliHamiltonian scaled(double factor) const;
  PauliHamiltonian& operator+=(const PauliHamiltonian& o);
  friend PauliHamiltonian operator+(PauliHamiltonian a, const PauliHamiltonian& b) {
    return a += b;
  }
  friend PauliHamiltonian operator*(double f, const PauliHamiltonian& h) { return h.scaled(f); }

 private:
  std::size_t n_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Maps a 2-local logical Hamiltonian through the triple layout:
///   X_i -> X_(i,x) X_(i,0)      Z_i -> Z_(i,0) Z_(i,z)
///   X_i X_j -> X_(i,0) X_(j,0)  Z_i Z_j -> Z_(i,0) Z_(j,0)
/// Identity terms keep their coefficient. Anything else (Y_i, mixed XZ
/// pairs, weight >= 3) raises UnsupportedTermError naming the term. The code
/// must carry the triple layout with c.k == h.num_qubits().
PauliHamiltonian encode_hamiltonian(const PauliHamiltonian& h, const StabilizerCode& c);

/// The paired-logical initial Hamiltonian on 6k physical qubits:
///   H = -sum_{i=1..k} (Z_(2i-1,0) Z_(2i,0) + X_(2i-1,0) X_(2i,0)).
PauliHamiltonian initial_hamiltonian(int k);

/// -strength * (sum of the weight-two generators). The weight-4k generators
/// are excluded; they belong to the decoupling pulse set.
PauliHamiltonian penalty_hamiltonian(const StabilizerCode& c, double strength);

enum class Basis { X, Z };

/// Endpoint Hamiltonians for adiabatic cat-state preparation on m qubits.
/// Basis Z: H0 = -sum X_i, H1 = -sum Z_i Z_{i+1} (prepares |0..0> + |1..1>).
/// Basis X swaps the roles of X and Z throughout.
std::pair<PauliHamiltonian, PauliHamiltonian> cat_prep_hamiltonians(int m, Basis basis);

/// Linear-path anneal schedule H(s) = (1-s) H_initial + s H_final with
/// s = interpolation(t) mapping [0, T] onto [0, 1], monotone, default t/T.
struct AnnealSchedule {
  PauliHamiltonian h_initial;
  PauliHamiltonian h_final;
  double total_time = 0.0;
  std::function<double(double)> interpolation;  // nullptr means linear

  double s_at(double t) const;
  PauliHamiltonian at(double t) const;
};

}  // namespace aqcode
