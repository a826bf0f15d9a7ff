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

#include <vector>

#include "aqcode/hamiltonian.hpp"
#include "aqcode/statevector.hpp"

namespace aqcode {

struct AnnealRecord {
  double time = 0.0;
  double s = 0.0;
  double ground_overlap = 0.0;  // squared projection onto the instantaneous ground space
};

struct AnnealResult {
  StateVector state;
  std::vector<AnnealRecord> records;  // one per slice, at the slice midpoint
};

/// Piecewise-constant propagation: `steps` slices, each evolving under the
/// midpoint Hamiltonian H(s_mid) for T/steps. Degenerate ground spaces are
/// handled by projecting onto the near-degenerate subspace.
AnnealResult anneal(const StateVector& psi0, const AnnealSchedule& schedule, int steps);

/// The target cat state: basis Z gives (|0..0> + |1..1>)/sqrt(2), basis X the
/// |+...+> + |-...-> analogue.
StateVector cat_state(int m, Basis basis);

struct CatPrepResult {
  StateVector state;
  double cat_overlap = 0.0;       // squared overlap with the exact cat state
  double conserved_drift = 0.0;   // max |<conserved> - 1| over all slices
  double total_time = 0.0;
  int steps = 0;
};

/// Adiabatic cat preparation per cat_prep_hamiltonians, starting from the
/// product ground state of H0. The conserved product operator (X...X for
/// basis Z) is tracked across every slice; a drift of 1e-6 or more raises
/// CodeInconsistencyError since exact slice propagation must preserve it.
CatPrepResult prepare_cat(int m, Basis basis, double total_time, int steps);

/// The encoded initial state of the [[6k,2k,2]] computation, built exactly:
/// the (i,x) register holds the basis-X cat, the (i,z) register the basis-Z
/// cat, and the (i,0) register Bell pairs on consecutive pairs, interleaved
/// in flat qubit order. Guarded to 6k <= 12 qubits.
StateVector build_initial_state(int k);

/// Dense projector onto the joint +1 eigenspace of the generators,
/// prod_i (I + g_i)/2.
DenseMatrix codespace_projector(const StabilizerCode& c);

/// Orthonormal basis of the codespace; 2^k vectors.
std::vector<StateVector> codespace_basis(const StabilizerCode& c);

struct RestrictedSpectrum {
  std::vector<double> eigenvalues;        // ascending
  std::vector<StateVector> eigenvectors;  // lifted back to the full space
};

/// Spectrum of h restricted to the codespace of c (the matrix B^dagger H B
/// over a codespace basis B).
RestrictedSpectrum codespace_spectrum(const PauliHamiltonian& h, const StabilizerCode& c);

}  // namespace aqcode
