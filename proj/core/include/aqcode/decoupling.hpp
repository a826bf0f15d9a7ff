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

#include <span>
#include <vector>

#include "aqcode/code.hpp"
#include "aqcode/hamiltonian.hpp"
#include "aqcode/statevector.hpp"

namespace aqcode {

enum class PulseMethod { Exact, Local };

/// One decoupling pulse. Exact applies exp(-i pi/2 target) directly; Local
/// applies exp(-i tau (H_aqc + alpha H_C)) where H_C is the sum of the
/// single-qubit factors of target and alpha tau = pi/2.
struct DDPulse {
  PauliString target;
  PulseMethod method = PulseMethod::Exact;
  double tau = 0.0;
  double alpha = 0.0;

  static DDPulse exact(PauliString target, double tau);
  static DDPulse local(PauliString target, double tau);
};

/// Free evolution under h_aqc for tau followed by the pulse (Exact), or the
/// simultaneous local-control exponential (Local). The target must commute
/// with every term of h_aqc.
StateVector dd_step(const StateVector& psi, const PauliHamiltonian& h_aqc, const DDPulse& pulse);

/// {X^n, Z^n} for a [[6k,2k,2]] code. Verifies both lie in the stabilizer
/// span (GF(2) solve) and that the 4-element group orbit averages every
/// weight-one Pauli to zero; failures raise CodeInconsistencyError.
std::vector<PauliString> universal_decoupling_group(const StabilizerCode& c);

struct FidelityRecord {
  int n_pulses = 0;      // number of DD applications
  double tau = 0.0;
  double infidelity = 0.0;  // 1 - |<psi_exact|psi_local>|^2
  double bound = 0.0;       // n_pulses * ||h_aqc|| * tau * pi / 4
};

/// Runs alternating X_all/Z_all pulse sequences from the encoded initial
/// state with both pulse methods and records the infidelity between the two
/// trajectories at every requested pulse count, for every tau. Records come
/// back tau-major, pulse count ascending. Guarded to 6k <= 12 qubits.
std::vector<FidelityRecord> dd_scaling_experiment(int k, const PauliHamiltonian& h_aqc,
                                                  std::span<const double> taus,
                                                  std::span<const int> pulse_counts);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least-squares line through (log10 x, log10 y); all inputs must be > 0.
LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

}  // namespace aqcode
