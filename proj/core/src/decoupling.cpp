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

#include "aqcode/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aqcode/errors.hpp"
#include "aqcode/simulate.hpp"

namespace aqcode {

namespace {

void require_commuting_target(const PauliString& target, const PauliHamiltonian& h) {
  for (const PauliTerm& t : h.terms()) {
    if (!target.commutes_with(t.op)) {
      throw InvalidPulseError("pulse target " + format_pauli(target) +
                              " anticommutes with term " + format_pauli(t.op));
    }
  }
}

/// Sum of the single-qubit factors of a product pulse target.
PauliHamiltonian local_control(const PauliString& target) {
  PauliHamiltonian h(target.num_qubits());
  for (std::size_t q = 0; q < target.num_qubits(); ++q) {
    const char L = target.letter(q);
    if (L != 'I') h.add_term(1.0, PauliString::single(target.num_qubits(), q, L));
  }
  return h;
}

}  // namespace

DDPulse DDPulse::exact(PauliString target, double tau) {
  if (tau < 0.0) throw ParameterError("pulse duration must be >= 0");
  return DDPulse{std::move(target), PulseMethod::Exact, tau, 0.0};
}

DDPulse DDPulse::local(PauliString target, double tau) {
  if (!(tau > 0.0)) throw ParameterError("local pulse needs tau > 0");
  return DDPulse{std::move(target), PulseMethod::Local, tau, std::numbers::pi / (2.0 * tau)};
}

StateVector dd_step(const StateVector& psi, const PauliHamiltonian& h_aqc, const DDPulse& pulse) {
  if (h_aqc.num_qubits() != psi.num_qubits() || pulse.target.num_qubits() != psi.num_qubits()) {
    throw DimensionError("pulse, Hamiltonian and state differ in qubit count");
  }
  require_commuting_target(pulse.target, h_aqc);

  if (pulse.method == PulseMethod::Exact) {
    // exp(-i pi/2 P) = -i P for an involution.
    if (!(pulse.target * pulse.target).is_identity()) {
      throw InvalidPulseError("exact pulse target must square to the identity");
    }
    StateVector out = apply_pauli(pulse.target, evolve(psi, h_aqc, pulse.tau));
    for (Complex& a : out.amplitudes()) a *= Complex{0.0, -1.0};
    return out;
  }
  const PauliHamiltonian combined =
      (h_aqc + pulse.alpha * local_control(pulse.target)).canonicalized();
  return evolve(psi, combined, pulse.tau);
}

std::vector<PauliString> universal_decoupling_group(const StabilizerCode& c) {
  BitVec all(c.n);
  for (std::size_t q = 0; q < c.n; ++q) all.set(q);
  const PauliString x_all = PauliString::from_bits(all, BitVec(c.n));
  const PauliString z_all = PauliString::from_bits(BitVec(c.n), all);

  for (const PauliString& p : {x_all, z_all}) {
    if (!stabilizer_combination(c, p)) {
      throw CodeInconsistencyError(format_pauli(p) + " is not in the stabilizer group span");
    }
  }
  // First-order decoupling: the orbit sum (1 + s_X)(1 + s_Z) over conjugation
  // signs must vanish for every weight-one Pauli.
  for (std::size_t q = 0; q < c.n; ++q) {
    for (char L : {'X', 'Y', 'Z'}) {
      const PauliString e = PauliString::single(c.n, q, L);
      const int s_x = e.commutes_with(x_all) ? 1 : -1;
      const int s_z = e.commutes_with(z_all) ? 1 : -1;
      if ((1 + s_x) * (1 + s_z) != 0) {
        throw CodeInconsistencyError("decoupling orbit of " + format_pauli(e) +
                                     " does not average to zero");
      }
    }
  }
  return {x_all, z_all};
}

std::vector<FidelityRecord> dd_scaling_experiment(int k, const PauliHamiltonian& h_aqc,
                                                  std::span<const double> taus,
                                                  std::span<const int> pulse_counts) {
  if (k < 1) throw ParameterError("scaling experiment needs k >= 1");
  const std::size_t n = 6 * static_cast<std::size_t>(k);
  if (n > 12) throw ResourceError("scaling experiment guard: 6k > 12 qubits");
  if (h_aqc.num_qubits() != n) {
    throw DimensionError("h_aqc acts on " + std::to_string(h_aqc.num_qubits()) +
                         " qubits, expected " + std::to_string(n));
  }
  for (double tau : taus) {
    if (!(tau > 0.0)) throw ParameterError("every tau must be > 0");
  }
  std::vector<int> counts(pulse_counts.begin(), pulse_counts.end());
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  if (!counts.empty() && counts.front() < 0) throw ParameterError("pulse counts must be >= 0");

  const std::vector<PauliString> group = universal_decoupling_group(build_6k2k2(k));
  const PauliString& x_all = group[0];
  const PauliString& z_all = group[1];
  require_commuting_target(x_all, h_aqc);
  require_commuting_target(z_all, h_aqc);

  const StateVector psi0 = build_initial_state(k);
  const PauliHamiltonian h_canon = h_aqc.canonicalized();
  const Propagator free_prop(h_canon);
  const double h_norm = free_prop.spectral_norm();

  std::vector<FidelityRecord> records;
  for (double tau : taus) {
    const double alpha = std::numbers::pi / (2.0 * tau);
    const Propagator local_x((h_canon + alpha * local_control(x_all)).canonicalized());
    const Propagator local_z((h_canon + alpha * local_control(z_all)).canonicalized());

    StateVector psi_exact = psi0;
    StateVector psi_local = psi0;
    std::size_t next = 0;
    const int max_count = counts.empty() ? 0 : counts.back();
    for (int j = 0; j <= max_count; ++j) {
      if (j > 0) {
        const bool x_turn = j % 2 == 1;  // X, Z, X, Z, ...
        psi_exact = apply_pauli(x_turn ? x_all : z_all, free_prop.evolve(psi_exact, tau));
        for (Complex& a : psi_exact.amplitudes()) a *= Complex{0.0, -1.0};
        psi_local = (x_turn ? local_x : local_z).evolve(psi_local, tau);
      }
      if (next < counts.size() && counts[next] == j) {
        records.push_back({j, tau, 1.0 - psi_exact.overlap(psi_local),
                           j * h_norm * tau * std::numbers::pi / 4.0});
        ++next;
      }
    }
  }
  return records;
}

LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw ParameterError("log-log fit needs at least two (x, y) pairs");
  }
  const std::size_t m = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw ParameterError("log-log fit needs positive samples");
    }
    const double lx = std::log10(xs[i]), ly = std::log10(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw ParameterError("log-log fit is degenerate");
  LogLogFit fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  double ss_res = 0.0;
  const double mean_y = sy / m;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double ly = std::log10(ys[i]);
    const double pred = fit.slope * std::log10(xs[i]) + fit.intercept;
    ss_res += (ly - pred) * (ly - pred);
    ss_tot += (ly - mean_y) * (ly - mean_y);
  }
  fit.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace aqcode
