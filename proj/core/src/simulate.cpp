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

#include "aqcode/simulate.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Dense>

#include "aqcode/code.hpp"
#include "aqcode/errors.hpp"

namespace aqcode {

AnnealResult anneal(const StateVector& psi0, const AnnealSchedule& schedule, int steps) {
  if (steps < 1) throw ParameterError("anneal needs steps >= 1");
  if (schedule.h_initial.num_qubits() != psi0.num_qubits() ||
      schedule.h_final.num_qubits() != psi0.num_qubits()) {
    throw DimensionError("schedule and state differ in qubit count");
  }
  const double dt = schedule.total_time / steps;
  AnnealResult result{psi0, {}};
  result.records.reserve(steps);
  for (int j = 0; j < steps; ++j) {
    const double t_mid = (j + 0.5) * dt;
    const Propagator prop(schedule.at(t_mid));
    result.state = prop.evolve(result.state, dt);
    result.records.push_back({t_mid, schedule.s_at(t_mid), prop.ground_overlap(result.state)});
  }
  return result;
}

StateVector cat_state(int m, Basis basis) {
  if (m < 1) throw ParameterError("cat state needs m >= 1");
  const std::size_t n = static_cast<std::size_t>(m);
  StateVector s(n);
  auto& amps = s.amplitudes();
  std::fill(amps.begin(), amps.end(), Complex{0.0, 0.0});
  if (basis == Basis::Z) {
    const double a = 1.0 / std::sqrt(2.0);
    amps.front() = a;
    amps.back() = a;
  } else {
    // (|+..+> + |-..->)/sqrt(2) is uniform over the even-parity basis states.
    const double a = std::pow(2.0, -(static_cast<double>(m) - 1) / 2.0);
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      if ((std::popcount(b) & 1) == 0) amps[b] = a;
    }
  }
  return s;
}

CatPrepResult prepare_cat(int m, Basis basis, double total_time, int steps) {
  if (m < 2 || m > 12) throw ParameterError("cat preparation supports 2 <= m <= 12");
  if (total_time < 0.0) throw ParameterError("total_time must be >= 0");

  auto [h0, h1] = cat_prep_hamiltonians(m, basis);
  const std::size_t n = static_cast<std::size_t>(m);

  // Ground state of H0: |+>^m for basis Z, |0>^m for basis X.
  StateVector psi(n);
  if (basis == Basis::Z) {
    const double a = std::pow(2.0, -static_cast<double>(m) / 2.0);
    std::fill(psi.amplitudes().begin(), psi.amplitudes().end(), Complex{a, 0.0});
  }

  BitVec all(n);
  for (std::size_t q = 0; q < n; ++q) all.set(q);
  const PauliString conserved = basis == Basis::Z
                                    ? PauliString::from_bits(all, BitVec(n))
                                    : PauliString::from_bits(BitVec(n), all);

  AnnealSchedule schedule{std::move(h0), std::move(h1), total_time, nullptr};
  double drift = std::abs(pauli_expectation(conserved, psi) - Complex{1.0, 0.0});

  const double dt = total_time / steps;
  AnnealResult run{psi, {}};
  if (steps < 1) throw ParameterError("cat preparation needs steps >= 1");
  for (int j = 0; j < steps; ++j) {
    const double t_mid = (j + 0.5) * dt;
    run.state = Propagator(schedule.at(t_mid)).evolve(run.state, dt);
    drift = std::max(drift, std::abs(pauli_expectation(conserved, run.state) - Complex{1.0, 0.0}));
  }
  if (drift >= 1e-6) {
    throw CodeInconsistencyError("conserved product operator drifted by " + std::to_string(drift));
  }

  CatPrepResult result;
  result.state = std::move(run.state);
  result.cat_overlap = result.state.overlap(cat_state(m, basis));
  result.conserved_drift = drift;
  result.total_time = total_time;
  result.steps = steps;
  return result;
}

StateVector build_initial_state(int k) {
  if (k < 1) throw ParameterError("initial state needs k >= 1");
  const std::size_t n = 6 * static_cast<std::size_t>(k);
  if (n > 12) {
    throw ResourceError("initial state guard: 6k = " + std::to_string(n) + " qubits exceeds 12");
  }
  const std::size_t two_k = 2 * static_cast<std::size_t>(k);

  const StateVector x_cat = cat_state(static_cast<int>(two_k), Basis::X);
  const StateVector z_cat = cat_state(static_cast<int>(two_k), Basis::Z);
  // Bell pairs on consecutive (i,0) pairs; amplitude factorizes per pair.
  auto bell_amp = [&](std::uint64_t bits) {
    double a = 1.0;
    for (std::size_t pair = 0; pair < static_cast<std::size_t>(k); ++pair) {
      const bool b1 = (bits >> (2 * pair)) & 1, b2 = (bits >> (2 * pair + 1)) & 1;
      a *= (b1 == b2) ? 1.0 / std::sqrt(2.0) : 0.0;
      if (a == 0.0) break;
    }
    return a;
  };

  StateVector psi(n);
  auto& amps = psi.amplitudes();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    std::uint64_t xr = 0, mr = 0, zr = 0;
    for (std::size_t i = 0; i < two_k; ++i) {
      xr |= ((b >> triple_flat_index(static_cast<int>(i) + 1, QubitRole::X)) & 1) << i;
      mr |= ((b >> triple_flat_index(static_cast<int>(i) + 1, QubitRole::Mid)) & 1) << i;
      zr |= ((b >> triple_flat_index(static_cast<int>(i) + 1, QubitRole::Z)) & 1) << i;
    }
    amps[b] = x_cat.amplitude(xr) * bell_amp(mr) * z_cat.amplitude(zr);
  }
  return psi;
}

DenseMatrix codespace_projector(const StabilizerCode& c) {
  if (c.n > 12) throw ResourceError("codespace projector guard: n > 12");
  const std::size_t dim = std::size_t{1} << c.n;
  // Columns of the projector are prod (I + g)/2 applied to basis states.
  DenseMatrix p(dim);
  for (std::size_t i = 0; i < dim; ++i) p.at(i, i) = 1.0;
  for (const PauliString& g : c.generators) {
    DenseMatrix next(dim);
    for (std::size_t col = 0; col < dim; ++col) {
      StateVector column(c.n);
      auto& amps = column.amplitudes();
      for (std::size_t row = 0; row < dim; ++row) amps[row] = p.at(row, col);
      const StateVector applied = apply_pauli(g, column);
      for (std::size_t row = 0; row < dim; ++row) {
        next.at(row, col) = 0.5 * (amps[row] + applied.amplitude(row));
      }
    }
    p = std::move(next);
  }
  return p;
}

std::vector<StateVector> codespace_basis(const StabilizerCode& c) {
  const DenseMatrix p = codespace_projector(c);
  const std::size_t dim = p.dim;
  Eigen::MatrixXcd ep(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t col = 0; col < dim; ++col) ep(r, col) = p.at(r, col);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ep);
  std::vector<StateVector> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    if (solver.eigenvalues()(static_cast<Eigen::Index>(i)) > 0.5) {
      StateVector v(c.n);
      for (std::size_t r = 0; r < dim; ++r) {
        v.amplitudes()[r] = solver.eigenvectors()(static_cast<Eigen::Index>(r),
                                                  static_cast<Eigen::Index>(i));
      }
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

RestrictedSpectrum codespace_spectrum(const PauliHamiltonian& h, const StabilizerCode& c) {
  if (h.num_qubits() != c.n) throw DimensionError("Hamiltonian and code differ in qubit count");
  const std::vector<StateVector> basis = codespace_basis(c);
  const std::size_t d = basis.size();
  Eigen::MatrixXcd restricted(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    StateVector h_col(c.n);
    std::fill(h_col.amplitudes().begin(), h_col.amplitudes().end(), Complex{0.0, 0.0});
    for (const PauliTerm& t : h.terms()) {
      const StateVector applied = apply_pauli(t.op, basis[col]);
      for (std::size_t r = 0; r < h_col.dim(); ++r) {
        h_col.amplitudes()[r] += t.coeff * applied.amplitude(r);
      }
    }
    for (std::size_t row = 0; row < d; ++row) {
      restricted(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          basis[row].inner_product(h_col);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(restricted);
  RestrictedSpectrum spectrum;
  spectrum.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  for (std::size_t i = 0; i < d; ++i) {
    StateVector v(c.n);
    std::fill(v.amplitudes().begin(), v.amplitudes().end(), Complex{0.0, 0.0});
    for (std::size_t b = 0; b < d; ++b) {
      const Complex w = solver.eigenvectors()(static_cast<Eigen::Index>(b),
                                              static_cast<Eigen::Index>(i));
      for (std::size_t r = 0; r < v.dim(); ++r) {
        v.amplitudes()[r] += w * basis[b].amplitude(r);
      }
    }
    spectrum.eigenvectors.push_back(std::move(v));
  }
  return spectrum;
}

}  // namespace aqcode
