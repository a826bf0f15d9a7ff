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

#include "aqcode/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "aqcode/errors.hpp"

namespace aqcode {

void PauliHamiltonian::add_term(double coeff, const PauliString& op) {
  if (!std::isfinite(coeff)) throw ParameterError("non-finite coefficient");
  if (op.num_qubits() != n_) {
    throw DimensionError("term acts on " + std::to_string(op.num_qubits()) +
                         " qubits, Hamiltonian has " + std::to_string(n_));
  }
  // Hermitian canonical phase is one unit of i per Y factor; any extra i^2
  // folds into the coefficient, an odd remainder has no real-coefficient form.
  const int y_count = static_cast<int>(BitVec::popcount_and(op.x_bits(), op.z_bits()));
  const int leftover = ((op.phase() - y_count) % 4 + 4) % 4;
  if (leftover % 2 != 0) {
    throw UnsupportedTermError("non-Hermitian term " + format_pauli(op));
  }
  const double folded = leftover == 2 ? -coeff : coeff;
  terms_.push_back({folded, PauliString::from_bits(op.x_bits(), op.z_bits(), y_count)});
}

PauliHamiltonian PauliHamiltonian::canonicalized() const {
  std::vector<PauliTerm> sorted = terms_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return PauliString::compare_bits(a.op, b.op) < 0;
  });
  PauliHamiltonian out(n_);
  for (const PauliTerm& t : sorted) {
    if (!out.terms_.empty() && PauliString::compare_bits(out.terms_.back().op, t.op) == 0) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0.0) out.terms_.pop_back();
    } else if (t.coeff != 0.0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

PauliHamiltonian PauliHamiltonian::scaled(double factor) const {
  PauliHamiltonian out(n_);
  for (const PauliTerm& t : terms_) out.terms_.push_back({factor * t.coeff, t.op});
  return out;
}

PauliHamiltonian& PauliHamiltonian::operator+=(const PauliHamiltonian& o) {
  if (n_ != o.n_) throw DimensionError("Hamiltonian qubit counts differ");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

namespace {

void require_triple_layout(const StabilizerCode& c, std::size_t logical_n) {
  if (!c.has_triple_layout()) {
    throw ParameterError("code does not carry the (x,0,z) triple layout");
  }
  if (c.k != logical_n) {
    throw ParameterError("Hamiltonian has " + std::to_string(logical_n) +
                         " logical qubits, code encodes " + std::to_string(c.k));
  }
}

}  // namespace

PauliHamiltonian encode_hamiltonian(const PauliHamiltonian& h, const StabilizerCode& c) {
  require_triple_layout(c, h.num_qubits());
  const std::size_t n_phys = c.n;
  auto flat = [](std::size_t logical_q, QubitRole role) {
    return triple_flat_index(static_cast<int>(logical_q) + 1, role);
  };

  PauliHamiltonian out(n_phys);
  for (const PauliTerm& t : h.canonicalized().terms()) {
    const std::size_t w = t.op.weight();
    if (w == 0) {
      out.add_term(t.coeff, PauliString::identity(n_phys));
      continue;
    }
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < h.num_qubits(); ++q) {
      if (t.op.letter(q) != 'I') support.push_back(q);
    }
    if (w == 1) {
      const std::size_t q = support[0];
      switch (t.op.letter(q)) {
        case 'X':
          out.add_term(t.coeff, PauliString::x_on(n_phys, {flat(q, QubitRole::X), flat(q, QubitRole::Mid)}));
          continue;
        case 'Z':
          out.add_term(t.coeff, PauliString::z_on(n_phys, {flat(q, QubitRole::Mid), flat(q, QubitRole::Z)}));
          continue;
        default:
          break;
      }
    } else if (w == 2) {
      const std::size_t qi = support[0], qj = support[1];
      const char li = t.op.letter(qi), lj = t.op.letter(qj);
      if (li == 'X' && lj == 'X') {
        out.add_term(t.coeff, PauliString::x_on(n_phys, {flat(qi, QubitRole::Mid), flat(qj, QubitRole::Mid)}));
        continue;
      }
      if (li == 'Z' && lj == 'Z') {
        out.add_term(t.coeff, PauliString::z_on(n_phys, {flat(qi, QubitRole::Mid), flat(qj, QubitRole::Mid)}));
        continue;
      }
    }
    throw UnsupportedTermError("term " + format_pauli(t.op) +
                               " is outside the encodable set {I, X_i, Z_i, X_iX_j, Z_iZ_j}");
  }
  return out.canonicalized();
}

PauliHamiltonian initial_hamiltonian(int k) {
  if (k < 1) throw ParameterError("initial Hamiltonian needs k >= 1");
  const std::size_t n = 6 * static_cast<std::size_t>(k);
  PauliHamiltonian h(n);
  for (int i = 1; i <= k; ++i) {
    const std::size_t a = triple_flat_index(2 * i - 1, QubitRole::Mid);
    const std::size_t b = triple_flat_index(2 * i, QubitRole::Mid);
    h.add_term(-1.0, PauliString::z_on(n, {a, b}));
    h.add_term(-1.0, PauliString::x_on(n, {a, b}));
  }
  return h.canonicalized();
}

PauliHamiltonian penalty_hamiltonian(const StabilizerCode& c, double strength) {
  if (!(strength > 0.0)) throw ParameterError("penalty strength must be positive");
  PauliHamiltonian h(c.n);
  for (const PauliString& g : c.generators) {
    if (g.weight() == 2) h.add_term(-strength, g);
  }
  return h.canonicalized();
}

std::pair<PauliHamiltonian, PauliHamiltonian> cat_prep_hamiltonians(int m, Basis basis) {
  if (m < 2) throw ParameterError("cat preparation needs m >= 2");
  const std::size_t n = static_cast<std::size_t>(m);
  PauliHamiltonian h0(n), h1(n);
  for (std::size_t q = 0; q < n; ++q) {
    h0.add_term(-1.0, PauliString::single(n, q, basis == Basis::Z ? 'X' : 'Z'));
  }
  for (std::size_t q = 0; q + 1 < n; ++q) {
    if (basis == Basis::Z) {
      h1.add_term(-1.0, PauliString::z_on(n, {q, q + 1}));
    } else {
      h1.add_term(-1.0, PauliString::x_on(n, {q, q + 1}));
    }
  }
  return {h0.canonicalized(), h1.canonicalized()};
}

double AnnealSchedule::s_at(double t) const {
  if (total_time <= 0.0) return 1.0;
  const double s = interpolation ? interpolation(t) : t / total_time;
  return std::clamp(s, 0.0, 1.0);
}

PauliHamiltonian AnnealSchedule::at(double t) const {
  const double s = s_at(t);
  return (h_initial.scaled(1.0 - s) + h_final.scaled(s)).canonicalized();
}

}  // namespace aqcode
