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

#include "aqcode/gf2.hpp"

#include "aqcode/errors.hpp"

namespace aqcode {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVec(cols)) {}

GF2Matrix GF2Matrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  GF2Matrix m(0, cols);
  for (const BitVec& r : rows) {
    if (r.size() != cols) throw DimensionError("GF2Matrix row length mismatch");
  }
  m.rows_ = std::move(rows);
  return m;
}

std::size_t GF2Matrix::rank() const {
  std::vector<BitVec> work = rows_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < work.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < work.size() && !work[pivot].bit(c)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[r], work[pivot]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i != r && work[i].bit(c)) work[i] ^= work[r];
    }
    ++r;
  }
  return r;
}

std::optional<BitVec> GF2Matrix::solve_combination(const BitVec& target) const {
  if (target.size() != cols_) throw DimensionError("GF2 solve target length mismatch");
  const std::size_t m = rows_.size();
  // Eliminate with an identity tag on every row so the reduced rows remember
  // which original rows they combine.
  std::vector<BitVec> work = rows_;
  std::vector<BitVec> tags(m, BitVec(m));
  for (std::size_t i = 0; i < m; ++i) tags[i].set(i);

  BitVec residue = target;
  BitVec combo(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < m; ++c) {
    std::size_t pivot = r;
    while (pivot < m && !work[pivot].bit(c)) ++pivot;
    if (pivot == m) continue;
    std::swap(work[r], work[pivot]);
    std::swap(tags[r], tags[pivot]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && work[i].bit(c)) {
        work[i] ^= work[r];
        tags[i] ^= tags[r];
      }
    }
    if (residue.bit(c)) {
      residue ^= work[r];
      combo ^= tags[r];
    }
    ++r;
  }
  if (residue.any()) return std::nullopt;
  return combo;
}

BitVec symplectic_row(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  BitVec row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) row.set(q);
    if (p.z_bit(q)) row.set(n + q);
  }
  return row;
}

GF2Matrix symplectic_matrix(std::span<const PauliString> ops) {
  if (ops.empty()) return GF2Matrix(0, 0);
  const std::size_t n = ops.front().num_qubits();
  std::vector<BitVec> rows;
  rows.reserve(ops.size());
  for (const PauliString& p : ops) {
    if (p.num_qubits() != n) throw DimensionError("mixed qubit counts in generating set");
    rows.push_back(symplectic_row(p));
  }
  return GF2Matrix::from_rows(std::move(rows), 2 * n);
}

std::optional<BitVec> combination_in_span(std::span<const PauliString> generators,
                                          const PauliString& p) {
  if (generators.empty()) {
    if (p.is_identity_up_to_phase()) return BitVec(0);
    return std::nullopt;
  }
  if (generators.front().num_qubits() != p.num_qubits()) {
    throw DimensionError("operator and generators act on different qubit counts");
  }
  return symplectic_matrix(generators).solve_combination(symplectic_row(p));
}

}  // namespace aqcode
