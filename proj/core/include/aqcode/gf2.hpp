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

#include <optional>
#include <span>
#include <vector>

#include "aqcode/bitvec.hpp"
#include "aqcode/pauli.hpp"

namespace aqcode {

/// Row-major bit matrix over GF(2), rows packed as BitVecs.
class GF2Matrix {
 public:
  GF2Matrix(std::size_t rows, std::size_t cols);
  static GF2Matrix from_rows(std::vector<BitVec> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return rows_[r].bit(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }

  std::size_t rank() const;

  /// Coefficients c (one bit per row) with XOR of the selected rows equal to
  /// target, or nullopt when target is outside the row span.
  std::optional<BitVec> solve_combination(const BitVec& target) const;

  bool in_row_span(const BitVec& target) const { return solve_combination(target).has_value(); }

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
};

/// Check matrix of a generating set: row i is (x_i | z_i), 2n columns.
GF2Matrix symplectic_matrix(std::span<const PauliString> ops);

/// (x | z) of a single operator as a 2n-bit row.
BitVec symplectic_row(const PauliString& p);

/// Which generators multiply (bit-wise) to p, phases ignored; nullopt when p
/// is outside the span.
std::optional<BitVec> combination_in_span(std::span<const PauliString> generators,
                                          const PauliString& p);

inline bool in_span(std::span<const PauliString> generators, const PauliString& p) {
  return combination_in_span(generators, p).has_value();
}

}  // namespace aqcode
