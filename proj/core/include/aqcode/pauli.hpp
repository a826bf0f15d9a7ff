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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "aqcode/bitvec.hpp"

namespace aqcode {

/// An n-qubit Pauli operator in binary symplectic form with a phase exponent:
///
///   P = i^phase * prod_j X_j^{x_j} Z_j^{z_j}
///
/// X is written before Z on every qubit, so the bit pattern (x=1, z=1) with
/// phase 0 is the operator XZ = -iY; the Hermitian Y carries phase 1.
/// PauliStrings are immutable values; all operations below are pure.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits.
  static PauliString identity(std::size_t n) { return PauliString(BitVec(n), BitVec(n), 0); }

  /// Single-qubit X, Y or Z embedded in n qubits. Y gets phase 1 (Y = i XZ).
  static PauliString single(std::size_t n, std::size_t qubit, char letter);

  /// Builds from explicit bit vectors; x and z must have equal length.
  static PauliString from_bits(BitVec x, BitVec z, int phase = 0);

  /// X on every listed qubit (used for chain and product operators).
  static PauliString x_on(std::size_t n, std::initializer_list<std::size_t> qubits);
  static PauliString z_on(std::size_t n, std::initializer_list<std::size_t> qubits);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  bool x_bit(std::size_t q) const { return x_.bit(q); }
  bool z_bit(std::size_t q) const { return z_.bit(q); }

  /// Exponent of i, mod 4.
  int phase() const { return phase_; }

  /// Number of non-identity tensor factors.
  std::size_t weight() const { return (x_ | z_).popcount(); }

  bool is_identity_up_to_phase() const { return !x_.any() && !z_.any(); }
  bool is_identity() const { return is_identity_up_to_phase() && phase_ == 0; }

  /// Letter at qubit q: 'I', 'X', 'Y' or 'Z' (phase-free view of the factor).
  char letter(std::size_t q) const;

  /// Symplectic inner product: 0 = commute, 1 = anticommute. Symmetric and
  /// bilinear over GF(2).
  int symplectic_product(const PauliString& o) const;

  bool commutes_with(const PauliString& o) const { return symplectic_product(o) == 0; }

  /// Group product with exact phase tracking; x/z bits XOR.
  PauliString operator*(const PauliString& o) const;

  /// Inverse element: p * p.inverse() is the identity with phase 0.
  PauliString inverse() const;

  /// Same operator with the phase exponent dropped to 0.
  PauliString phase_free() const { return PauliString(x_, z_, 0); }

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

  /// Deterministic order on the (x, z) bit pattern, phases ignored:
  /// little-endian integer compare of x, then of z.
  static int compare_bits(const PauliString& a, const PauliString& b);

 private:
  PauliString(BitVec x, BitVec z, int phase)
      : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {}

  BitVec x_, z_;
  std::uint8_t phase_ = 0;
};

inline PauliString multiply(const PauliString& p, const PauliString& q) { return p * q; }
inline bool commutes(const PauliString& p, const PauliString& q) { return p.commutes_with(q); }
inline std::size_t weight(const PauliString& p) { return p.weight(); }

/// Parses the textual interchange format: optional sign prefix "+", "-",
/// "+i", "-i", then one of {I,X,Y,Z} per qubit, qubit 0 first. The letter
/// count must equal n.
PauliString parse_pauli(std::string_view text, std::size_t n);

/// As above with n derived from the letter count.
PauliString parse_pauli(std::string_view text);

/// Canonical text form; round-trips through parse_pauli. The sign prefix is
/// omitted when it is "+".
std::string format_pauli(const PauliString& p);

}  // namespace aqcode
