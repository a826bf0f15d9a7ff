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
#include <optional>
#include <string>
#include <vector>

#include "aqcode/bitvec.hpp"
#include "aqcode/gf2.hpp"
#include "aqcode/pauli.hpp"

namespace aqcode {

/// Role of a physical qubit inside its logical triple.
enum class QubitRole { X, Mid, Z };

std::string to_string(QubitRole role);          // "x", "0", "z"
QubitRole qubit_role_from_string(const std::string& s);

/// Names a physical qubit by (logical index, role). The flat layout packs the
/// triples consecutively: flat = 3*(logical-1) + offset, offset(x)=0,
/// offset(0)=1, offset(z)=2.
struct QubitLabel {
  int logical_index = 0;  // 1-based
  QubitRole role = QubitRole::X;
  std::size_t flat_index = 0;
};

std::size_t triple_flat_index(int logical_index, QubitRole role);

/// A stabilizer code: generating set plus a chosen logical operator basis.
/// Codes are immutable after construction; share freely across threads.
struct StabilizerCode {
  std::size_t n = 0;  // physical qubits
  std::size_t k = 0;  // logical qubits
  bool css = false;
  std::vector<PauliString> generators;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::vector<QubitLabel> labels;  // empty when no triple layout applies

  /// True when the labels describe the triple layout on all n = 3k qubits.
  bool has_triple_layout() const;
};

/// The [[6k,2k,2]] family: each logical qubit becomes an (x, 0, z) triple;
/// 4k generators (two weight-2 chains plus two weight-4k products) and
/// weight-2 single-body logicals. The returned code has k_logical = 2k.
StabilizerCode build_6k2k2(int k);

/// The [[2k+2,2k,2]] baseline: generators X...X and Z...Z, hub-and-spoke
/// weight-2 logicals.
StabilizerCode build_gottesman(int k);

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // names the offending operator pair on failure
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_pass() const;
};

/// Mechanizes the StabilizerCode invariants: generator mutual commutation,
/// GF(2) independence, logical-generator commutation, the logical
/// anticommutation pattern, and n - rank == k. Failures are report entries,
/// not errors.
VerificationReport verify_code(const StabilizerCode& c);

struct Syndrome {
  BitVec bits;  // one bit per generator, 1 = anticommutes
  bool trivial() const { return !bits.any(); }
};

Syndrome syndrome(const StabilizerCode& c, const PauliString& e);

inline constexpr std::uint64_t kDefaultEnumBudget = 20'000'000;

struct DistanceResult {
  /// Smallest weight of an undetectable non-stabilizer Pauli, or nullopt when
  /// none exists up to max_weight ("greater than max_weight").
  std::optional<int> distance;
  int max_weight = 0;
  std::optional<PauliString> witness;
};

/// Brute-force distance by enumerating all 3^w * C(n,w) Paulis of weight
/// w <= max_weight. Membership in the stabilizer group is a GF(2) solve.
/// Throws ResourceError naming the offending weight when the enumeration
/// count exceeds budget.
DistanceResult distance(const StabilizerCode& c, int max_weight,
                        std::uint64_t budget = kDefaultEnumBudget);

/// True iff every weight-1 Pauli (3n of them) has a nonzero syndrome.
bool detects_all_weight_one(const StabilizerCode& c);

/// Minimum-weight representative of the coset op * S. Ties resolve to the
/// candidate sharing the most support with op, then to the smallest (x, z)
/// bit pattern. Throws NotALogicalError when op anticommutes with a
/// generator. The result differs from op by a stabilizer element.
PauliString reduce_logical(const StabilizerCode& c, const PauliString& op);

/// GF(2) membership of p in the generator span (phases ignored); the
/// coefficients name the generators whose product is p.
std::optional<BitVec> stabilizer_combination(const StabilizerCode& c, const PauliString& p);

}  // namespace aqcode
