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

#include "aqcode/code.hpp"

#include <algorithm>
#include <functional>

#include "aqcode/errors.hpp"

namespace aqcode {

namespace {

/// Calls fn(support) for every w-subset of {0..n-1}, in lexicographic order.
void for_each_support(std::size_t n, int w, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> support(w);
  for (int i = 0; i < w; ++i) support[i] = i;
  while (true) {
    fn(support);
    int i = w - 1;
    while (i >= 0 && support[i] == n - w + i) --i;
    if (i < 0) break;
    ++support[i];
    for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
  }
}

std::uint64_t binomial(std::size_t n, int w) {
  std::uint64_t r = 1;
  for (int i = 1; i <= w; ++i) {
    r = r * (n - w + i) / i;
  }
  return r;
}

}  // namespace

std::string to_string(QubitRole role) {
  switch (role) {
    case QubitRole::X:
      return "x";
    case QubitRole::Mid:
      return "0";
    case QubitRole::Z:
      return "z";
  }
  throw ParameterError("bad qubit role");
}

QubitRole qubit_role_from_string(const std::string& s) {
  if (s == "x") return QubitRole::X;
  if (s == "0") return QubitRole::Mid;
  if (s == "z") return QubitRole::Z;
  throw ParseError("bad qubit role \"" + s + "\"");
}

std::size_t triple_flat_index(int logical_index, QubitRole role) {
  const std::size_t offset = role == QubitRole::X ? 0 : role == QubitRole::Mid ? 1 : 2;
  return 3 * static_cast<std::size_t>(logical_index - 1) + offset;
}

bool StabilizerCode::has_triple_layout() const {
  if (labels.size() != n || n != 3 * k) return false;
  for (std::size_t f = 0; f < n; ++f) {
    const QubitLabel& l = labels[f];
    if (l.flat_index != f) return false;
    if (l.logical_index < 1 || static_cast<std::size_t>(l.logical_index) > k) return false;
    if (triple_flat_index(l.logical_index, l.role) != f) return false;
  }
  return true;
}

StabilizerCode build_6k2k2(int k) {
  if (k < 1) throw ParameterError("6k2k2 family needs k >= 1, got " + std::to_string(k));
  const std::size_t two_k = 2 * static_cast<std::size_t>(k);
  const std::size_t n = 6 * static_cast<std::size_t>(k);
  auto x_flat = [](std::size_t i) { return triple_flat_index(static_cast<int>(i), QubitRole::X); };
  auto m_flat = [](std::size_t i) { return triple_flat_index(static_cast<int>(i), QubitRole::Mid); };
  auto z_flat = [](std::size_t i) { return triple_flat_index(static_cast<int>(i), QubitRole::Z); };

  StabilizerCode c;
  c.n = n;
  c.k = two_k;
  c.css = true;

  // X chain, the weight-4k X product, the Z chain, the weight-4k Z product.
  for (std::size_t i = 1; i < two_k; ++i) {
    c.generators.push_back(PauliString::x_on(n, {x_flat(i), x_flat(i + 1)}));
  }
  {
    BitVec x(n);
    for (std::size_t i = 1; i <= two_k; ++i) {
      x.set(m_flat(i));
      x.set(z_flat(i));
    }
    c.generators.push_back(PauliString::from_bits(std::move(x), BitVec(n)));
  }
  for (std::size_t i = 1; i < two_k; ++i) {
    c.generators.push_back(PauliString::z_on(n, {z_flat(i), z_flat(i + 1)}));
  }
  {
    BitVec z(n);
    for (std::size_t i = 1; i <= two_k; ++i) {
      z.set(x_flat(i));
      z.set(m_flat(i));
    }
    c.generators.push_back(PauliString::from_bits(BitVec(n), std::move(z)));
  }

  for (std::size_t i = 1; i <= two_k; ++i) {
    c.logical_x.push_back(PauliString::x_on(n, {x_flat(i), m_flat(i)}));
    c.logical_z.push_back(PauliString::z_on(n, {m_flat(i), z_flat(i)}));
  }

  c.labels.resize(n);
  for (std::size_t i = 1; i <= two_k; ++i) {
    for (QubitRole role : {QubitRole::X, QubitRole::Mid, QubitRole::Z}) {
      const std::size_t f = triple_flat_index(static_cast<int>(i), role);
      c.labels[f] = QubitLabel{static_cast<int>(i), role, f};
    }
  }
  return c;
}

StabilizerCode build_gottesman(int k) {
  if (k < 1) throw ParameterError("Gottesman family needs k >= 1, got " + std::to_string(k));
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 2;
  StabilizerCode c;
  c.n = n;
  c.k = 2 * static_cast<std::size_t>(k);
  c.css = true;

  BitVec all(n);
  for (std::size_t q = 0; q < n; ++q) all.set(q);
  c.generators.push_back(PauliString::from_bits(all, BitVec(n)));
  c.generators.push_back(PauliString::from_bits(BitVec(n), all));

  for (std::size_t i = 1; i <= c.k; ++i) {
    c.logical_x.push_back(PauliString::x_on(n, {0, i}));          // X_1 X_{i+1}
    c.logical_z.push_back(PauliString::z_on(n, {i, n - 1}));      // Z_{i+1} Z_{2k+2}
  }
  return c;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.pass; });
}

VerificationReport verify_code(const StabilizerCode& c) {
  VerificationReport report;

  {
    VerificationCheck check{"generators_commute", true, ""};
    for (std::size_t i = 0; i < c.generators.size() && check.pass; ++i) {
      for (std::size_t j = i + 1; j < c.generators.size(); ++j) {
        if (!c.generators[i].commutes_with(c.generators[j])) {
          check.pass = false;
          check.detail = format_pauli(c.generators[i]) + " anticommutes with " +
                         format_pauli(c.generators[j]);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  const std::size_t rank = symplectic_matrix(c.generators).rank();
  {
    VerificationCheck check{"generators_independent", rank == c.generators.size(), ""};
    if (!check.pass) {
      check.detail = "rank " + std::to_string(rank) + " < " + std::to_string(c.generators.size());
    }
    report.checks.push_back(std::move(check));
  }

  {
    VerificationCheck check{"logicals_commute_with_generators", true, ""};
    auto scan = [&](const std::vector<PauliString>& ops) {
      for (const PauliString& l : ops) {
        for (const PauliString& g : c.generators) {
          if (!l.commutes_with(g)) {
            check.pass = false;
            check.detail = format_pauli(l) + " anticommutes with generator " + format_pauli(g);
            return;
          }
        }
      }
    };
    scan(c.logical_x);
    if (check.pass) scan(c.logical_z);
    report.checks.push_back(std::move(check));
  }

  {
    // Full symplectic pairing: X-bar_i anticommutes with Z-bar_j iff i == j,
    // and each logical family commutes internally.
    VerificationCheck check{"logical_anticommutation_pattern",
                            c.logical_x.size() == c.logical_z.size(), ""};
    if (!check.pass) check.detail = "logical_x and logical_z counts differ";
    for (std::size_t i = 0; i < c.logical_x.size() && check.pass; ++i) {
      for (std::size_t j = 0; j < c.logical_z.size(); ++j) {
        const bool want_anti = i == j;
        if ((c.logical_x[i].symplectic_product(c.logical_z[j]) == 1) != want_anti) {
          check.pass = false;
          check.detail = "X-bar " + std::to_string(i + 1) + " vs Z-bar " + std::to_string(j + 1);
          break;
        }
      }
    }
    auto internal = [&](const std::vector<PauliString>& ops, const char* family) {
      for (std::size_t i = 0; i < ops.size() && check.pass; ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
          if (!ops[i].commutes_with(ops[j])) {
            check.pass = false;
            check.detail = std::string(family) + " logicals " + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + " anticommute";
            return;
          }
        }
      }
    };
    if (check.pass) internal(c.logical_x, "X");
    if (check.pass) internal(c.logical_z, "Z");
    report.checks.push_back(std::move(check));
  }

  {
    VerificationCheck check{"qubit_count_consistent", c.n - rank == c.k, ""};
    if (!check.pass) {
      check.detail = "n - rank = " + std::to_string(c.n - rank) + ", k = " + std::to_string(c.k);
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

Syndrome syndrome(const StabilizerCode& c, const PauliString& e) {
  if (e.num_qubits() != c.n) {
    throw DimensionError("error operator acts on " + std::to_string(e.num_qubits()) +
                         " qubits, code has " + std::to_string(c.n));
  }
  Syndrome s{BitVec(c.generators.size())};
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    if (e.symplectic_product(c.generators[i]) == 1) s.bits.set(i);
  }
  return s;
}

std::optional<BitVec> stabilizer_combination(const StabilizerCode& c, const PauliString& p) {
  return combination_in_span(c.generators, p);
}

DistanceResult distance(const StabilizerCode& c, int max_weight, std::uint64_t budget) {
  if (max_weight < 1) throw ParameterError("max_weight must be >= 1");
  const GF2Matrix checks = symplectic_matrix(c.generators);
  const char letters[3] = {'X', 'Z', 'Y'};

  for (int w = 1; w <= std::min<int>(max_weight, static_cast<int>(c.n)); ++w) {
    std::uint64_t count = binomial(c.n, w);
    std::uint64_t per_support = 1;
    for (int i = 0; i < w; ++i) per_support *= 3;
    count *= per_support;
    if (count > budget) {
      throw ResourceError("distance enumeration at weight " + std::to_string(w) + " needs " +
                          std::to_string(count) + " candidates, budget is " +
                          std::to_string(budget));
    }

    std::optional<PauliString> found;
    for_each_support(c.n, w, [&](const std::vector<std::size_t>& support) {
      if (found) return;
      std::vector<int> assign(w, 0);
      while (true) {
        BitVec x(c.n), z(c.n);
        for (int i = 0; i < w; ++i) {
          const char L = letters[assign[i]];
          if (L != 'Z') x.set(support[i]);
          if (L != 'X') z.set(support[i]);
        }
        PauliString cand = PauliString::from_bits(std::move(x), std::move(z));
        if (!syndrome(c, cand).bits.any() && !checks.in_row_span(symplectic_row(cand))) {
          found = cand;
          return;
        }
        int i = w - 1;
        while (i >= 0 && assign[i] == 2) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
      }
    });
    if (found) return DistanceResult{w, max_weight, std::move(found)};
  }
  return DistanceResult{std::nullopt, max_weight, std::nullopt};
}

bool detects_all_weight_one(const StabilizerCode& c) {
  for (std::size_t q = 0; q < c.n; ++q) {
    for (char L : {'X', 'Y', 'Z'}) {
      if (syndrome(c, PauliString::single(c.n, q, L)).trivial()) return false;
    }
  }
  return true;
}

namespace {

/// Tie order for coset representatives: weight, then support overlap with the
/// input (more shared support wins), then the (x, z) bit pattern.
struct CosetOrder {
  BitVec input_support;

  bool better(const PauliString& a, const PauliString& b) const {
    const std::size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    const std::size_t oa = BitVec::popcount_and(a.x_bits() | a.z_bits(), input_support);
    const std::size_t ob = BitVec::popcount_and(b.x_bits() | b.z_bits(), input_support);
    if (oa != ob) return oa > ob;
    return PauliString::compare_bits(a, b) < 0;
  }
};

PauliString reduce_by_coset_scan(const StabilizerCode& c, const PauliString& op) {
  const std::size_t m = c.generators.size();
  const CosetOrder order{op.x_bits() | op.z_bits()};
  PauliString best = op;
  PauliString current = op;
  // Gray-code walk over all 2^m subset products: one generator flip per step.
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
    const std::uint64_t next = step ^ (step >> 1);
    const int flipped = std::countr_zero(gray ^ next);
    gray = next;
    current = current * c.generators[flipped];
    if (order.better(current, best)) best = current;
  }
  return best.phase_free();
}

PauliString reduce_by_weight_search(const StabilizerCode& c, const PauliString& op,
                                    std::uint64_t budget) {
  // The input belongs to its own coset, so a representative of weight
  // <= weight(op) always exists; search upward by candidate weight.
  const GF2Matrix checks_matrix = symplectic_matrix(c.generators);
  const BitVec op_row = symplectic_row(op);
  const CosetOrder order{op.x_bits() | op.z_bits()};
  const char letters[3] = {'X', 'Z', 'Y'};
  const int cap = static_cast<int>(op.weight());

  if (checks_matrix.in_row_span(op_row)) return PauliString::identity(c.n);

  for (int w = 1; w <= cap; ++w) {
    std::uint64_t count = binomial(c.n, w);
    for (int i = 0; i < w; ++i) count *= 3;
    if (count > budget) {
      throw ResourceError("coset reduction at weight " + std::to_string(w) +
                          " exceeds enumeration budget");
    }
    std::optional<PauliString> best;
    for_each_support(c.n, w, [&](const std::vector<std::size_t>& support) {
      std::vector<int> assign(w, 0);
      while (true) {
        BitVec x(c.n), z(c.n);
        for (int i = 0; i < w; ++i) {
          const char L = letters[assign[i]];
          if (L != 'Z') x.set(support[i]);
          if (L != 'X') z.set(support[i]);
        }
        PauliString cand = PauliString::from_bits(std::move(x), std::move(z));
        if (checks_matrix.in_row_span(symplectic_row(cand) ^ op_row) &&
            (!best || order.better(cand, *best))) {
          best = cand;
        }
        int i = w - 1;
        while (i >= 0 && assign[i] == 2) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
      }
    });
    if (best) return *best;
  }
  return op.phase_free();
}

}  // namespace

PauliString reduce_logical(const StabilizerCode& c, const PauliString& op) {
  if (op.num_qubits() != c.n) {
    throw DimensionError("operator acts on " + std::to_string(op.num_qubits()) +
                         " qubits, code has " + std::to_string(c.n));
  }
  for (const PauliString& g : c.generators) {
    if (!op.commutes_with(g)) {
      throw NotALogicalError(format_pauli(op) + " anticommutes with generator " + format_pauli(g));
    }
  }
  if (c.generators.size() <= 20) return reduce_by_coset_scan(c, op);
  return reduce_by_weight_search(c, op, kDefaultEnumBudget);
}

}  // namespace aqcode
