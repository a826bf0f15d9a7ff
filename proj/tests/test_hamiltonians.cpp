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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "aqcode/code.hpp"
#include "aqcode/errors.hpp"
#include "aqcode/hamiltonian.hpp"
#include "aqcode/simulate.hpp"
#include "aqcode/statevector.hpp"

using namespace aqcode;

namespace {

std::size_t mf(int i) { return triple_flat_index(i, QubitRole::Mid); }

bool same_terms(const PauliHamiltonian& a, const PauliHamiltonian& b) {
  const auto ca = a.canonicalized().terms(), cb = b.canonicalized().terms();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i].op == cb[i].op) || std::abs(ca[i].coeff - cb[i].coeff) > 1e-15) return false;
  }
  return true;
}

// Logical-basis oracle: an orthonormal codespace basis |b> indexed by the
// eigenvalues of the logical Z operators, built from the projector and the
// logical X representatives.
std::vector<StateVector> logical_basis(const StabilizerCode& c) {
  const std::size_t k = c.k;
  // Seed: project a computational basis state onto the joint +1 space of the
  // generators and all logical Z operators.
  StabilizerCode extended = c;
  for (const PauliString& z : c.logical_z) extended.generators.push_back(z);
  const std::vector<StateVector> seed = codespace_basis(extended);
  REQUIRE(seed.size() == 1);

  std::vector<StateVector> basis(std::size_t{1} << k, StateVector(c.n));
  for (std::uint64_t b = 0; b < basis.size(); ++b) {
    StateVector v = seed.front();
    for (std::size_t i = 0; i < k; ++i) {
      if ((b >> i) & 1) v = apply_pauli(c.logical_x[i], v);
    }
    basis[b] = v;
  }
  return basis;
}

}  // namespace

TEST_CASE("add_term folds signs and rejects non-Hermitian phases") {
  PauliHamiltonian h(1);
  h.add_term(1.0, parse_pauli("-X", 1));
  REQUIRE(h.terms().size() == 1);
  CHECK(h.terms()[0].coeff == -1.0);
  CHECK(format_pauli(h.terms()[0].op) == "X");

  h.add_term(0.5, parse_pauli("Y", 1));  // Hermitian, phase 1
  CHECK(h.terms()[1].coeff == 0.5);

  // Bare XZ (phase 0 bit pattern x=z=1) is -iY: no real-coefficient form.
  CHECK_THROWS_AS(h.add_term(1.0, parse_pauli("X", 1) * parse_pauli("Z", 1)),
                  UnsupportedTermError);
  CHECK_THROWS_AS(h.add_term(std::nan(""), parse_pauli("X", 1)), ParameterError);
  CHECK_THROWS_AS(h.add_term(1.0, parse_pauli("XX", 2)), DimensionError);
}

TEST_CASE("canonicalization merges, drops zeros, and is idempotent") {
  PauliHamiltonian h(2);
  h.add_term(0.5, PauliString::z_on(2, {0, 1}));
  h.add_term(0.25, PauliString::z_on(2, {0, 1}));
  h.add_term(1.0, PauliString::x_on(2, {0}));
  h.add_term(-1.0, PauliString::x_on(2, {0}));
  const PauliHamiltonian c = h.canonicalized();
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].coeff == 0.75);
  CHECK(same_terms(c, c.canonicalized()));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    PauliHamiltonian r(4);
    for (int t = 0; t < 12; ++t) {
      BitVec x(4), z(4);
      for (std::size_t q = 0; q < 4; ++q) {
        if (rng() & 1) x.set(q);
        if (rng() & 1) z.set(q);
      }
      const int y = static_cast<int>(BitVec::popcount_and(x, z));
      r.add_term(static_cast<double>(rng() % 7) - 3.0, PauliString::from_bits(x, z, y));
    }
    CHECK(same_terms(r.canonicalized(), r.canonicalized().canonicalized()));
  }
}

TEST_CASE("encode_hamiltonian maps the supported term set") {
  const StabilizerCode c = build_6k2k2(1);
  PauliHamiltonian h(2);
  h.add_term(1.0, PauliString::z_on(2, {0, 1}));
  const PauliHamiltonian enc = encode_hamiltonian(h, c);
  REQUIRE(enc.terms().size() == 1);
  CHECK(enc.terms()[0].coeff == 1.0);
  CHECK(enc.terms()[0].op == PauliString::z_on(6, {mf(1), mf(2)}));

  PauliHamiltonian empty(2);
  CHECK(encode_hamiltonian(empty, c).terms().empty());

  PauliHamiltonian singles(2);
  singles.add_term(0.5, PauliString::single(2, 0, 'X'));
  singles.add_term(0.25, PauliString::z_on(2, {0, 1}));
  const PauliHamiltonian enc2 = encode_hamiltonian(singles, c);
  REQUIRE(enc2.terms().size() == 2);
  for (const PauliTerm& t : enc2.terms()) {
    for (const PauliString& g : c.generators) CHECK(t.op.commutes_with(g));
  }
}

TEST_CASE("encode_hamiltonian rejects unsupported terms") {
  const StabilizerCode c = build_6k2k2(1);
  PauliHamiltonian y_term(2);
  y_term.add_term(1.0, PauliString::single(2, 0, 'Y'));
  CHECK_THROWS_AS(encode_hamiltonian(y_term, c), UnsupportedTermError);

  PauliHamiltonian mixed(2);
  mixed.add_term(1.0, PauliString::single(2, 0, 'X') * PauliString::single(2, 1, 'Z'));
  CHECK_THROWS_AS(encode_hamiltonian(mixed, c), UnsupportedTermError);

  PauliHamiltonian wrong_k(4);
  wrong_k.add_term(1.0, PauliString::z_on(4, {0, 1}));
  CHECK_THROWS_AS(encode_hamiltonian(wrong_k, c), ParameterError);

  StabilizerCode no_layout = build_gottesman(1);
  PauliHamiltonian h(2);
  h.add_term(1.0, PauliString::z_on(2, {0, 1}));
  CHECK_THROWS_AS(encode_hamiltonian(h, no_layout), ParameterError);
}

TEST_CASE("codespace equivalence: encoded action matches the logical matrix") {
  const StabilizerCode c = build_6k2k2(1);
  const std::vector<StateVector> basis = logical_basis(c);
  REQUIRE(basis.size() == 4);

  std::mt19937_64 rng(2468);
  for (int trial = 0; trial < 10; ++trial) {
    PauliHamiltonian h(2);
    auto coeff = [&] { return (static_cast<double>(rng() % 2000) - 1000.0) / 500.0; };
    h.add_term(coeff(), PauliString::single(2, 0, 'X'));
    h.add_term(coeff(), PauliString::single(2, 1, 'X'));
    h.add_term(coeff(), PauliString::single(2, 0, 'Z'));
    h.add_term(coeff(), PauliString::single(2, 1, 'Z'));
    h.add_term(coeff(), PauliString::x_on(2, {0, 1}));
    h.add_term(coeff(), PauliString::z_on(2, {0, 1}));
    const PauliHamiltonian enc = encode_hamiltonian(h, c);

    const DenseMatrix logical = dense_matrix(h);
    double max_dev = 0.0;
    for (std::size_t col = 0; col < 4; ++col) {
      StateVector h_col(c.n);
      std::fill(h_col.amplitudes().begin(), h_col.amplitudes().end(), Complex{0.0, 0.0});
      for (const PauliTerm& t : enc.terms()) {
        const StateVector applied = apply_pauli(t.op, basis[col]);
        for (std::size_t r = 0; r < h_col.dim(); ++r) {
          h_col.amplitudes()[r] += t.coeff * applied.amplitude(r);
        }
      }
      for (std::size_t row = 0; row < 4; ++row) {
        const Complex encoded_elem = basis[row].inner_product(h_col);
        max_dev = std::max(max_dev, std::abs(encoded_elem - logical.at(row, col)));
      }
    }
    CHECK(max_dev < 1e-10);
  }
}

TEST_CASE("initial_hamiltonian structure and commutation") {
  const PauliHamiltonian h1 = initial_hamiltonian(1);
  REQUIRE(h1.terms().size() == 2);
  for (const PauliTerm& t : h1.terms()) CHECK(t.coeff == -1.0);
  CHECK(same_terms(h1, [&] {
          PauliHamiltonian e(6);
          e.add_term(-1.0, PauliString::z_on(6, {mf(1), mf(2)}));
          e.add_term(-1.0, PauliString::x_on(6, {mf(1), mf(2)}));
          return e;
        }()));

  const PauliHamiltonian h2 = initial_hamiltonian(2);
  CHECK(h2.terms().size() == 4);
  for (const PauliTerm& t : h2.terms()) {
    const auto support = t.op.x_bits() | t.op.z_bits();
    const bool first_pair = support.bit(mf(1)) && support.bit(mf(2));
    const bool second_pair = support.bit(mf(3)) && support.bit(mf(4));
    CHECK(first_pair != second_pair);
  }

  for (int k = 1; k <= 3; ++k) {
    const StabilizerCode c = build_6k2k2(k);
    for (const PauliTerm& t : initial_hamiltonian(k).terms()) {
      for (const PauliString& g : c.generators) CHECK(t.op.commutes_with(g));
    }
  }
  CHECK_THROWS_AS(initial_hamiltonian(0), ParameterError);
}

TEST_CASE("initial_hamiltonian terms are the reduced logical pairs") {
  for (int k = 1; k <= 2; ++k) {
    const StabilizerCode c = build_6k2k2(k);
    const PauliHamiltonian h = initial_hamiltonian(k);
    for (int i = 1; i <= k; ++i) {
      const PauliString rx = reduce_logical(c, c.logical_x[2 * i - 2] * c.logical_x[2 * i - 1]);
      const PauliString rz = reduce_logical(c, c.logical_z[2 * i - 2] * c.logical_z[2 * i - 1]);
      bool found_x = false, found_z = false;
      for (const PauliTerm& t : h.terms()) {
        if (t.op == rx) found_x = true;
        if (t.op == rz) found_z = true;
      }
      CHECK(found_x);
      CHECK(found_z);
    }
  }
}

TEST_CASE("penalty_hamiltonian keeps only the weight-two generators") {
  const StabilizerCode c = build_6k2k2(1);
  const PauliHamiltonian p = penalty_hamiltonian(c, 2.0);
  REQUIRE(p.terms().size() == 2);
  for (const PauliTerm& t : p.terms()) {
    CHECK(t.coeff == -2.0);
    CHECK(t.op.weight() == 2);
  }
  CHECK_THROWS_AS(penalty_hamiltonian(c, 0.0), ParameterError);
  CHECK_THROWS_AS(penalty_hamiltonian(c, -1.0), ParameterError);

  // Penalty terms commute with each other and with any encoded Hamiltonian.
  PauliHamiltonian h(2);
  h.add_term(0.5, PauliString::single(2, 0, 'X'));
  h.add_term(0.25, PauliString::z_on(2, {0, 1}));
  const PauliHamiltonian enc = encode_hamiltonian(h, c);
  for (const PauliTerm& a : p.terms()) {
    for (const PauliTerm& b : p.terms()) CHECK(a.op.commutes_with(b.op));
    for (const PauliTerm& b : enc.terms()) CHECK(a.op.commutes_with(b.op));
  }

  // At k=2 the chains contribute 2(2k-1) = 6 penalty terms.
  CHECK(penalty_hamiltonian(build_6k2k2(2), 1.0).terms().size() == 6);
}

TEST_CASE("cat_prep_hamiltonians in both bases") {
  const auto [h0z, h1z] = cat_prep_hamiltonians(2, Basis::Z);
  CHECK(same_terms(h0z, [&] {
          PauliHamiltonian e(2);
          e.add_term(-1.0, PauliString::single(2, 0, 'X'));
          e.add_term(-1.0, PauliString::single(2, 1, 'X'));
          return e;
        }()));
  CHECK(same_terms(h1z, [&] {
          PauliHamiltonian e(2);
          e.add_term(-1.0, PauliString::z_on(2, {0, 1}));
          return e;
        }()));

  const auto [h0x, h1x] = cat_prep_hamiltonians(3, Basis::X);
  CHECK(same_terms(h1x, [&] {
          PauliHamiltonian e(3);
          e.add_term(-1.0, PauliString::x_on(3, {0, 1}));
          e.add_term(-1.0, PauliString::x_on(3, {1, 2}));
          return e;
        }()));
  CHECK(h0x.terms().size() == 3);

  CHECK_THROWS_AS(cat_prep_hamiltonians(1, Basis::Z), ParameterError);
}

TEST_CASE("conserved product operator commutes with the whole anneal path") {
  for (int m : {2, 4}) {
    const auto [h0, h1] = cat_prep_hamiltonians(m, Basis::Z);
    BitVec all(m);
    for (std::size_t q = 0; q < static_cast<std::size_t>(m); ++q) all.set(q);
    const PauliString conserved = PauliString::from_bits(all, BitVec(m));
    for (const PauliTerm& t : h0.terms()) CHECK(conserved.commutes_with(t.op));
    for (const PauliTerm& t : h1.terms()) CHECK(conserved.commutes_with(t.op));
  }
}

TEST_CASE("anneal schedule interpolates linearly by default") {
  const auto [h0, h1] = cat_prep_hamiltonians(2, Basis::Z);
  AnnealSchedule schedule{h0, h1, 10.0, nullptr};
  CHECK(schedule.s_at(0.0) == 0.0);
  CHECK(schedule.s_at(10.0) == 1.0);
  CHECK(schedule.s_at(5.0) == 0.5);

  const PauliHamiltonian mid = schedule.at(5.0);
  // Three terms, each at half strength.
  REQUIRE(mid.terms().size() == 3);
  for (const PauliTerm& t : mid.terms()) CHECK(t.coeff == -0.5);

  AnnealSchedule quadratic{h0, h1, 10.0, [](double t) { return (t / 10.0) * (t / 10.0); }};
  CHECK(quadratic.s_at(5.0) == 0.25);
}
