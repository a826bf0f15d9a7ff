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

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "aqcode/code.hpp"
#include "aqcode/errors.hpp"
#include "aqcode/pauli.hpp"

using namespace aqcode;

namespace {

using Mat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

// Independent dense oracle: explicit 2x2 matrices, qubit 0 least significant.
Mat dense_oracle(const PauliString& p) {
  const std::complex<double> i{0.0, 1.0};
  Mat x(2, 2), z(2, 2), id(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  id << 1, 0, 0, 1;
  Mat m(1, 1);
  m << 1;
  for (std::size_t q = p.num_qubits(); q-- > 0;) {
    Mat factor = id;
    if (p.x_bit(q) && p.z_bit(q)) {
      factor = x * z;
    } else if (p.x_bit(q)) {
      factor = x;
    } else if (p.z_bit(q)) {
      factor = z;
    }
    Mat next(m.rows() * 2, m.cols() * 2);
    next.block(0, 0, m.rows(), m.cols()) = factor(0, 0) * m;
    next.block(0, m.cols(), m.rows(), m.cols()) = factor(0, 1) * m;
    next.block(m.rows(), 0, m.rows(), m.cols()) = factor(1, 0) * m;
    next.block(m.rows(), m.cols(), m.rows(), m.cols()) = factor(1, 1) * m;
    m = next;
  }
  std::complex<double> phase{1.0, 0.0};
  for (int c = 0; c < p.phase(); ++c) phase *= i;
  return phase * m;
}

PauliString random_pauli(std::mt19937_64& rng, std::size_t n) {
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() & 1) x.set(q);
    if (rng() & 1) z.set(q);
  }
  return PauliString::from_bits(std::move(x), std::move(z), static_cast<int>(rng() % 4));
}

}  // namespace

TEST_CASE("multiply: self-inverse and single-qubit algebra") {
  const PauliString x1 = parse_pauli("X", 1);
  CHECK((x1 * x1).is_identity());
  CHECK((x1 * x1).phase() == 0);

  // XZ = -iY: bit pattern (1,1) with phase 0.
  const PauliString xz = parse_pauli("X", 1) * parse_pauli("Z", 1);
  CHECK(xz.x_bit(0));
  CHECK(xz.z_bit(0));
  CHECK(xz.phase() == 0);
  CHECK(format_pauli(xz) == "-iY");

  for (const char* text : {"X", "Y", "Z", "I"}) {
    const PauliString p = parse_pauli(text, 1);
    CHECK((p * p.inverse()).is_identity());
  }
}

TEST_CASE("multiply reproduces the two-body logical reduction") {
  // (X_(1,x) X_(1,0)) (X_(2,x) X_(2,0)) (X_(1,x) X_(2,x)) = X_(1,0) X_(2,0).
  const PauliString xbar1 = PauliString::x_on(6, {0, 1});
  const PauliString xbar2 = PauliString::x_on(6, {3, 4});
  const PauliString chain = PauliString::x_on(6, {0, 3});
  CHECK(xbar1 * xbar2 * chain == PauliString::x_on(6, {1, 4}));
}

TEST_CASE("multiply rejects mismatched qubit counts") {
  CHECK_THROWS_AS(parse_pauli("XX", 2) * parse_pauli("X", 1), DimensionError);
  CHECK_THROWS_AS(parse_pauli("XX", 2).symplectic_product(parse_pauli("X", 1)), DimensionError);
}

TEST_CASE("commutes: basic pairs and the k=1 generator pair") {
  CHECK(commutes(parse_pauli("XX", 2), parse_pauli("ZZ", 2)));
  CHECK_FALSE(commutes(parse_pauli("X", 1), parse_pauli("Z", 1)));
  CHECK(commutes(parse_pauli("XXXX", 4), parse_pauli("ZZZZ", 4)));
}

TEST_CASE("weight") {
  CHECK(weight(PauliString::identity(6)) == 0);
  CHECK(weight(PauliString::x_on(6, {0, 1})) == 2);
  // The k=2 many-body generator acts on all (i,0) and (i,z) qubits: 4k = 8.
  BitVec x(12);
  for (int i = 1; i <= 4; ++i) {
    x.set(triple_flat_index(i, QubitRole::Mid));
    x.set(triple_flat_index(i, QubitRole::Z));
  }
  CHECK(weight(PauliString::from_bits(x, BitVec(12))) == 8);
}

TEST_CASE("parse and format") {
  const PauliString p = parse_pauli("XIXI", 4);
  CHECK(p.x_bit(0));
  CHECK_FALSE(p.x_bit(1));
  CHECK(p.x_bit(2));
  CHECK_FALSE(p.x_bit(3));
  CHECK_FALSE(p.z_bits().any());

  const PauliString zz = parse_pauli("ZZ", 2);
  CHECK_FALSE(zz.x_bits().any());
  CHECK(zz.z_bit(0));
  CHECK(zz.z_bit(1));

  CHECK(format_pauli(multiply(parse_pauli("XI", 2), parse_pauli("ZI", 2))) == "-iYI");

  CHECK_THROWS_AS(parse_pauli("XQ", 2), ParseError);
  CHECK_THROWS_AS(parse_pauli("XX", 3), ParseError);
  CHECK(parse_pauli("-iYI", 2) == multiply(parse_pauli("XI", 2), parse_pauli("ZI", 2)));
}

TEST_CASE("parse/format round trip on random operators") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const PauliString p = random_pauli(rng, n);
    CHECK(parse_pauli(format_pauli(p), n) == p);
  }
}

TEST_CASE("multiply agrees with the dense oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const PauliString p = random_pauli(rng, n), q = random_pauli(rng, n);
    const Mat expected = dense_oracle(p) * dense_oracle(q);
    CHECK((expected - dense_oracle(p * q)).norm() < 1e-12);
  }
}

TEST_CASE("commutes agrees with the dense commutator check for all pairs, n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<PauliString> all;
    // Every phase-free pattern.
    for (std::uint64_t xm = 0; xm < (1u << n); ++xm) {
      for (std::uint64_t zm = 0; zm < (1u << n); ++zm) {
        BitVec x(n), z(n);
        for (std::size_t q = 0; q < n; ++q) {
          if ((xm >> q) & 1) x.set(q);
          if ((zm >> q) & 1) z.set(q);
        }
        all.push_back(PauliString::from_bits(std::move(x), std::move(z)));
      }
    }
    for (const PauliString& p : all) {
      const Mat mp = dense_oracle(p);
      for (const PauliString& q : all) {
        const Mat mq = dense_oracle(q);
        const double comm_norm = (mp * mq - mq * mp).norm();
        CHECK(commutes(p, q) == (comm_norm < 1e-12));
      }
    }
  }
}

TEST_CASE("symplectic product is symmetric and bilinear") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const PauliString p = random_pauli(rng, n), q = random_pauli(rng, n), r = random_pauli(rng, n);
    CHECK(p.symplectic_product(q) == q.symplectic_product(p));
    CHECK((p * q).symplectic_product(r) == (p.symplectic_product(r) ^ q.symplectic_product(r)));
  }
}

TEST_CASE("multiply is associative with exact phases, 10^4 random triples") {
  std::mt19937_64 rng(123456);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const PauliString p = random_pauli(rng, n), q = random_pauli(rng, n), r = random_pauli(rng, n);
    const PauliString left = (p * q) * r;
    const PauliString right = p * (q * r);
    CHECK(left == right);
    CHECK(left.phase() == right.phase());
  }
}

TEST_CASE("weight is subadditive under multiplication") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const PauliString p = random_pauli(rng, n), q = random_pauli(rng, n);
    CHECK(weight(p * q) <= weight(p) + weight(q));
  }
}
