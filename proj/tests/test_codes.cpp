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

#include <algorithm>
#include <set>

#include "aqcode/code.hpp"
#include "aqcode/errors.hpp"

using namespace aqcode;

namespace {

std::size_t xf(int i) { return triple_flat_index(i, QubitRole::X); }
std::size_t mf(int i) { return triple_flat_index(i, QubitRole::Mid); }
std::size_t zf(int i) { return triple_flat_index(i, QubitRole::Z); }

// All 2^m products of generator subsets, phase-free.
std::vector<PauliString> full_stabilizer_group(const StabilizerCode& c) {
  std::vector<PauliString> group{PauliString::identity(c.n)};
  for (const PauliString& g : c.generators) {
    const std::size_t sz = group.size();
    for (std::size_t i = 0; i < sz; ++i) group.push_back((group[i] * g).phase_free());
  }
  return group;
}

}  // namespace

TEST_CASE("build_6k2k2 at k=1 matches the published generating set") {
  const StabilizerCode c = build_6k2k2(1);
  CHECK(c.n == 6);
  CHECK(c.k == 2);
  CHECK(c.css);
  REQUIRE(c.generators.size() == 4);
  CHECK(c.generators[0] == PauliString::x_on(6, {xf(1), xf(2)}));
  CHECK(c.generators[1] == PauliString::x_on(6, {mf(1), zf(1), mf(2), zf(2)}));
  CHECK(c.generators[2] == PauliString::z_on(6, {zf(1), zf(2)}));
  CHECK(c.generators[3] == PauliString::z_on(6, {xf(1), mf(1), xf(2), mf(2)}));

  REQUIRE(c.logical_x.size() == 2);
  REQUIRE(c.logical_z.size() == 2);
  CHECK(c.logical_x[0] == PauliString::x_on(6, {xf(1), mf(1)}));
  CHECK(c.logical_z[0] == PauliString::z_on(6, {mf(1), zf(1)}));
  CHECK(c.has_triple_layout());

  // The logical count is forced even: k_logical = 2k.
  CHECK(c.k % 2 == 0);
}

TEST_CASE("build_6k2k2 rejects k < 1") {
  CHECK_THROWS_AS(build_6k2k2(0), ParameterError);
  CHECK_THROWS_AS(build_6k2k2(-2), ParameterError);
  CHECK_THROWS_AS(build_gottesman(0), ParameterError);
}

TEST_CASE("build_6k2k2 many-body generators have weight 4k and commute") {
  for (int k = 1; k <= 4; ++k) {
    const StabilizerCode c = build_6k2k2(k);
    std::vector<const PauliString*> heavy;
    for (const PauliString& g : c.generators) {
      if (g.weight() != 2) heavy.push_back(&g);
    }
    REQUIRE(heavy.size() == 2);
    CHECK(heavy[0]->weight() == 4 * static_cast<std::size_t>(k));
    CHECK(heavy[1]->weight() == 4 * static_cast<std::size_t>(k));
    CHECK(heavy[0]->commutes_with(*heavy[1]));
    for (const PauliString& l : c.logical_x) CHECK(l.weight() == 2);
    for (const PauliString& l : c.logical_z) CHECK(l.weight() == 2);
  }
}

TEST_CASE("build_gottesman structure") {
  const StabilizerCode c = build_gottesman(1);
  CHECK(c.n == 4);
  CHECK(c.k == 2);
  REQUIRE(c.generators.size() == 2);
  CHECK(format_pauli(c.generators[0]) == "XXXX");
  CHECK(format_pauli(c.generators[1]) == "ZZZZ");
  CHECK(c.logical_x[0] == PauliString::x_on(4, {0, 1}));   // X_1 X_2
  CHECK(c.logical_z[0] == PauliString::z_on(4, {1, 3}));   // Z_2 Z_4

  // Hub structure at k=3: physical qubit 1 sits in every logical X-bar.
  const StabilizerCode g3 = build_gottesman(3);
  CHECK(g3.logical_x.size() == 6);
  for (const PauliString& l : g3.logical_x) CHECK(l.x_bit(0));
}

TEST_CASE("verify_code passes for both families, k = 1..4") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const VerificationReport r1 = verify_code(build_6k2k2(k));
    for (const VerificationCheck& check : r1.checks) {
      CAPTURE(check.name);
      CHECK(check.pass);
    }
    CHECK(verify_code(build_gottesman(k)).all_pass());
  }
}

TEST_CASE("verify_code flags anticommuting generators") {
  StabilizerCode bad;
  bad.n = 1;
  bad.k = 0;
  bad.generators = {PauliString::single(1, 0, 'X'), PauliString::single(1, 0, 'Z')};
  const VerificationReport report = verify_code(bad);
  CHECK_FALSE(report.all_pass());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const auto& c) { return c.name == "generators_commute"; });
  REQUIRE(it != report.checks.end());
  CHECK_FALSE(it->pass);
}

TEST_CASE("verify_code flags dependent generators") {
  StabilizerCode bad = build_6k2k2(1);
  bad.generators.push_back(bad.generators[0] * bad.generators[1]);
  const VerificationReport report = verify_code(bad);
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const auto& c) { return c.name == "generators_independent"; });
  REQUIRE(it != report.checks.end());
  CHECK_FALSE(it->pass);
}

TEST_CASE("syndrome basics and the identical-syndrome pair") {
  const StabilizerCode c = build_6k2k2(1);
  CHECK(syndrome(c, PauliString::identity(6)).trivial());

  const Syndrome s1 = syndrome(c, PauliString::single(6, mf(1), 'X'));
  const Syndrome s2 = syndrome(c, PauliString::single(6, mf(2), 'X'));
  CHECK_FALSE(s1.trivial());
  CHECK(s1.bits == s2.bits);

  // The undetectable two-body logical.
  CHECK(syndrome(c, PauliString::x_on(6, {mf(1), mf(2)})).trivial());

  CHECK_THROWS_AS(syndrome(c, PauliString::identity(5)), DimensionError);
}

TEST_CASE("distance of the paper families is 2") {
  CHECK(distance(build_6k2k2(1), 3).distance == 2);
  CHECK(distance(build_6k2k2(2), 3).distance == 2);
  CHECK(distance(build_gottesman(1), 3).distance == 2);
  CHECK(distance(build_gottesman(3), 3).distance == 2);
}

TEST_CASE("distance witness is a weight-2 undetected non-stabilizer") {
  const StabilizerCode c = build_6k2k2(1);
  const DistanceResult r = distance(c, 3);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->weight() == 2);
  CHECK(syndrome(c, *r.witness).trivial());
  CHECK_FALSE(stabilizer_combination(c, *r.witness).has_value());
}

TEST_CASE("distance of the single-stabilizer ZZ code is 1") {
  StabilizerCode c;
  c.n = 2;
  c.k = 1;
  c.generators = {PauliString::z_on(2, {0, 1})};
  const DistanceResult r = distance(c, 2);
  CHECK(r.distance == 1);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->weight() == 1);
  // Exhaustive cross-check at this size: the only weight-1 operators that
  // commute with ZZ are Z_1 and Z_2, neither of which is ZZ itself.
  CHECK(syndrome(c, *r.witness).trivial());
  CHECK_FALSE(stabilizer_combination(c, *r.witness).has_value());
}

TEST_CASE("distance reports greater-than when nothing is found") {
  // <XX, ZZ> on 2 qubits is the [[2,0,2]] stabilizer state: weight-1 errors
  // are all detected and the only undetected operators are stabilizers.
  StabilizerCode c;
  c.n = 2;
  c.k = 0;
  c.generators = {PauliString::x_on(2, {0, 1}), PauliString::z_on(2, {0, 1})};
  const DistanceResult r = distance(c, 1);
  CHECK_FALSE(r.distance.has_value());
  CHECK(r.max_weight == 1);
}

TEST_CASE("distance budget guard") {
  CHECK_THROWS_AS(distance(build_6k2k2(2), 3, 100), ResourceError);
}

TEST_CASE("detects_all_weight_one") {
  CHECK(detects_all_weight_one(build_6k2k2(2)));
  CHECK(detects_all_weight_one(build_gottesman(2)));
  StabilizerCode trivial;
  trivial.n = 2;
  trivial.k = 2;
  CHECK_FALSE(detects_all_weight_one(trivial));
}

TEST_CASE("reduce_logical sends four-body logical pairs to the mid-pair form") {
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const StabilizerCode c = build_6k2k2(k);
    for (std::size_t i = 1; i <= c.k; ++i) {
      for (std::size_t j = i + 1; j <= c.k; ++j) {
        const PauliString four_x = c.logical_x[i - 1] * c.logical_x[j - 1];
        const PauliString red_x = reduce_logical(c, four_x);
        CHECK(red_x == PauliString::x_on(c.n, {mf(static_cast<int>(i)), mf(static_cast<int>(j))}));
        // The quotient is a stabilizer element.
        CHECK(stabilizer_combination(c, red_x * four_x).has_value());

        const PauliString four_z = c.logical_z[i - 1] * c.logical_z[j - 1];
        const PauliString red_z = reduce_logical(c, four_z);
        CHECK(red_z == PauliString::z_on(c.n, {mf(static_cast<int>(i)), mf(static_cast<int>(j))}));
        CHECK(stabilizer_combination(c, red_z * four_z).has_value());
      }
    }
  }
}

TEST_CASE("reduce_logical of the identity is the identity") {
  const StabilizerCode c = build_6k2k2(1);
  CHECK(reduce_logical(c, PauliString::identity(6)).is_identity());
}

TEST_CASE("reduce_logical rejects operators outside the normalizer") {
  const StabilizerCode c = build_6k2k2(1);
  CHECK_THROWS_AS(reduce_logical(c, PauliString::single(6, mf(1), 'X')), NotALogicalError);
}

TEST_CASE("reduce_logical never increases weight") {
  const StabilizerCode c = build_6k2k2(2);
  for (const PauliString& l : c.logical_x) CHECK(reduce_logical(c, l).weight() <= l.weight());
  for (const PauliString& l : c.logical_z) CHECK(reduce_logical(c, l).weight() <= l.weight());
}

TEST_CASE("coset oracle: reduce_logical attains the exhaustive minimum at k=1") {
  const StabilizerCode c = build_6k2k2(1);
  const std::vector<PauliString> group = full_stabilizer_group(c);
  REQUIRE(group.size() == 16);

  std::vector<PauliString> probes;
  probes.push_back(c.logical_x[0] * c.logical_x[1]);
  probes.push_back(c.logical_z[0] * c.logical_z[1]);
  probes.push_back(c.logical_x[0]);
  probes.push_back(c.logical_z[1]);
  probes.push_back(c.logical_x[0] * c.logical_z[0]);
  for (const PauliString& op : probes) {
    std::size_t min_weight = op.weight();
    for (const PauliString& s : group) min_weight = std::min(min_weight, (op * s).weight());
    const PauliString reduced = reduce_logical(c, op);
    CHECK(reduced.weight() == min_weight);
    // Membership of the quotient in the enumerated group, not just the span.
    const PauliString quotient = (reduced * op).phase_free();
    CHECK(std::find(group.begin(), group.end(), quotient) != group.end());
  }
}

TEST_CASE("chain pairs X_(i,x) X_(j,x) lie in the stabilizer span") {
  for (int k = 1; k <= 3; ++k) {
    const StabilizerCode c = build_6k2k2(k);
    for (std::size_t i = 1; i <= c.k; ++i) {
      for (std::size_t j = i + 1; j <= c.k; ++j) {
        CHECK(stabilizer_combination(
                  c, PauliString::x_on(c.n, {xf(static_cast<int>(i)), xf(static_cast<int>(j))}))
                  .has_value());
      }
    }
  }
}

TEST_CASE("stabilizer_combination coefficients reproduce the element") {
  const StabilizerCode c = build_6k2k2(2);
  const PauliString target = (c.generators[0] * c.generators[2] * c.generators[5]).phase_free();
  const auto combo = stabilizer_combination(c, target);
  REQUIRE(combo.has_value());
  PauliString acc = PauliString::identity(c.n);
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    if (combo->bit(g)) acc = acc * c.generators[g];
  }
  CHECK(acc.phase_free() == target);
}
