// Copyright 2026 The lcnns Authors
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

#include <doctest.h>

#include <vector>

#include "lcnns/error.hpp"
#include "lcnns/gf2.hpp"
#include "lcnns/rng.hpp"

using lcnns::BitVector;
using lcnns::Cnot;
using lcnns::ParityMatrix;

TEST_CASE("from_circuit builds the parity map") {
  CHECK(lcnns::from_circuit({}, 3) == ParityMatrix::identity(3));

  const std::vector<Cnot> one{{0, 1}};
  CHECK(lcnns::from_circuit(one, 2) == ParityMatrix::from_rows({{1, 0}, {1, 1}}));

  const std::vector<Cnot> two{{0, 1}, {1, 0}};
  CHECK(lcnns::from_circuit(two, 2) == ParityMatrix::from_rows({{0, 1}, {1, 1}}));

  const std::vector<Cnot> bad{{0, 3}};
  CHECK_THROWS_AS(lcnns::from_circuit(bad, 3), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::from_circuit({}, 0), lcnns::InputError);
}

TEST_CASE("row_xor") {
  auto m = ParityMatrix::identity(2);
  m.row_xor(0, 1);
  CHECK(m == ParityMatrix::from_rows({{1, 0}, {1, 1}}));

  auto r = lcnns::random_invertible(6, 11);
  const auto before = r;
  r.row_xor(0, 1);
  r.row_xor(0, 1);
  CHECK(r == before);

  auto u = ParityMatrix::from_rows({{1, 1}, {0, 1}});
  u.row_xor(1, 0);
  CHECK(u.is_identity());

  CHECK_THROWS_AS(u.row_xor(1, 1), lcnns::InputError);
  CHECK_THROWS_AS(u.row_xor(0, 2), lcnns::InputError);
}

TEST_CASE("rank and identity") {
  CHECK(ParityMatrix::identity(4).is_identity());
  CHECK(ParityMatrix::identity(4).rank() == 4);
  CHECK(ParityMatrix::zeros(3).rank() == 0);
  CHECK(ParityMatrix::from_rows({{1, 1}, {1, 1}}).rank() == 1);
  CHECK_FALSE(ParityMatrix::from_rows({{1, 1}, {1, 1}}).is_invertible());
  CHECK_THROWS_AS(ParityMatrix::from_rows({{1, 0}}), lcnns::InputError);
  CHECK_THROWS_AS(ParityMatrix::from_rows({{1, 2}, {0, 1}}), lcnns::InputError);
}

TEST_CASE("solve_gf2") {
  const auto id = ParityMatrix::identity(3);
  auto x = lcnns::solve_gf2(id.rows(), BitVector{1, 0, 1});
  REQUIRE(x);
  CHECK(*x == BitVector{1, 0, 1});

  const std::vector<BitVector> a{BitVector{1, 1, 0}, BitVector{0, 1, 1}};
  x = lcnns::solve_gf2(a, BitVector{1, 0, 1});
  REQUIRE(x);
  CHECK(*x == BitVector{1, 1});

  const std::vector<BitVector> b{BitVector{1, 1, 0}};
  CHECK_FALSE(lcnns::solve_gf2(b, BitVector{0, 0, 1}));

  CHECK_THROWS_AS(lcnns::solve_gf2(b, BitVector{0, 1}), lcnns::InputError);
}

TEST_CASE("solve_gf2 agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    lcnns::Rng rng(seed);
    const std::size_t rows = 1 + rng.uniform_index(6);
    const std::size_t cols = 1 + rng.uniform_index(6);
    std::vector<BitVector> a;
    for (std::size_t r = 0; r < rows; ++r) {
      BitVector v(cols);
      for (std::size_t c = 0; c < cols; ++c) v.set(c, rng.uniform_index(2) == 1);
      a.push_back(v);
    }
    BitVector y(cols);
    for (std::size_t c = 0; c < cols; ++c) y.set(c, rng.uniform_index(2) == 1);

    bool exists = false;
    for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
      BitVector acc(cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if (mask >> r & 1u) acc ^= a[r];
      }
      exists = exists || acc == y;
    }
    const auto x = lcnns::solve_gf2(a, y);
    CHECK(x.has_value() == exists);
    if (x) {
      BitVector acc(cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if (x->test(r)) acc ^= a[r];
      }
      CHECK(acc == y);
    }
  }
}

TEST_CASE("random_invertible") {
  CHECK(lcnns::random_invertible(1, 99) == ParityMatrix::identity(1));
  CHECK(lcnns::random_invertible(7, 5) == lcnns::random_invertible(7, 5));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(lcnns::random_invertible(9, seed).rank() == 9);
  }
}

TEST_CASE("bit vectors wider than one word") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.find_next(1) == 64);
  CHECK(v.find_next(65) == 129);
  CHECK(v.find_next(130) == 130);
  v ^= BitVector::unit(130, 64);
  CHECK(v.count() == 2);
}
