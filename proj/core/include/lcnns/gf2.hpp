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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace lcnns {

/// A CNOT gate. Acting on a parity matrix it performs
/// row(target) ^= row(control).
struct Cnot {
  int control = 0;
  int target = 0;

  friend bool operator==(const Cnot&, const Cnot&) = default;
};

std::ostream& operator<<(std::ostream& os, const Cnot& g);

/// Dense bit vector packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);
  BitVector(std::initializer_list<int> bits);

  static BitVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// n x n matrix over GF(2) describing the linear action of a CNOT circuit.
/// Row i lists the input qubits whose parity ends up on qubit i.
class ParityMatrix {
 public:
  ParityMatrix() = default;

  static ParityMatrix identity(std::size_t n);
  static ParityMatrix zeros(std::size_t n);
  /// Throws InputError unless rows is a non-empty square 0/1 array.
  static ParityMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return rows_.size(); }

  bool get(std::size_t row, std::size_t col) const {
    return rows_[row].test(col);
  }
  void set(std::size_t row, std::size_t col, bool value) {
    rows_[row].set(col, value);
  }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  std::span<const BitVector> rows() const { return rows_; }

  /// row(dst) ^= row(src). Throws InputError on src == dst or bad index.
  void row_xor(std::size_t src, std::size_t dst);
  /// Applies the row operation of a single gate.
  void apply(const Cnot& g);

  bool is_identity() const;
  std::size_t rank() const;
  bool is_invertible() const { return rank() == size(); }

  std::string to_string() const;

  friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;

 private:
  std::vector<BitVector> rows_;
};

std::ostream& operator<<(std::ostream& os, const ParityMatrix& m);

/// Parity matrix of a CNOT circuit: identity with each gate applied in
/// temporal order.
ParityMatrix from_circuit(std::span<const Cnot> gates, std::size_t n);

/// Rank over GF(2) of an arbitrary list of equal-length rows.
std::size_t rank(std::span<const BitVector> rows);

/// Finds x with XOR_{i : x_i = 1} rows[i] == y, or nullopt when y is not in
/// the row span. Throws InputError when rows is empty or lengths disagree.
std::optional<BitVector> solve_gf2(std::span<const BitVector> rows,
                                   const BitVector& y);

/// Identity scrambled by 5 n^2 seeded random row XORs.
ParityMatrix random_invertible(std::size_t n, std::uint64_t seed);

}  // namespace lcnns
