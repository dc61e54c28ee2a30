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

#include "lcnns/gf2.hpp"

#include <bit>
#include <sstream>
#include <utility>

#include "lcnns/error.hpp"
#include "lcnns/rng.hpp"

namespace lcnns {

std::ostream& operator<<(std::ostream& os, const Cnot& g) {
  return os << "CNOT(" << g.control << "," << g.target << ")";
}

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b != 0);
}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw InputError("BitVector xor: size mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return i < size_ ? i : size_;
    }
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// ParityMatrix

ParityMatrix ParityMatrix::identity(std::size_t n) {
  ParityMatrix m;
  m.rows_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_.push_back(BitVector::unit(n, i));
  return m;
}

ParityMatrix ParityMatrix::zeros(std::size_t n) {
  ParityMatrix m;
  m.rows_.assign(n, BitVector(n));
  return m;
}

ParityMatrix ParityMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("parity matrix must be non-empty");
  ParityMatrix m = zeros(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw InputError("parity matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) throw InputError("parity matrix entries must be 0/1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

void ParityMatrix::row_xor(std::size_t src, std::size_t dst) {
  if (src >= size() || dst >= size()) {
    throw InputError("row_xor: row index out of range");
  }
  if (src == dst) throw InputError("row_xor: src and dst must differ");
  rows_[dst] ^= rows_[src];
}

void ParityMatrix::apply(const Cnot& g) {
  if (g.control < 0 || g.target < 0) {
    throw InputError("CNOT index out of range");
  }
  if (g.control == g.target) {
    throw InputError("CNOT control and target must differ");
  }
  row_xor(static_cast<std::size_t>(g.control),
          static_cast<std::size_t>(g.target));
}

bool ParityMatrix::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (rows_[i] != BitVector::unit(size(), i)) return false;
  }
  return true;
}

std::size_t ParityMatrix::rank() const { return lcnns::rank(rows_); }

std::string ParityMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const ParityMatrix& m) {
  return os << m.to_string();
}

// ---------------------------------------------------------------------------
// Free functions

ParityMatrix from_circuit(std::span<const Cnot> gates, std::size_t n) {
  if (n == 0) throw InputError("from_circuit: qubit count must be >= 1");
  ParityMatrix m = ParityMatrix::identity(n);
  for (const auto& g : gates) {
    if (g.control < 0 || g.target < 0 || static_cast<std::size_t>(g.control) >= n ||
        static_cast<std::size_t>(g.target) >= n) {
      std::ostringstream os;
      os << "from_circuit: " << g << " out of range for " << n << " qubits";
      throw InputError(os.str());
    }
    m.apply(g);
  }
  return m;
}

std::size_t rank(std::span<const BitVector> rows) {
  if (rows.empty()) return 0;
  std::vector<BitVector> work(rows.begin(), rows.end());
  const std::size_t cols = work.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < work.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < work.size() && !work[pivot].test(c)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[r], work[pivot]);
    for (std::size_t k = r + 1; k < work.size(); ++k) {
      if (work[k].test(c)) work[k] ^= work[r];
    }
    ++r;
  }
  return r;
}

std::optional<BitVector> solve_gf2(std::span<const BitVector> rows,
                                   const BitVector& y) {
  if (rows.empty()) throw InputError("solve_gf2: empty system");
  const std::size_t m = rows.size();
  const std::size_t k = y.size();
  for (const auto& r : rows) {
    if (r.size() != k) throw InputError("solve_gf2: dimension mismatch");
  }

  // Forward elimination to echelon form. Each working row carries a tag
  // recording which original rows were XORed into it.
  std::vector<BitVector> work(rows.begin(), rows.end());
  std::vector<BitVector> tags;
  tags.reserve(m);
  for (std::size_t i = 0; i < m; ++i) tags.push_back(BitVector::unit(m, i));

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t p = r;
    while (p < m && !work[p].test(c)) ++p;
    if (p == m) continue;
    std::swap(work[r], work[p]);
    std::swap(tags[r], tags[p]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (work[i].test(c)) {
        work[i] ^= work[r];
        tags[i] ^= tags[r];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }

  // Reduce y against the pivot rows in order; what remains must vanish.
  BitVector residual = y;
  BitVector x(m);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    if (residual.test(pivot_col[i])) {
      residual ^= work[i];
      x ^= tags[i];
    }
  }
  if (residual.any()) return std::nullopt;
  return x;
}

ParityMatrix random_invertible(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_invertible: n must be >= 1");
  ParityMatrix m = ParityMatrix::identity(n);
  if (n == 1) return m;
  Rng rng(seed);
  const std::size_t steps = 5 * n * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto src = static_cast<std::size_t>(rng.uniform_index(n));
    auto dst = static_cast<std::size_t>(rng.uniform_index(n - 1));
    if (dst >= src) ++dst;
    m.row_xor(src, dst);
  }
  return m;
}

}  // namespace lcnns
