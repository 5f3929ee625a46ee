// Copyright 2026 The eacqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eacqc/error.hpp"
#include "eacqc/params.hpp"

namespace eacqc {

/// Arithmetic in GF(2^m) (binary representation modulo a fixed primitive
/// polynomial) or in GF(q^2) = GF(q)[y]/(y^2 + y + beta) with q = 2^m.
///
/// Elements are bit patterns. In the quadratic representation the element
/// a + b*y is stored as a | (b << m).
class Field {
 public:
  using value_type = std::uint32_t;

  static constexpr int kMaxBinaryDegree = 8;

  /// Primitive polynomial for GF(2^m), m = 1..8, with the x^m term included.
  static constexpr std::array<value_type, 9> kPolynomials = {
      0x0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x5B, 0x83, 0x11D};

  static std::shared_ptr<const Field> binary(int m) {
    detail::require(m >= 1 && m <= kMaxBinaryDegree, "binary field degree must be in 1..8");
    return cached(m, false);
  }

  static std::shared_ptr<const Field> quadratic(int m) {
    detail::require(m >= 1 && m <= kMaxBinaryDegree, "quadratic extension base degree must be in 1..8");
    return cached(m, true);
  }

  /// GF(q) for q a power of two up to 256 (binary representation).
  static std::shared_ptr<const Field> of_size(std::int64_t q) {
    for (int m = 1; m <= kMaxBinaryDegree; ++m) {
      if (q == (std::int64_t{1} << m)) return binary(m);
    }
    throw domain_error("field size must be 2^m with 1 <= m <= 8, got " + std::to_string(q));
  }

  /// GF(q^2) in the quadratic representation over GF(q).
  static std::shared_ptr<const Field> square_of(std::int64_t q) {
    for (int m = 1; m <= kMaxBinaryDegree; ++m) {
      if (q == (std::int64_t{1} << m)) return quadratic(m);
    }
    throw domain_error("base field size must be 2^m with 1 <= m <= 8, got " + std::to_string(q));
  }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::int64_t size() const { return std::int64_t{1} << degree_; }
  [[nodiscard]] bool is_quadratic() const { return quadratic_; }
  [[nodiscard]] int base_degree() const { return quadratic_ ? degree_ / 2 : degree_; }
  [[nodiscard]] value_type beta() const { return beta_; }
  [[nodiscard]] bool has_conjugation() const { return degree_ % 2 == 0; }
  /// Size of the subfield fixed by conjugation (sqrt of the field size).
  [[nodiscard]] std::int64_t conjugation_base() const { return std::int64_t{1} << (degree_ / 2); }

  [[nodiscard]] std::string name() const {
    std::string s = "GF(" + std::to_string(size()) + ")";
    if (quadratic_) s += " over GF(" + std::to_string(conjugation_base()) + ")";
    return s;
  }

  [[nodiscard]] bool contains(value_type a) const { return a < static_cast<value_type>(size()); }

  [[nodiscard]] static value_type add(value_type a, value_type b) { return a ^ b; }

  [[nodiscard]] value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order()) s -= order();
    return exp_[s];
  }

  [[nodiscard]] value_type inv(value_type a) const {
    detail::require(a != 0, "zero has no multiplicative inverse");
    return exp_[(order() - log_[a]) % order()];
  }

  [[nodiscard]] value_type pow(value_type a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % order())) % order())];
  }

  /// x -> x^sqrt(|F|). Uses the (a + b y)^q = (a + b) + b y identity in the
  /// quadratic representation and a table power otherwise.
  [[nodiscard]] value_type conj(value_type a) const {
    detail::require(has_conjugation(), name() + " is not a square extension");
    if (quadratic_) {
      const int m = degree_ / 2;
      const value_type mask = (value_type{1} << m) - 1;
      const value_type lo = a & mask;
      const value_type hi = a >> m;
      return (lo ^ hi) | (hi << m);
    }
    return pow(a, static_cast<std::uint64_t>(conjugation_base()));
  }

  /// Generator of the multiplicative group used by the log tables.
  [[nodiscard]] value_type generator() const { return exp_[1 % order()]; }

  [[nodiscard]] std::uint32_t order() const { return static_cast<std::uint32_t>(size() - 1); }

  Field(int degree, bool quadratic) : degree_(degree), quadratic_(quadratic) {
    const std::size_t n = std::size_t{1} << degree_;
    exp_.assign(n, 0);
    log_.assign(n, 0);
    if (!quadratic_) {
      build_tables([this](value_type a, value_type b) { return slow_binary_mul(a, b); },
                   value_type{2});
    } else {
      base_ = binary(degree_ / 2);
      beta_ = smallest_trace_one(*base_);
      auto mul = [this](value_type a, value_type b) { return slow_quadratic_mul(a, b); };
      build_tables(mul, find_generator(mul));
    }
  }

 private:
  static std::shared_ptr<const Field> cached(int m, bool quadratic) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::shared_ptr<const Field>> cache;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find({m, quadratic});
      if (it != cache.end()) return it->second;
    }
    // Built outside the lock: a quadratic field recursively asks for its base.
    auto made = std::make_shared<const Field>(quadratic ? 2 * m : m, quadratic);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace({m, quadratic}, std::move(made)).first->second;
  }

  [[nodiscard]] value_type slow_binary_mul(value_type a, value_type b) const {
    const value_type poly = kPolynomials[degree_];
    const value_type top = value_type{1} << degree_;
    value_type r = 0;
    while (b != 0) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top) a ^= poly;
    }
    return r;
  }

  // (a0 + a1 y)(b0 + b1 y) with y^2 = y + beta.
  [[nodiscard]] value_type slow_quadratic_mul(value_type a, value_type b) const {
    const int m = degree_ / 2;
    const value_type mask = (value_type{1} << m) - 1;
    const value_type a0 = a & mask, a1 = a >> m, b0 = b & mask, b1 = b >> m;
    const value_type hh = base_->mul(a1, b1);
    const value_type lo = base_->mul(a0, b0) ^ base_->mul(hh, beta_);
    const value_type hi = base_->mul(a0, b1) ^ base_->mul(a1, b0) ^ hh;
    return lo | (hi << m);
  }

  static value_type smallest_trace_one(const Field &base) {
    for (value_type b = 1; b < static_cast<value_type>(base.size()); ++b) {
      value_type t = 0;
      value_type x = b;
      for (int i = 0; i < base.degree(); ++i) {
        t ^= x;
        x = base.mul(x, x);
      }
      if (t == 1) return b;
    }
    throw domain_error("no trace-one element found");
  }

  template <typename Mul>
  value_type find_generator(Mul mul) const {
    const std::uint32_t ord = order();
    std::vector<std::uint32_t> primes;
    std::uint32_t rest = ord;
    for (std::uint32_t p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    }
    if (rest > 1) primes.push_back(rest);
    auto slow_pow = [&](value_type a, std::uint32_t e) {
      value_type r = 1;
      while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
      }
      return r;
    };
    for (value_type g = 2; g < static_cast<value_type>(size()); ++g) {
      bool ok = true;
      for (auto p : primes) {
        if (slow_pow(g, ord / p) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    return 1;  // GF(2): the multiplicative group is trivial.
  }

  template <typename Mul>
  void build_tables(Mul mul, value_type g) {
    const std::uint32_t ord = order();
    if (ord == 1) {
      exp_[0] = 1;
      log_[1] = 0;
      return;
    }
    value_type x = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul(x, g);
    }
    detail::require(x == 1, "field polynomial is not primitive");
  }

  int degree_;
  bool quadratic_;
  value_type beta_ = 0;
  std::shared_ptr<const Field> base_;
  std::vector<value_type> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// A value paired with its field, for convenient scalar arithmetic.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::value_type value) : field_(std::move(field)), value_(value) {
    detail::require(field_ != nullptr, "field element without a field");
    detail::require(field_->contains(value_), "value out of range for " + field_->name());
  }

  [[nodiscard]] Field::value_type value() const { return value_; }
  [[nodiscard]] const FieldPtr &field() const { return field_; }

  friend FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    check_same(a, b);
    return {a.field_, Field::add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement &a, const FieldElement &b) { return a + b; }
  friend FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    check_same(a, b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement &a, const FieldElement &b) {
    check_same(a, b);
    return {a.field_, a.field_->mul(a.value_, a.field_->inv(b.value_))};
  }
  [[nodiscard]] FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  [[nodiscard]] FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
  [[nodiscard]] FieldElement conj() const { return {field_, field_->conj(value_)}; }

  friend bool operator==(const FieldElement &a, const FieldElement &b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  static void check_same(const FieldElement &a, const FieldElement &b) {
    detail::require(a.field_ == b.field_, "field elements from different fields");
  }

  FieldPtr field_;
  Field::value_type value_;
};

class Matrix {
 public:
  using value_type = Field::value_type;

  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    detail::require(field_ != nullptr, "matrix without a field");
  }

  Matrix(FieldPtr field, const std::vector<std::vector<value_type>> &rows)
      : Matrix(field, rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t r = 0; r < rows_; ++r) {
      detail::require(rows[r].size() == cols_, "ragged matrix rows");
      for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
    }
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const FieldPtr &field() const { return field_; }

  [[nodiscard]] value_type at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, value_type v) {
    detail::require(field_->contains(v), "matrix entry out of range for " + field_->name());
    data_[r * cols_ + c] = v;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    return t;
  }

  [[nodiscard]] Matrix conjugate_transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = field_->conj(at(r, c));
    return t;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    detail::require(a.field_ == b.field_, "matrix product across different fields");
    detail::require(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix p(a.field_, a.rows_, b.cols_);
    const Field &f = *a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const value_type x = a.at(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          p.data_[i * p.cols_ + j] ^= f.mul(x, b.at(l, j));
        }
      }
    }
    return p;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Rows of space-separated lowercase hex entries, one row per line.
  [[nodiscard]] std::string to_text() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out << ' ';
        out << std::hex << at(r, c);
      }
      out << '\n';
    }
    return out.str();
  }

  /// Parses rows separated by newlines or ';'. Blank rows are skipped.
  static Matrix parse(FieldPtr field, std::string_view text) {
    std::vector<std::vector<value_type>> rows;
    std::string row_text;
    auto flush = [&]() {
      std::istringstream in(row_text);
      std::vector<value_type> row;
      std::string tok;
      while (in >> tok) {
        std::string_view digits = tok;
        if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
        if (digits.empty() || digits.find_first_not_of("0123456789abcdefABCDEF") != std::string_view::npos) {
          throw parse_error("bad hex matrix entry '" + tok + "'");
        }
        const auto v = std::stoul(std::string(digits), nullptr, 16);
        if (!field->contains(static_cast<value_type>(v)) || v > 0xFFFFFFFFul) {
          throw parse_error("matrix entry '" + tok + "' is outside " + field->name());
        }
        row.push_back(static_cast<value_type>(v));
      }
      if (!row.empty()) {
        if (!rows.empty() && rows.front().size() != row.size()) {
          throw parse_error("matrix rows have different lengths");
        }
        rows.push_back(std::move(row));
      }
      row_text.clear();
    };
    for (char ch : text) {
      if (ch == '\n' || ch == ';') {
        flush();
      } else {
        row_text.push_back(ch);
      }
    }
    flush();
    return Matrix(std::move(field), rows);
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Rank by Gaussian elimination, scanning columns left to right.
inline std::size_t matrix_rank(const Matrix &m) {
  const Field &f = *m.field();
  std::vector<std::vector<Field::value_type>> a(m.rows(), std::vector<Field::value_type>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    const auto inv = f.inv(a[rank][col]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][col] == 0) continue;
      const auto factor = f.mul(a[r][col], inv);
      for (std::size_t c = col; c < m.cols(); ++c) a[r][c] ^= f.mul(factor, a[rank][c]);
    }
    ++rank;
  }
  return rank;
}

/// Classical linear code parameters [n, k, d].
struct ClassicalCode {
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::int64_t d = 1;
};

namespace detail {

inline void check_parity_shape(const ClassicalCode &code, const Matrix &h, const char *label) {
  require(code.n >= 1 && code.k >= 0 && code.k <= code.n && code.d >= 1,
          std::string(label) + ": invalid classical code parameters");
  require(static_cast<std::int64_t>(h.cols()) == code.n,
          std::string(label) + ": parity-check matrix must have n columns");
  require(static_cast<std::int64_t>(h.rows()) == code.n - code.k,
          std::string(label) + ": parity-check matrix must have n - k rows");
}

}  // namespace detail

/// Entanglement-assisted CSS code from two classical codes over GF(q):
/// [[n, k1 + k2 - n + c, >= min(d1, d2); c]]_q with c = rank(H1 H2^T).
inline CodeParams css_construct(const ClassicalCode &c1, const ClassicalCode &c2, const Matrix &h1,
                                const Matrix &h2) {
  detail::check_parity_shape(c1, h1, "C1");
  detail::check_parity_shape(c2, h2, "C2");
  detail::require(c1.n == c2.n, "C1 and C2 must have the same length");
  detail::require(h1.field() == h2.field(), "H1 and H2 must be over the same field");
  const auto c = static_cast<std::int64_t>(matrix_rank(h1 * h2.transpose()));
  CodeParams p{c1.n, c1.k + c2.k - c1.n + c, std::min(c1.d, c2.d), c, h1.field()->size(), true};
  validate(p);
  return p;
}

/// Entanglement-assisted Hermitian code from a classical [n,k,d] code over
/// GF(q^2): [[n, 2k - n + c, >= d; c]]_q with c = rank(H H^dagger).
inline CodeParams hermitian_construct(const ClassicalCode &code, const Matrix &h) {
  detail::require(h.field()->has_conjugation(),
                  h.field()->name() + " is not a square extension; Hermitian construction needs GF(q^2)");
  detail::check_parity_shape(code, h, "C");
  const auto c = static_cast<std::int64_t>(matrix_rank(h * h.conjugate_transpose()));
  CodeParams p{code.n, 2 * code.k - code.n + c, code.d, c, h.field()->conjugation_base(), true};
  validate(p);
  return p;
}

struct EaqmdsResult {
  CodeParams params;
  bool singleton_identity = false;   // n + c - k == 2 (d - 1)
  bool distance_in_net_range = false;  // 2 <= d < n/2 - 1
  bool net_positive = false;          // k > c
};

/// Parameters of the EAQMDS code obtained from an [n, k1, n - k1 + 1]_{q^2} MDS code
/// whose Hermitian hull deficiency is c.
inline EaqmdsResult eaqmds_params(std::int64_t n, std::int64_t k1, std::int64_t c, std::int64_t q) {
  using detail::require;
  require(q >= 2 && is_power_of_two(q), "q must be a power of two");
  require(q + 1 <= n && n <= q * q + 1, "EAQMDS length must satisfy q + 1 <= n <= q^2 + 1");
  require(k1 >= 1 && k1 <= n, "k1 must lie in [1, n]");
  require(c >= 0 && c <= n - k1, "c must lie in [0, n - k1]");
  EaqmdsResult r;
  r.params = CodeParams{n, 2 * k1 - n + c, n - k1 + 1, c, q, false};
  validate(r.params);
  const auto &p = r.params;
  r.singleton_identity = p.n + p.c - p.k == 2 * (p.d - 1);
  r.distance_in_net_range = p.d >= 2 && 2 * p.d < p.n - 2;
  r.net_positive = p.k > p.c;
  return r;
}

}  // namespace eacqc
