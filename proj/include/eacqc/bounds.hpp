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

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "eacqc/error.hpp"
#include "eacqc/params.hpp"

namespace eacqc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, i); zero outside 0 <= i <= n.
inline BigInt binom(std::int64_t n, std::int64_t i) {
  if (n < 0 || i < 0 || i > n) return BigInt{0};
  if (i > n - i) i = n - i;
  BigInt r = 1;
  for (std::int64_t j = 1; j <= i; ++j) {
    r *= n - i + j;
    r /= j;
  }
  return r;
}

inline BigInt pow_big(std::int64_t base, std::int64_t e) {
  detail::require(e >= 0, "negative exponent");
  return boost::multiprecision::pow(BigInt{base}, static_cast<unsigned>(e));
}

/// log2 of a positive big integer, good to double precision.
inline double log2_big(const BigInt &v) {
  detail::require(v > 0, "log2 of a non-positive integer");
  const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(v)) + 1;
  if (bits <= 60) return std::log2(v.convert_to<double>());
  const std::int64_t shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

struct BoundVerdict {
  BigInt lhs;
  BigInt rhs;
  bool satisfied = true;
  double margin_log2 = 0.0;  // log2(rhs) - log2(lhs), for display only.
};

namespace detail {

inline BoundVerdict make_verdict(BigInt lhs, BigInt rhs) {
  BoundVerdict v;
  v.satisfied = lhs <= rhs;
  v.margin_log2 = log2_big(rhs) - log2_big(lhs);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

inline BigInt ball_size(std::int64_t n, std::int64_t radius, std::int64_t weight_base) {
  BigInt total = 0;
  BigInt w = 1;
  for (std::int64_t i = 0; i <= radius && i <= n; ++i) {
    total += w * binom(n, i);
    w *= weight_base;
  }
  return total;
}

}  // namespace detail

/// Nondegenerate entanglement-assisted Hamming bound for binary [[n,k,d;c]]:
/// sum_{i <= (d-1)/2} 3^i C(n,i) <= 2^{n+c-k}.
inline BoundVerdict ea_hamming_check(const CodeParams &p) {
  validate(p);
  detail::require(p.q == 2, "the Hamming bound check is defined for binary codes only");
  const std::int64_t t = (p.d - 1) / 2;
  return detail::make_verdict(detail::ball_size(p.n, t, 3), pow_big(2, p.n + p.c - p.k));
}

/// Asymmetric variant: (sum_{i <= (dx-1)/2} C(n,i)) (sum_{j <= (dz-1)/2} C(n,j)) <= 2^{n+c-k}.
inline BoundVerdict asym_hamming_check(const AsymCodeParams &p) {
  validate(p);
  detail::require(p.q == 2, "the Hamming bound check is defined for binary codes only");
  BigInt lhs = detail::ball_size(p.n, (p.d_x - 1) / 2, 1) * detail::ball_size(p.n, (p.d_z - 1) / 2, 1);
  return detail::make_verdict(std::move(lhs), pow_big(2, p.n + p.c - p.k));
}

/// H2(x) = -x log2 x - (1-x) log2 (1-x), with H2(0) = H2(1) = 0.
inline double binary_entropy(double x) {
  detail::require(x >= 0.0 && x <= 1.0, "binary entropy argument must lie in [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Limit of the rate bound: 1 + c/n - (delta/2) log2 3 - H2(delta/2).
inline double asymptotic_rate_bound(double delta, double c_over_n) {
  detail::require(delta >= 0.0 && delta <= 1.0, "delta must lie in [0,1]");
  detail::require(c_over_n >= 0.0, "c/n must be non-negative");
  return 1.0 + c_over_n - (delta / 2.0) * std::log2(3.0) - binary_entropy(delta / 2.0);
}

/// Entropy estimates bracketing C(n, i) for 1 < i < n.
inline std::pair<double, double> binom_entropy_bounds(std::int64_t n, std::int64_t i) {
  detail::require(n >= 2, "n must be >= 2");
  detail::require(i > 1 && i < n, "i must satisfy 1 < i < n");
  const double nd = static_cast<double>(n);
  const double alpha = static_cast<double>(i) / nd;
  const double numer = std::exp2(nd * binary_entropy(alpha));
  const double spread = nd * alpha * (1.0 - alpha);
  const double pi = 3.14159265358979323846;
  return {numer / std::sqrt(8.0 * spread), numer / std::sqrt(2.0 * pi * spread)};
}

}  // namespace eacqc
