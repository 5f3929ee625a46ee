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

#include "eacqc/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace eacqc;

namespace {

// Pascal's triangle in 128-bit integers; exact up to n = 120.
std::vector<std::vector<unsigned __int128>> pascal(int rows) {
  std::vector<std::vector<unsigned __int128>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int i = 1; i < n; ++i) t[n][i] = t[n - 1][i - 1] + t[n - 1][i];
  }
  return t;
}

BigInt to_big(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

}  // namespace

TEST(Binom, MatchesPascal) {
  const auto t = pascal(120);
  for (int n = 0; n <= 120; ++n)
    for (int i = 0; i <= n; ++i) ASSERT_EQ(binom(n, i), to_big(t[n][i])) << n << "," << i;
}

TEST(Binom, KnownValues) {
  EXPECT_EQ(binom(50, 13), BigInt(354860518600ull));
  EXPECT_EQ(binom(15, 4), 1365);
  EXPECT_EQ(binom(7, 9), 0);
  EXPECT_EQ(binom(400, 200) * binom(200, 100), binom(400, 100) * binom(300, 100));
}

TEST(Binom, ZeroOutsideRange) {
  EXPECT_EQ(binom(-1, 0), 0);
  EXPECT_EQ(binom(3, -1), 0);
}

TEST(Hamming, ConcatenatedBowenViolates) {
  const auto v = ea_hamming_check(CodeParams{15, 1, 9, 2, 2, true});
  EXPECT_EQ(v.lhs, 123841);
  EXPECT_EQ(v.rhs, 65536);
  EXPECT_FALSE(v.satisfied);
  EXPECT_LT(v.margin_log2, 0.0);
}

TEST(Hamming, PerfectCodesMeetWithEquality) {
  // [[(4^m - 1)/3, n - 2m, 3]] stabilizer codes.
  for (int m = 2; m <= 6; ++m) {
    const std::int64_t n = ((std::int64_t{1} << (2 * m)) - 1) / 3;
    const auto v = ea_hamming_check(CodeParams{n, n - 2 * m, 3, 0, 2, false});
    EXPECT_EQ(v.lhs, v.rhs) << n;
    EXPECT_TRUE(v.satisfied);
    EXPECT_DOUBLE_EQ(v.margin_log2, 0.0);
  }
  const auto five = ea_hamming_check(CodeParams{5, 1, 3, 0, 2, false});
  EXPECT_EQ(five.lhs, 16);
  EXPECT_EQ(five.rhs, 16);
}

TEST(Hamming, ExtraEbitDoublesRhs) {
  for (std::int64_t n = 3; n <= 40; n += 3) {
    for (std::int64_t c = 0; c < n; c += 4) {
      const auto a = ea_hamming_check(CodeParams{n, 1, 5, c, 2, false});
      const auto b = ea_hamming_check(CodeParams{n, 1, 5, c + 1, 2, false});
      EXPECT_EQ(b.rhs, 2 * a.rhs);
      EXPECT_EQ(a.lhs, b.lhs);
    }
  }
}

TEST(Hamming, LhsMatchesPascalSum) {
  // 3^i C(n,i) summed over i <= 29 stays below 2^128 for n <= 60.
  const auto t = pascal(60);
  for (int n = 1; n <= 60; n += 3) {
    for (int d = 1; d <= n; d += 5) {
      unsigned __int128 sum = 0, pow3 = 1;
      for (int i = 0; i <= (d - 1) / 2; ++i, pow3 *= 3) sum += pow3 * t[n][i];
      EXPECT_EQ(ea_hamming_check(CodeParams{n, 0, d, 0, 2, false}).lhs, to_big(sum));
    }
  }
}

TEST(Hamming, RejectsNonBinary) {
  EXPECT_THROW(ea_hamming_check(CodeParams{17, 5, 9, 4, 4, false}), domain_error);
}

TEST(AsymHamming, RepetitionMemberViolates) {
  const auto v = asym_hamming_check(AsymCodeParams{6, 1, 6, 3, 2, 2});
  EXPECT_EQ(v.lhs, 154);
  EXPECT_EQ(v.rhs, 128);
  EXPECT_FALSE(v.satisfied);
}

TEST(AsymHamming, SymmetricCaseIsProductOfBinarySums) {
  // For d_z = d_x = d the count is (sum_i C(n,i))^2 over the radius.
  const auto t = pascal(60);
  for (int n = 3; n <= 60; n += 5) {
    const int d = n / 2;
    unsigned __int128 s = 0;
    for (int i = 0; i <= (d - 1) / 2; ++i) s += t[n][i];
    EXPECT_EQ(asym_hamming_check(AsymCodeParams{n, 1, d, d, 0, 2}).lhs, to_big(s * s));
  }
}

TEST(Entropy, BinaryEntropyValues) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_NEAR(binary_entropy(0.11), binary_entropy(0.89), 1e-15);
  EXPECT_THROW(binary_entropy(-0.1), domain_error);
}

TEST(Entropy, RateBound) {
  EXPECT_NEAR(asymptotic_rate_bound(0.6, 0.2), -0.15677964944703948, 1e-12);
  EXPECT_NEAR(asymptotic_rate_bound(0.75, 0.5), -0.04879494069539858, 1e-12);
  // Direct evaluation of 1 + c/n - (delta/2) log2 3 - H2(delta/2).
  const double delta = 0.3, ratio = 0.1, h = delta / 2;
  const double direct = 1 + ratio - h * std::log2(3.0) + h * std::log2(h) + (1 - h) * std::log2(1 - h);
  EXPECT_NEAR(asymptotic_rate_bound(delta, ratio), direct, 1e-14);
}

TEST(Entropy, BracketValues) {
  auto [lo, hi] = binom_entropy_bounds(10, 5);
  EXPECT_NEAR(lo, 228.97336089597846, 1e-9);
  EXPECT_NEAR(hi, 258.3687702548644, 1e-9);
  auto [lo4, hi4] = binom_entropy_bounds(4, 2);
  EXPECT_NEAR(lo4, 5.65685424949238, 1e-12);
  EXPECT_NEAR(hi4, 6.383076486422923, 1e-12);
}

TEST(Entropy, BracketsContainBinomial) {
  for (int n = 3; n <= 200; ++n) {
    for (int i = 2; i < n; ++i) {
      const auto [lo, hi] = binom_entropy_bounds(n, i);
      const double exact = binom(n, i).convert_to<double>();
      ASSERT_LE(lo, exact * (1 + 1e-12)) << n << "," << i;
      ASSERT_GE(hi, exact * (1 - 1e-12)) << n << "," << i;
    }
  }
}

TEST(Entropy, BracketRejectsEdges) {
  EXPECT_THROW(binom_entropy_bounds(10, 1), domain_error);
  EXPECT_THROW(binom_entropy_bounds(10, 10), domain_error);
}
