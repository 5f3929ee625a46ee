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

#include "eacqc/gf.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace eacqc;

namespace {

// Shift-and-add multiplication modulo a primitive polynomial.
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, int m, std::uint32_t poly) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m) a ^= poly;
  }
  return r;
}

// Rank over GF(2) with rows packed into bitmasks.
std::size_t gf2_rank_rows(std::vector<std::uint32_t> rows) {
  std::size_t rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](auto r) { return (r >> bit) & 1; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

Matrix random_matrix(const FieldPtr &f, std::size_t r, std::size_t c, std::mt19937 &rng) {
  std::uniform_int_distribution<std::uint32_t> val(0, static_cast<std::uint32_t>(f->size() - 1));
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, val(rng));
  return m;
}

}  // namespace

TEST(Field, BinaryMultiplicationMatchesShiftAndAdd) {
  const std::uint32_t polys[] = {0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x5B, 0x83, 0x11D};
  for (int m = 1; m <= 8; ++m) {
    const auto f = Field::binary(m);
    for (std::uint32_t a = 0; a < f->size(); ++a)
      for (std::uint32_t b = 0; b < f->size(); ++b)
        ASSERT_EQ(f->mul(a, b), clmul_mod(a, b, m, polys[m])) << "m=" << m;
  }
}

TEST(Field, AxiomsSmallFields) {
  std::vector<FieldPtr> fields;
  for (int m = 1; m <= 4; ++m) fields.push_back(Field::binary(m));
  for (int m = 1; m <= 2; ++m) fields.push_back(Field::quadratic(m));
  for (const auto &f : fields) {
    const auto q = static_cast<std::uint32_t>(f->size());
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f->mul(a, 1), a);
      EXPECT_EQ(f->mul(a, 0), 0u);
      if (a) {
        EXPECT_EQ(f->mul(a, f->inv(a)), 1u) << f->name();
      }
      EXPECT_EQ(f->pow(a, q), a);  // Frobenius fixes every element
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          EXPECT_EQ(f->mul(a, Field::add(b, c)), Field::add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, GeneratorHasFullOrder) {
  for (int m = 1; m <= 8; ++m) {
    for (auto f : {Field::binary(m), Field::quadratic(m)}) {
      const auto g = f->generator();
      std::uint32_t x = g;
      std::uint32_t order = 1;
      while (x != 1) {
        x = f->mul(x, g);
        ++order;
      }
      EXPECT_EQ(order, f->order()) << f->name();
    }
  }
}

TEST(Field, ConjugationFastPathMatchesPower) {
  for (int m = 1; m <= 8; ++m) {
    const auto f = Field::quadratic(m);
    for (std::uint32_t a = 0; a < f->size(); ++a) {
      ASSERT_EQ(f->conj(a), f->pow(a, f->conjugation_base())) << f->name() << " a=" << a;
      ASSERT_EQ(f->conj(f->conj(a)), a);
    }
  }
}

TEST(Field, ConjugationOnEvenBinaryFields) {
  const auto f = Field::binary(4);
  ASSERT_TRUE(f->has_conjugation());
  for (std::uint32_t a = 0; a < 16; ++a) {
    EXPECT_EQ(f->conj(a), f->pow(a, 4));
    for (std::uint32_t b = 0; b < 16; ++b) EXPECT_EQ(f->conj(f->mul(a, b)), f->mul(f->conj(a), f->conj(b)));
  }
  EXPECT_THROW((void)Field::binary(3)->conj(1), domain_error);
}

TEST(Field, SizesAndErrors) {
  EXPECT_EQ(Field::of_size(8)->size(), 8);
  EXPECT_EQ(Field::square_of(4)->size(), 16);
  EXPECT_EQ(Field::square_of(4)->conjugation_base(), 4);
  EXPECT_EQ(Field::binary(3), Field::binary(3));
  EXPECT_THROW(Field::of_size(3), domain_error);
  EXPECT_THROW(Field::binary(9), domain_error);
  EXPECT_THROW((void)Field::binary(2)->inv(0), domain_error);
}

TEST(FieldElement, Operators) {
  const auto f = Field::binary(3);
  const FieldElement a(f, 3), b(f, 6);
  EXPECT_EQ((a + b).value(), 5u);
  EXPECT_EQ((a * b).value(), clmul_mod(3, 6, 3, 0xB));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.inverse() * a, FieldElement(f, 1));
  EXPECT_EQ(a.pow(7), FieldElement(f, 1));
  EXPECT_THROW(FieldElement(f, 8), domain_error);
  EXPECT_THROW(a + FieldElement(Field::binary(2), 1), domain_error);
}

TEST(Matrix, RankMatchesBitmaskEliminationOverGf2) {
  std::mt19937 rng(5);
  const auto f = Field::binary(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 9, c = 1 + rng() % 12;
    const auto m = random_matrix(f, r, c, rng);
    std::vector<std::uint32_t> rows(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) rows[i] |= m.at(i, j) << j;
    EXPECT_EQ(matrix_rank(m), gf2_rank_rows(rows));
  }
}

TEST(Matrix, RankOfTransposeEqualsRank) {
  std::mt19937 rng(9);
  for (int m = 1; m <= 8; ++m) {
    const auto f = Field::binary(m);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_matrix(f, 1 + rng() % 6, 1 + rng() % 6, rng);
      EXPECT_EQ(matrix_rank(a), matrix_rank(a.transpose()));
    }
  }
}

TEST(Matrix, LowRankProduct) {
  std::mt19937 rng(13);
  const auto f = Field::binary(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(f, 6, 2, rng);
    const auto b = random_matrix(f, 2, 7, rng);
    EXPECT_LE(matrix_rank(a * b), 2u);
  }
}

TEST(Matrix, VandermondeHasFullRank) {
  const auto f = Field::binary(3);
  Matrix v(f, 3, 5);
  for (std::uint32_t j = 0; j < 5; ++j)
    for (std::uint32_t i = 0; i < 3; ++i) v.set(i, j, f->pow(j + 1, i));
  EXPECT_EQ(matrix_rank(v), 3u);
}

TEST(Matrix, ConjugateTransposeIdentities) {
  std::mt19937 rng(17);
  const auto f = Field::quadratic(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(f, 3, 4, rng);
    const auto b = random_matrix(f, 4, 2, rng);
    EXPECT_EQ(a.conjugate_transpose().conjugate_transpose(), a);
    EXPECT_EQ((a * b).conjugate_transpose(), b.conjugate_transpose() * a.conjugate_transpose());
    EXPECT_EQ(matrix_rank(a), matrix_rank(a.conjugate_transpose()));
  }
}

TEST(Matrix, IdentityAndEmpty) {
  const auto f = Field::binary(2);
  EXPECT_EQ(matrix_rank(Matrix::identity(f, 5)), 5u);
  EXPECT_EQ(matrix_rank(Matrix(f, 0, 4)), 0u);
  EXPECT_EQ(matrix_rank(Matrix(f, 3, 4)), 0u);
}

TEST(Matrix, ParseAndText) {
  const auto f = Field::binary(4);
  const auto m = Matrix::parse(f, "1 a 0; f 3 2");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.at(0, 1), 10u);
  EXPECT_EQ(m.at(1, 0), 15u);
  EXPECT_EQ(Matrix::parse(f, m.to_text()), m);
  EXPECT_EQ(Matrix::parse(f, "1 0\n0 1\n"), Matrix::identity(f, 2));
  EXPECT_THROW(Matrix::parse(f, "1 2; 3"), parse_error);
  EXPECT_THROW(Matrix::parse(f, "1 g"), parse_error);
  EXPECT_THROW(Matrix::parse(f, "10"), parse_error);
}

TEST(Construct, CssRepetitionNeedsTwoEbits) {
  const auto f = Field::binary(1);
  const auto h = Matrix::parse(f, "1 1 0; 0 1 1");
  const auto p = css_construct({3, 1, 3}, {3, 1, 3}, h, h);
  EXPECT_EQ(p, (CodeParams{3, 1, 3, 2, 2, true}));
}

TEST(Construct, CssHammingIsSelfOrthogonal) {
  const auto f = Field::binary(1);
  const auto h = Matrix::parse(f, "1 0 1 0 1 0 1; 0 1 1 0 0 1 1; 0 0 0 1 1 1 1");
  const auto p = css_construct({7, 4, 3}, {7, 4, 3}, h, h);
  EXPECT_EQ(p, (CodeParams{7, 1, 3, 0, 2, true}));
}

TEST(Construct, CssShapeErrors) {
  const auto f = Field::binary(1);
  const auto h = Matrix::parse(f, "1 1 0; 0 1 1");
  EXPECT_THROW(css_construct({3, 2, 2}, {3, 1, 3}, h, h), domain_error);
  EXPECT_THROW(css_construct({4, 2, 2}, {3, 1, 3}, h, h), domain_error);
  EXPECT_THROW(css_construct({3, 1, 3}, {3, 1, 3}, h, Matrix::parse(Field::binary(2), "1 1 0; 0 1 1")),
               domain_error);
}

TEST(Construct, HermitianAllOnes) {
  const auto f = Field::quadratic(1);
  const auto p = hermitian_construct({3, 2, 2}, Matrix::parse(f, "1 1 1"));
  EXPECT_EQ(p, (CodeParams{3, 2, 2, 1, 2, true}));
}

TEST(Construct, HermitianZeroMatrixNeedsNoEbits) {
  const auto f = Field::quadratic(1);
  const auto p = hermitian_construct({4, 2, 1}, Matrix(f, 2, 4));
  EXPECT_EQ(p.c, 0);
  EXPECT_EQ(p.k, 0);
}

TEST(Construct, HermitianRejectsOddExtension) {
  EXPECT_THROW(hermitian_construct({3, 2, 2}, Matrix::parse(Field::binary(3), "1 1 1")), domain_error);
}

TEST(Construct, HermitianSelfOrthogonalFiveQubit) {
  // Search for a 2x5 parity check over GF(4) whose code is [5,3,3] (every pair
  // of columns independent) and with H H^dagger = 0.
  const auto f = Field::quadratic(1);
  std::optional<Matrix> found;
  for (std::uint32_t code = 0; code < (1u << 20) && !found; ++code) {
    Matrix h(f, 2, 5);
    for (int j = 0; j < 10; ++j) h.set(j / 5, j % 5, (code >> (2 * j)) & 3);
    bool mds = true;
    for (int a = 0; a < 5 && mds; ++a) {
      for (int b = a + 1; b < 5 && mds; ++b) {
        Matrix pair(f, 2, 2);
        for (int r = 0; r < 2; ++r) {
          pair.set(r, 0, h.at(r, a));
          pair.set(r, 1, h.at(r, b));
        }
        mds = matrix_rank(pair) == 2;
      }
    }
    if (mds && matrix_rank(h * h.conjugate_transpose()) == 0) found = h;
  }
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(hermitian_construct({5, 3, 3}, *found), (CodeParams{5, 1, 3, 0, 2, true}));
}

TEST(Construct, EaqmdsExamples) {
  const auto a = eaqmds_params(17, 9, 4, 4);
  EXPECT_EQ(a.params, (CodeParams{17, 5, 9, 4, 4, false}));
  EXPECT_TRUE(a.singleton_identity);
  EXPECT_TRUE(a.net_positive);
  const auto b = eaqmds_params(65, 33, 16, 8);
  EXPECT_EQ(b.params, (CodeParams{65, 17, 33, 16, 8, false}));
  EXPECT_TRUE(b.singleton_identity);
}

TEST(Construct, EaqmdsSingletonIdentityAlwaysHolds) {
  for (std::int64_t q : {2, 4, 8}) {
    for (std::int64_t n = q + 1; n <= q * q + 1; ++n) {
      for (std::int64_t k1 = 1; k1 <= n; ++k1) {
        for (std::int64_t c = 0; c <= n - k1; ++c) {
          if (2 * k1 - n + c < 0) continue;
          EXPECT_TRUE(eaqmds_params(n, k1, c, q).singleton_identity);
        }
      }
    }
  }
}

TEST(Construct, EaqmdsRanges) {
  EXPECT_THROW(eaqmds_params(4, 2, 0, 4), domain_error);
  EXPECT_THROW(eaqmds_params(18, 2, 0, 4), domain_error);
  EXPECT_THROW(eaqmds_params(17, 9, 9, 4), domain_error);
  EXPECT_THROW(eaqmds_params(17, 9, 4, 3), domain_error);
}
