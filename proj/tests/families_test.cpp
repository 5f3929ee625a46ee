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

#include "eacqc/families.hpp"

#include <gtest/gtest.h>

using namespace eacqc;

TEST(Family, FirstMembers) {
  EXPECT_EQ(std::get<CodeParams>(build_family(FamilyId::I, 3).result), (CodeParams{15, 1, 9, 2, 2, true}));
  EXPECT_EQ(std::get<CodeParams>(build_family(FamilyId::II, 10).result), (CodeParams{50, 1, 27, 9, 2, true}));
  EXPECT_EQ(std::get<CodeParams>(build_family(FamilyId::III, 11).result), (CodeParams{44, 1, 33, 21, 2, true}));
  EXPECT_EQ(std::get<CodeParams>(build_family(FamilyId::IV, 32).result), (CodeParams{128, 1, 93, 63, 2, true}));
  EXPECT_EQ(std::get<AsymCodeParams>(build_family(FamilyId::ASYM, 3, 2).result), (AsymCodeParams{6, 1, 6, 3, 2, 2}));
}

TEST(Family, ResultEqualsConcatOfParts) {
  for (auto id : {FamilyId::I, FamilyId::II, FamilyId::III, FamilyId::IV}) {
    for (std::int64_t n2 = 3; n2 <= 60; ++n2) {
      if (!in_construction_range(id, n2)) continue;
      const auto m = build_family(id, n2);
      EXPECT_EQ(std::get<CodeParams>(m.result),
                concat(std::get<CodeParams>(m.inner), std::get<CodeParams>(m.outer)));
    }
  }
}

TEST(Family, ConstructionRanges) {
  EXPECT_THROW(build_family(FamilyId::I, 4), domain_error);
  EXPECT_THROW(build_family(FamilyId::II, 5), domain_error);
  EXPECT_THROW(build_family(FamilyId::I, 1), domain_error);
  EXPECT_THROW(build_family(FamilyId::ASYM, 3), domain_error);
  EXPECT_THROW(build_family(FamilyId::ASYM, 3, 1), domain_error);
  EXPECT_THROW(build_family(FamilyId::I, 3, 2), domain_error);
  EXPECT_NO_THROW(build_family(FamilyId::II, 4));
}

TEST(Family, ClaimRanges) {
  EXPECT_TRUE(in_claim_range(FamilyId::I, 3));
  EXPECT_FALSE(in_claim_range(FamilyId::II, 8));
  EXPECT_TRUE(in_claim_range(FamilyId::II, 10));
  EXPECT_FALSE(in_claim_range(FamilyId::III, 9));
  EXPECT_TRUE(in_claim_range(FamilyId::III, 11));
  EXPECT_FALSE(in_claim_range(FamilyId::IV, 30));
  EXPECT_TRUE(in_claim_range(FamilyId::IV, 32));
  EXPECT_FALSE(in_claim_range(FamilyId::ASYM, 6));
  EXPECT_TRUE(in_claim_range(FamilyId::ASYM, 8));
}

TEST(Family, ClaimedMembersViolate) {
  for (auto [id, lo, hi] : {std::tuple{FamilyId::I, 3, 101}, std::tuple{FamilyId::II, 10, 100},
                            std::tuple{FamilyId::III, 11, 101}, std::tuple{FamilyId::IV, 32, 100}}) {
    for (const auto &e : scan_violations(id, lo, hi)) {
      EXPECT_TRUE(e.claimed);
      EXPECT_FALSE(e.verdict.satisfied) << family_name(id) << " n2=" << e.n2;
    }
  }
}

TEST(Family, UnclaimedSmallMembersCanSatisfy) {
  // Below the claim range the bound is not always violated.
  bool any_satisfied = false;
  for (const auto &e : scan_violations(FamilyId::IV, 4, 30)) {
    EXPECT_FALSE(e.claimed);
    any_satisfied = any_satisfied || e.verdict.satisfied;
  }
  EXPECT_TRUE(any_satisfied);
}

TEST(Family, AsymmetricViolationsAcrossInnerLengths) {
  for (std::int64_t n1 = 2; n1 <= 5; ++n1) {
    for (const auto &e : scan_violations(FamilyId::ASYM, 3, 15, n1)) {
      if (e.n2 % 2 == 0) continue;
      EXPECT_FALSE(e.verdict.satisfied) << "n1=" << n1 << " n2=" << e.n2;
    }
  }
}

TEST(Family, ScanMatchesCheckBound) {
  for (const auto &e : scan_violations(FamilyId::II, 4, 40)) {
    const auto v = check_bound(build_family(FamilyId::II, e.n2).result);
    EXPECT_EQ(v.lhs, e.verdict.lhs);
    EXPECT_EQ(v.rhs, e.verdict.rhs);
  }
}

TEST(Family, ThreadCountDoesNotChangeOutput) {
  const auto one = scan_violations(FamilyId::III, 3, 151, std::nullopt, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto many = scan_violations(FamilyId::III, 3, 151, std::nullopt, threads);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].n2, many[i].n2);
      EXPECT_EQ(one[i].verdict.lhs, many[i].verdict.lhs);
      EXPECT_EQ(one[i].verdict.rhs, many[i].verdict.rhs);
      EXPECT_EQ(one[i].claimed, many[i].claimed);
    }
  }
}

TEST(Family, SingleTermExceedsForFamilyOne) {
  for (std::int64_t n2 = 3; n2 <= 201; n2 += 2) EXPECT_TRUE(family_one_single_term_exceeds(n2)) << n2;
  EXPECT_THROW(family_one_single_term_exceeds(4), domain_error);
}

TEST(Family, EmptyScanRejected) {
  EXPECT_THROW(scan_violations(FamilyId::IV, 4, 3), domain_error);
}

TEST(Family, ParseNames) {
  EXPECT_EQ(parse_family("III"), FamilyId::III);
  EXPECT_EQ(parse_family("4"), FamilyId::IV);
  EXPECT_EQ(parse_family("asym"), FamilyId::ASYM);
  EXPECT_THROW(parse_family("V"), parse_error);
}
