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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "eacqc/bounds.hpp"
#include "eacqc/params.hpp"

namespace eacqc {

enum class FamilyId { I, II, III, IV, ASYM };

inline std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::I: return "I";
    case FamilyId::II: return "II";
    case FamilyId::III: return "III";
    case FamilyId::IV: return "IV";
    case FamilyId::ASYM: return "ASYM";
  }
  return "?";
}

inline FamilyId parse_family(std::string_view s) {
  if (s == "I" || s == "1") return FamilyId::I;
  if (s == "II" || s == "2") return FamilyId::II;
  if (s == "III" || s == "3") return FamilyId::III;
  if (s == "IV" || s == "4") return FamilyId::IV;
  if (s == "ASYM" || s == "asym") return FamilyId::ASYM;
  throw parse_error("unknown family '" + std::string(s) + "' (expected I, II, III, IV or ASYM)");
}

struct FamilyMember {
  AnyCodeParams inner;
  AnyCodeParams outer;
  AnyCodeParams result;
};

/// True when (id, n2) is a valid construction input.
inline bool in_construction_range(FamilyId id, std::int64_t n2) {
  switch (id) {
    case FamilyId::I:
    case FamilyId::III: return n2 >= 3 && n2 % 2 == 1;
    case FamilyId::II:
    case FamilyId::IV: return n2 >= 4 && n2 % 2 == 0;
    case FamilyId::ASYM: return n2 >= 2;
  }
  return false;
}

/// True when the bound violation is asserted for (id, n2), not merely explored.
inline bool in_claim_range(FamilyId id, std::int64_t n2) {
  switch (id) {
    case FamilyId::I: return n2 >= 3 && n2 % 2 == 1;
    case FamilyId::II: return n2 >= 10 && n2 % 2 == 0;
    case FamilyId::III: return n2 >= 11 && n2 % 2 == 1;
    case FamilyId::IV: return n2 >= 32 && n2 % 2 == 0;
    case FamilyId::ASYM: return (n2 >= 3 && n2 % 2 == 1) || (n2 >= 8 && n2 % 2 == 0);
  }
  return false;
}

inline FamilyMember build_family(FamilyId id, std::int64_t n2, std::optional<std::int64_t> n1 = {}) {
  detail::require(in_construction_range(id, n2),
                  "n2 = " + std::to_string(n2) + " is outside the construction range of family " +
                      std::string(family_name(id)));
  const std::int64_t d2 = (n2 % 2 == 1) ? n2 : n2 - 1;
  if (id == FamilyId::ASYM) {
    detail::require(n1.has_value() && *n1 >= 2, "family ASYM needs n1 >= 2");
    AsymCodeParams inner{*n1, 1, *n1, 1, 0, 2};
    AsymCodeParams outer{n2, 1, d2, d2, n2 - 1, 2};
    return {inner, outer, concat_asym(inner, outer)};
  }
  detail::require(!n1.has_value(), "n1 applies to family ASYM only");
  const bool five_qubit = id == FamilyId::I || id == FamilyId::II;
  const CodeParams inner = five_qubit ? CodeParams{5, 1, 3, 0, 2, false} : CodeParams{4, 1, 3, 1, 2, false};
  const CodeParams outer{n2, 1, d2, n2 - 1, 2, false};
  return {inner, outer, concat(inner, outer)};
}

struct ScanEntry {
  std::int64_t n2 = 0;
  AnyCodeParams code;
  BoundVerdict verdict;
  bool claimed = false;
};

inline BoundVerdict check_bound(const AnyCodeParams &code) {
  return std::visit(
      [](const auto &p) -> BoundVerdict {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, CodeParams>) {
          return ea_hamming_check(p);
        } else {
          return asym_hamming_check(p);
        }
      },
      code);
}

/// Builds and checks every admissible member with n2 in [lo, hi], ordered by n2.
/// `threads` > 1 splits the members across worker threads; output is unchanged.
inline std::vector<ScanEntry> scan_violations(FamilyId id, std::int64_t lo, std::int64_t hi,
                                              std::optional<std::int64_t> n1 = {},
                                              unsigned threads = 1) {
  std::vector<std::int64_t> members;
  for (std::int64_t n2 = std::max<std::int64_t>(lo, 0); n2 <= hi; ++n2) {
    if (in_construction_range(id, n2)) members.push_back(n2);
  }
  detail::require(!members.empty(), "no admissible n2 in the requested range for family " +
                                        std::string(family_name(id)));
  std::vector<ScanEntry> out(members.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t idx = begin; idx < members.size(); idx += stride) {
      const auto n2 = members[idx];
      auto member = build_family(id, n2, n1);
      out[idx] = ScanEntry{n2, member.result, check_bound(member.result), in_claim_range(id, n2)};
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(members.size())));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  return out;
}

/// For family I with n2 = 2 m2 + 1, the single i = 3 m2 + 1 term of the
/// Hamming sum already exceeds 2^{6 n2 - 2}.
inline bool family_one_single_term_exceeds(std::int64_t n2) {
  detail::require(n2 >= 3 && n2 % 2 == 1, "family I needs odd n2 >= 3");
  const std::int64_t m2 = (n2 - 1) / 2;
  const BigInt term = pow_big(3, 3 * m2 + 1) * binom(10 * m2 + 5, 3 * m2 + 1);
  return term > pow_big(2, 6 * n2 - 2);
}

}  // namespace eacqc
