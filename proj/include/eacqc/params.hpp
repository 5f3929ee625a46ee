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

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eacqc/error.hpp"

namespace eacqc {

/// Parameters [[n,k,d;c]]_q of an entanglement-assisted stabilizer code.
///
/// `c` counts the maximally entangled pairs (ebits, or edits for q > 2)
/// consumed. `d` is a designed distance; `d_is_lower_bound` marks it as a
/// guarantee d_true >= d rather than the exact minimum distance.
struct CodeParams {
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::int64_t d = 1;
  std::int64_t c = 0;
  std::int64_t q = 2;
  bool d_is_lower_bound = false;

  [[nodiscard]] std::int64_t net_transmission() const { return k - c; }

  friend bool operator==(const CodeParams &, const CodeParams &) = default;
};

/// Asymmetric parameters [[n,k,dz/dx;c]]_q with separate Z and X distances.
struct AsymCodeParams {
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::int64_t d_z = 1;
  std::int64_t d_x = 1;
  std::int64_t c = 0;
  std::int64_t q = 2;

  [[nodiscard]] std::int64_t net_transmission() const { return k - c; }

  friend bool operator==(const AsymCodeParams &, const AsymCodeParams &) = default;
};

/// One inner code of a mixed concatenation and how many outer symbols use it.
struct InnerEntry {
  CodeParams code;
  std::int64_t multiplicity = 1;

  friend bool operator==(const InnerEntry &, const InnerEntry &) = default;
};

/// Multiset of inner codes; all entries share k and d.
struct MixedInnerSpec {
  std::vector<InnerEntry> entries;

  [[nodiscard]] std::int64_t total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto &e : entries) total += e.multiplicity;
    return total;
  }
  [[nodiscard]] std::int64_t total_length() const {
    std::int64_t total = 0;
    for (const auto &e : entries) total += e.code.n * e.multiplicity;
    return total;
  }
  [[nodiscard]] std::int64_t total_ebits() const {
    std::int64_t total = 0;
    for (const auto &e : entries) total += e.code.c * e.multiplicity;
    return total;
  }

  friend bool operator==(const MixedInnerSpec &, const MixedInnerSpec &) = default;
};

[[nodiscard]] constexpr bool is_power_of_two(std::int64_t v) {
  return v > 0 && (v & (v - 1)) == 0;
}

inline void validate(const CodeParams &p) {
  using detail::require;
  require(p.n >= 1, "code length n must be >= 1");
  require(p.k >= 0, "logical dimension k must be >= 0");
  require(p.d >= 1, "distance d must be >= 1");
  require(p.c >= 0, "ebit count c must be >= 0");
  require(p.c <= p.n, "ebit count c must not exceed n");
  require(p.k <= p.n + p.c, "k must not exceed n + c");
  require(p.q >= 2 && is_power_of_two(p.q), "alphabet q must be a power of two >= 2");
}

inline void validate(const AsymCodeParams &p) {
  using detail::require;
  require(p.n >= 1, "code length n must be >= 1");
  require(p.k >= 0, "logical dimension k must be >= 0");
  require(p.d_x >= 1, "d_x must be >= 1");
  require(p.d_z >= p.d_x, "asymmetric codes require d_z >= d_x");
  require(p.c >= 0 && p.c <= p.n, "ebit count c must lie in [0, n]");
  require(p.k <= p.n + p.c, "k must not exceed n + c");
  require(p.q >= 2 && is_power_of_two(p.q), "alphabet q must be a power of two >= 2");
}

namespace detail {

inline std::int64_t pow2_checked(std::int64_t e) {
  require(e >= 0 && e < 62, "2^k overflows the alphabet range");
  return std::int64_t{1} << e;
}

}  // namespace detail

/// Concatenates `inner` (binary) with `outer` over GF(2^{inner.k}).
///
/// The result is [[n1 n2, k1 k2, d1 d2; c1 n2 + c2 k1]] over qubits. Its
/// distance is a lower bound except when one factor is a trivial exact
/// length-1 code, in which case the other code is returned unchanged.
inline CodeParams concat(const CodeParams &inner, const CodeParams &outer) {
  validate(inner);
  validate(outer);
  detail::require(inner.k >= 1, "inner code must encode at least one qubit");
  detail::require(inner.q == 2, "inner code must be binary");
  detail::require(outer.q == detail::pow2_checked(inner.k),
                  "outer alphabet must equal 2^k of the inner code");
  CodeParams r;
  r.n = inner.n * outer.n;
  r.k = inner.k * outer.k;
  r.d = inner.d * outer.d;
  r.c = inner.c * outer.n + outer.c * inner.k;
  r.q = 2;
  const bool both_exact = !inner.d_is_lower_bound && !outer.d_is_lower_bound;
  const bool trivial_factor = inner.n == 1 || outer.n == 1;
  r.d_is_lower_bound = !(both_exact && trivial_factor);
  validate(r);
  return r;
}

/// Concatenation with a different inner code per outer symbol.
inline CodeParams concat_mixed(const MixedInnerSpec &inners, const CodeParams &outer) {
  using detail::require;
  validate(outer);
  require(!inners.entries.empty(), "mixed concatenation needs at least one inner code");
  const CodeParams &first = inners.entries.front().code;
  bool any_lower_bound = outer.d_is_lower_bound;
  for (const auto &e : inners.entries) {
    validate(e.code);
    require(e.multiplicity >= 1, "inner multiplicity must be positive");
    require(e.code.q == 2, "inner codes must be binary");
    require(e.code.k == first.k, "mixed inner codes must share the same k");
    require(e.code.d == first.d, "mixed inner codes must share the same d");
    any_lower_bound = any_lower_bound || e.code.d_is_lower_bound;
  }
  require(inners.total_multiplicity() == outer.n,
          "inner multiplicities must sum to the outer length");
  require(first.k >= 1, "inner codes must encode at least one qubit");
  require(outer.q == detail::pow2_checked(first.k),
          "outer alphabet must equal 2^k of the inner codes");

  if (inners.entries.size() == 1) {
    return concat(first, outer);
  }
  CodeParams r;
  r.n = inners.total_length();
  r.k = first.k * outer.k;
  r.d = first.d * outer.d;
  r.c = inners.total_ebits() + outer.c * first.k;
  r.q = 2;
  r.d_is_lower_bound = true;
  (void)any_lower_bound;
  validate(r);
  return r;
}

enum class AsymShape { strict, relaxed };

/// Concatenates asymmetric codes: [[n1 n2, k1 k2, dz1 dz2 / dx1 dx2; c1 n2 + c2 k1]].
///
/// With AsymShape::strict the inputs must have the shape of the repetition
/// family: inner [[n1,1,n1/1;0]] and outer [[n2,1,d2/d2;n2-1]] where d2 = n2
/// for odd n2 and d2 = n2 - 1 for even n2.
inline AsymCodeParams concat_asym(const AsymCodeParams &inner, const AsymCodeParams &outer,
                                  AsymShape shape = AsymShape::strict) {
  using detail::require;
  validate(inner);
  validate(outer);
  if (shape == AsymShape::strict) {
    require(inner.n >= 2 && inner.k == 1 && inner.d_z == inner.n && inner.d_x == 1 &&
                inner.c == 0 && inner.q == 2,
            "inner code must have the form [[n1,1,n1/1;0]] with n1 >= 2");
    const std::int64_t n2 = outer.n;
    const std::int64_t d2 = (n2 % 2 == 1) ? n2 : n2 - 1;
    require(n2 >= 2, "outer length must be >= 2");
    require(n2 % 2 == 0 || n2 >= 3, "odd outer length must be >= 3");
    require(outer.k == 1 && outer.d_z == d2 && outer.d_x == d2 && outer.c == n2 - 1,
            "outer code must have the form [[n2,1,d2/d2;n2-1]]");
  }
  require(inner.k >= 1 && inner.q == 2, "inner code must be binary with k >= 1");
  require(outer.q == detail::pow2_checked(inner.k),
          "outer alphabet must equal 2^k of the inner code");
  AsymCodeParams r;
  r.n = inner.n * outer.n;
  r.k = inner.k * outer.k;
  r.d_z = inner.d_z * outer.d_z;
  r.d_x = inner.d_x * outer.d_x;
  r.c = inner.c * outer.n + outer.c * inner.k;
  r.q = 2;
  validate(r);
  return r;
}

/// True when `candidate` dominates `baseline` in (net transmission, distance).
inline bool better_than(const CodeParams &candidate, const CodeParams &baseline) {
  detail::require(candidate.n == baseline.n, "better_than compares codes of equal length");
  const auto cn = candidate.net_transmission();
  const auto bn = baseline.net_transmission();
  if (cn < bn || candidate.d < baseline.d) return false;
  return cn > bn || candidate.d > baseline.d;
}

// ---------------------------------------------------------------------------
// Text rendering and parsing of the bracket notation.

inline constexpr std::string_view kGeq = "\xE2\x89\xA5";  // U+2265

namespace detail {

inline std::string q_suffix(std::int64_t q) {
  return q == 2 ? std::string{} : "_" + std::to_string(q);
}

inline std::string distance_text(const CodeParams &p) {
  return (p.d_is_lower_bound ? std::string(kGeq) : std::string{}) + std::to_string(p.d);
}

}  // namespace detail

/// "[[n,k,d;c]]_q" with "≥" before d for lower bounds; the suffix is omitted for q = 2.
inline std::string to_string(const CodeParams &p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + detail::distance_text(p) +
         ";" + std::to_string(p.c) + "]]" + detail::q_suffix(p.q);
}

/// Net form "[[n,k-c,d]]_q" used by tables that list net transmission only.
inline std::string to_net_string(const CodeParams &p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.net_transmission()) + "," +
         detail::distance_text(p) + "]]" + detail::q_suffix(p.q);
}

inline std::string to_string(const AsymCodeParams &p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d_z) +
         "/" + std::to_string(p.d_x) + ";" + std::to_string(p.c) + "]]" + detail::q_suffix(p.q);
}

using AnyCodeParams = std::variant<CodeParams, AsymCodeParams>;

namespace detail {

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) buf_.push_back(ch);
    }
  }

  bool eat(std::string_view token) {
    if (std::string_view(buf_).substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    bool neg = eat("-");
    std::int64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < buf_.size() && std::isdigit(static_cast<unsigned char>(buf_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer overflow");
      v = v * 10 + (buf_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected integer");
    }
    return neg ? -v : v;
  }

  [[nodiscard]] bool done() const { return pos_ == buf_.size(); }

  [[noreturn]] void fail(const std::string &what) const {
    throw parse_error("malformed code literal '" + buf_ + "': " + what + " at offset " +
                      std::to_string(pos_));
  }

 private:
  std::string buf_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "[[n,k,d;c]]_q", "[[n,k,≥d;c]]", "[[n,k,dz/dx;c]]_q" or the
/// ebit-free forms "[[n,k,d]]". Whitespace is ignored; ">=" is accepted for "≥".
inline AnyCodeParams parse_any_code(std::string_view text) {
  detail::LiteralScanner s(text);
  s.expect("[[");
  const auto n = s.integer();
  s.expect(",");
  const auto k = s.integer();
  s.expect(",");
  const bool lower = s.eat(kGeq) || s.eat(">=");
  const auto d1 = s.integer();
  std::int64_t d2 = 0;
  const bool asym = s.eat("/");
  if (asym) {
    if (lower) s.fail("lower-bound marker is not supported on asymmetric distances");
    d2 = s.integer();
  }
  std::int64_t c = 0;
  if (s.eat(";")) c = s.integer();
  s.expect("]]");
  std::int64_t q = 2;
  if (s.eat("_")) q = s.integer();
  if (!s.done()) s.fail("trailing characters");
  try {
    if (asym) {
      AsymCodeParams p{n, k, d1, d2, c, q};
      validate(p);
      return p;
    }
    CodeParams p{n, k, d1, c, q, lower};
    validate(p);
    return p;
  } catch (const domain_error &e) {
    throw parse_error(std::string("invalid code parameters '") + std::string(text) +
                      "': " + e.what());
  }
}

inline CodeParams parse_code(std::string_view text) {
  auto any = parse_any_code(text);
  if (auto *p = std::get_if<CodeParams>(&any)) return *p;
  throw parse_error("expected symmetric code literal, got asymmetric '" + std::string(text) + "'");
}

inline AsymCodeParams parse_asym_code(std::string_view text) {
  auto any = parse_any_code(text);
  if (auto *p = std::get_if<AsymCodeParams>(&any)) return *p;
  throw parse_error("expected asymmetric code literal '[[n,k,dz/dx;c]]', got '" +
                    std::string(text) + "'");
}

/// Parses an inner-code entry "16x[[4,2,2;0]]" (also "16*" or "16×"); no prefix means 1.
inline InnerEntry parse_inner_entry(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  const auto bracket = compact.find("[[");
  if (bracket == std::string::npos) throw parse_error("inner entry lacks '[[': " + compact);
  InnerEntry entry;
  entry.code = parse_code(std::string_view(compact).substr(bracket));
  std::string prefix = compact.substr(0, bracket);
  if (prefix.empty()) return entry;
  for (std::string_view sep : {"\xC3\x97", "x", "*"}) {
    if (prefix.size() > sep.size() && prefix.ends_with(sep)) {
      prefix.resize(prefix.size() - sep.size());
      detail::LiteralScanner s(prefix);
      entry.multiplicity = s.integer();
      if (!s.done() || entry.multiplicity < 1) {
        throw parse_error("bad multiplicity in inner entry: " + compact);
      }
      return entry;
    }
  }
  throw parse_error("bad multiplicity prefix in inner entry: " + compact);
}

inline std::string to_string(const InnerEntry &e) {
  return std::to_string(e.multiplicity) + "x" + to_string(e.code);
}

}  // namespace eacqc
