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
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "eacqc/error.hpp"

namespace eacqc {

/// Maximum n + c handled by exhaustive enumeration (4^12 Pauli operators).
inline constexpr int kMaxOracleQubits = 12;

/// Pauli operator modulo phase, as x and z bit masks. Bit i is qubit i; the
/// first n positions belong to Alice, the remaining c to Bob.
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(int num_qubits, std::uint32_t x, std::uint32_t z) : num_qubits_(num_qubits), x_(x), z_(z) {
    detail::require(num_qubits >= 0 && num_qubits <= 31, "Pauli length must be in [0, 31]");
    const std::uint32_t mask = (std::uint32_t{1} << num_qubits) - 1;
    detail::require((x & ~mask) == 0 && (z & ~mask) == 0, "Pauli bits beyond its length");
  }

  /// Parses a string over {I, X, Y, Z} ('_' is accepted for I).
  static PauliOperator from_string(std::string_view text) {
    std::uint32_t x = 0, z = 0;
    int i = 0;
    for (char ch : text) {
      switch (ch) {
        case 'I': case '_': break;
        case 'X': x |= 1u << i; break;
        case 'Z': z |= 1u << i; break;
        case 'Y': x |= 1u << i; z |= 1u << i; break;
        default: throw parse_error("bad Pauli character '" + std::string(1, ch) + "' in '" + std::string(text) + "'");
      }
      ++i;
    }
    return PauliOperator(i, x, z);
  }

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::uint32_t x_bits() const { return x_; }
  [[nodiscard]] std::uint32_t z_bits() const { return z_; }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (int i = 0; i < num_qubits_; ++i) s.push_back("IXZY"[((x_ >> i) & 1) | (((z_ >> i) & 1) << 1)]);
    return s;
  }

  [[nodiscard]] int weight() const { return std::popcount(x_ | z_); }

  /// Non-identity positions among the first n_alice qubits.
  [[nodiscard]] int alice_weight(int n_alice) const {
    return std::popcount((x_ | z_) & ((std::uint32_t{1} << n_alice) - 1));
  }
  [[nodiscard]] int bob_weight(int n_alice) const { return std::popcount((x_ | z_) >> n_alice); }

  /// Symplectic encoding ordered lexicographically by (x_0..x_{N-1}, z_0..z_{N-1}).
  [[nodiscard]] std::uint64_t canonical_key() const {
    auto rev = [this](std::uint32_t v) {
      std::uint64_t r = 0;
      for (int i = 0; i < num_qubits_; ++i) r = (r << 1) | ((v >> i) & 1);
      return r;
    };
    return (rev(x_) << num_qubits_) | rev(z_);
  }

  [[nodiscard]] bool commutes_with(const PauliOperator &o) const {
    return (std::popcount((x_ & o.z_) ^ (z_ & o.x_)) & 1) == 0;
  }

  friend PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) {
    detail::require(a.num_qubits_ == b.num_qubits_, "Pauli length mismatch");
    return PauliOperator(a.num_qubits_, a.x_ ^ b.x_, a.z_ ^ b.z_);
  }

  friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

 private:
  int num_qubits_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
};

struct StabilizerSpec {
  int n_alice = 1;
  int c_bob = 0;
  int k = 1;
  std::vector<PauliOperator> generators;

  [[nodiscard]] int num_qubits() const { return n_alice + c_bob; }
  [[nodiscard]] int num_generators() const { return static_cast<int>(generators.size()); }
};

namespace detail {

inline int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin() + rank, rows.end(), [b](std::uint64_t r) { return r & b; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && (rows[r] & b)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Checks lengths, the generator count n + c - k, commutation, independence
/// and the exhaustive-enumeration size cap.
inline void validate(const StabilizerSpec &s) {
  using detail::require;
  require(s.n_alice >= 1 && s.c_bob >= 0 && s.k >= 1, "stabilizer spec needs n >= 1, c >= 0, k >= 1");
  require(s.num_qubits() <= kMaxOracleQubits,
          "n + c = " + std::to_string(s.num_qubits()) + " exceeds the enumeration cap of " +
              std::to_string(kMaxOracleQubits));
  require(s.num_generators() == s.num_qubits() - s.k, "generator count must equal n + c - k");
  std::vector<std::uint64_t> rows;
  for (const auto &g : s.generators) {
    require(g.num_qubits() == s.num_qubits(), "generator length must equal n + c");
    rows.push_back((std::uint64_t{g.x_bits()} << 32) | g.z_bits());
  }
  for (std::size_t a = 0; a < s.generators.size(); ++a) {
    for (std::size_t b = a + 1; b < s.generators.size(); ++b) {
      require(s.generators[a].commutes_with(s.generators[b]),
              "generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
    }
  }
  require(detail::gf2_rank(rows) == s.num_generators(), "generators are not independent");
}

/// Bit g of the result is set iff `e` anticommutes with generator g.
inline std::uint32_t syndrome(const PauliOperator &e, const StabilizerSpec &s) {
  detail::require(e.num_qubits() == s.num_qubits(), "error length does not match the code");
  std::uint32_t syn = 0;
  for (int g = 0; g < s.num_generators(); ++g) {
    if (!e.commutes_with(s.generators[g])) syn |= std::uint32_t{1} << g;
  }
  return syn;
}

/// Syndrome as a string of '0'/'1', generator 0 first.
inline std::string syndrome_string(std::uint32_t syn, int num_generators) {
  std::string s;
  for (int g = 0; g < num_generators; ++g) s.push_back(((syn >> g) & 1) ? '1' : '0');
  return s;
}

/// Representative selection order within each syndrome class.
///   ebit_first:   (bob weight, alice weight, canonical key), suited to p_b < p_a.
///   total_weight: (total weight, canonical key), the minimum-weight decoder.
enum class DecoderOrder { ebit_first, total_weight };

inline std::string_view decoder_order_name(DecoderOrder o) {
  return o == DecoderOrder::ebit_first ? "ebit-first" : "total-weight";
}

inline DecoderOrder parse_decoder_order(std::string_view s) {
  if (s == "ebit-first" || s == "ebit_first") return DecoderOrder::ebit_first;
  if (s == "total-weight" || s == "total_weight") return DecoderOrder::total_weight;
  throw parse_error("unknown decoder order '" + std::string(s) + "' (expected ebit-first or total-weight)");
}

/// Lookup-table decoder: one representative per syndrome.
struct Decoder {
  DecoderOrder order = DecoderOrder::ebit_first;
  std::vector<PauliOperator> table;  // indexed by syndrome

  [[nodiscard]] const PauliOperator &operator()(std::uint32_t syn) const { return table.at(syn); }
};

namespace detail {

using OrderKey = std::tuple<int, int, std::uint64_t>;

inline OrderKey order_key(const PauliOperator &p, int n_alice, DecoderOrder order) {
  if (order == DecoderOrder::ebit_first) {
    return {p.bob_weight(n_alice), p.alice_weight(n_alice), p.canonical_key()};
  }
  return {p.weight(), 0, p.canonical_key()};
}

inline unsigned clamp_threads(unsigned threads) { return std::max(1u, std::min(threads, 64u)); }

// Splits [0, total) into `threads` contiguous chunks and runs fn(begin, end, chunk).
template <typename Fn>
void parallel_chunks(std::uint64_t total, unsigned threads, Fn fn) {
  threads = clamp_threads(threads);
  if (threads == 1) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(total, t * step);
    const std::uint64_t end = std::min(total, begin + step);
    pool.emplace_back(fn, begin, end, t);
  }
}

inline PauliOperator pauli_from_index(std::uint64_t idx, int num_qubits) {
  const std::uint32_t mask = (std::uint32_t{1} << num_qubits) - 1;
  return PauliOperator(num_qubits, static_cast<std::uint32_t>(idx) & mask,
                       static_cast<std::uint32_t>(idx >> num_qubits) & mask);
}

}  // namespace detail

/// Picks, for every syndrome, the first representative under `order`.
inline Decoder build_decoder(const StabilizerSpec &s, DecoderOrder order, unsigned threads = 1) {
  validate(s);
  const int nq = s.num_qubits();
  const std::uint64_t total = std::uint64_t{1} << (2 * nq);
  const std::size_t num_syndromes = std::size_t{1} << s.num_generators();
  threads = detail::clamp_threads(threads);

  std::vector<std::vector<std::pair<detail::OrderKey, PauliOperator>>> partial(
      threads, std::vector<std::pair<detail::OrderKey, PauliOperator>>(num_syndromes));
  std::vector<std::vector<bool>> seen(threads, std::vector<bool>(num_syndromes, false));
  detail::parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned t) {
    auto &best = partial[t];
    auto &have = seen[t];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const auto e = detail::pauli_from_index(idx, nq);
      const auto syn = syndrome(e, s);
      auto key = detail::order_key(e, s.n_alice, order);
      if (!have[syn] || key < best[syn].first) {
        best[syn] = {key, e};
        have[syn] = true;
      }
    }
  });
  Decoder dec;
  dec.order = order;
  dec.table.resize(num_syndromes);
  for (std::size_t syn = 0; syn < num_syndromes; ++syn) {
    bool found = false;
    detail::OrderKey best_key{};
    for (unsigned t = 0; t < threads; ++t) {
      if (seen[t][syn] && (!found || partial[t][syn].first < best_key)) {
        best_key = partial[t][syn].first;
        dec.table[syn] = partial[t][syn].second;
        found = true;
      }
    }
    detail::require(found, "syndrome " + std::to_string(syn) + " has no representative");
  }
  return dec;
}

inline Decoder build_decoder(const StabilizerSpec &s, bool ebit_preference, unsigned threads = 1) {
  return build_decoder(s, ebit_preference ? DecoderOrder::ebit_first : DecoderOrder::total_weight, threads);
}

/// c_ij: number of correctable Pauli errors with i Alice errors and j Bob errors.
struct CorrectableTable {
  int n = 0;
  int c = 0;
  int k = 0;
  std::vector<std::vector<std::uint64_t>> counts;  // [i][j]

  CorrectableTable() = default;
  CorrectableTable(int n_, int c_, int k_)
      : n(n_), c(c_), k(k_), counts(static_cast<std::size_t>(n_ + 1), std::vector<std::uint64_t>(c_ + 1, 0)) {}

  [[nodiscard]] std::uint64_t at(int i, int j) const {
    if (i < 0 || i > n || j < 0 || j > c) return 0;
    return counts[i][j];
  }

  [[nodiscard]] std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto &row : counts)
      for (auto v : row) t += v;
    return t;
  }

  friend bool operator==(const CorrectableTable &, const CorrectableTable &) = default;
};

inline nlohmann::ordered_json to_json(const CorrectableTable &t) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (int i = 0; i <= t.n; ++i) {
    for (int j = 0; j <= t.c; ++j) {
      if (t.counts[i][j] != 0) counts.push_back({i, j, t.counts[i][j]});
    }
  }
  return {{"n", t.n}, {"c", t.c}, {"k", t.k}, {"counts", counts}};
}

inline CorrectableTable table_from_json(const nlohmann::json &j) {
  try {
    CorrectableTable t(j.at("n").get<int>(), j.at("c").get<int>(), j.at("k").get<int>());
    detail::require(t.n >= 1 && t.c >= 0 && t.k >= 1, "bad table dimensions");
    for (const auto &entry : j.at("counts")) {
      const int i = entry.at(0).get<int>();
      const int jj = entry.at(1).get<int>();
      detail::require(i >= 0 && i <= t.n && jj >= 0 && jj <= t.c, "count index out of range");
      t.counts[i][jj] = entry.at(2).get<std::uint64_t>();
    }
    return t;
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("malformed correctable table JSON: ") + e.what());
  }
}

/// Enumerates all 4^{n+c} errors E and counts those with E * decoder(syndrome(E))
/// in the stabilizer group.
inline CorrectableTable correctable_counts(const StabilizerSpec &s, const Decoder &decoder,
                                           unsigned threads = 1) {
  validate(s);
  const int nq = s.num_qubits();
  const int r = s.num_generators();
  detail::require(decoder.table.size() == (std::size_t{1} << r), "decoder does not match the code");
  const std::uint64_t total = std::uint64_t{1} << (2 * nq);

  // Membership bitmap of the stabilizer group, indexed by x | z << nq.
  std::vector<bool> in_group(total, false);
  for (std::uint32_t combo = 0; combo < (std::uint32_t{1} << r); ++combo) {
    std::uint32_t x = 0, z = 0;
    for (int g = 0; g < r; ++g) {
      if ((combo >> g) & 1) {
        x ^= s.generators[g].x_bits();
        z ^= s.generators[g].z_bits();
      }
    }
    in_group[x | (std::uint64_t{z} << nq)] = true;
  }

  threads = detail::clamp_threads(threads);
  std::vector<CorrectableTable> partial(threads, CorrectableTable(s.n_alice, s.c_bob, s.k));
  detail::parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned t) {
    auto &tab = partial[t];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const auto e = detail::pauli_from_index(idx, nq);
      const auto &rep = decoder(syndrome(e, s));
      const std::uint64_t residual = (e.x_bits() ^ rep.x_bits()) |
                                     (std::uint64_t{e.z_bits() ^ rep.z_bits()} << nq);
      if (in_group[residual]) ++tab.counts[e.alice_weight(s.n_alice)][e.bob_weight(s.n_alice)];
    }
  });
  CorrectableTable out(s.n_alice, s.c_bob, s.k);
  for (const auto &p : partial)
    for (int i = 0; i <= out.n; ++i)
      for (int j = 0; j <= out.c; ++j) out.counts[i][j] += p.counts[i][j];
  return out;
}

/// sum_ij c_ij mu_i nu_j for depolarizing noise p_a on Alice's qubits and p_b on Bob's.
inline double oracle_channel_fidelity(const CorrectableTable &t, double p_a, double p_b) {
  detail::require(p_a >= 0.0 && p_a <= 1.0 && p_b >= 0.0 && p_b <= 1.0,
                  "depolarizing probabilities must lie in [0,1]");
  double f = 0.0;
  for (int i = 0; i <= t.n; ++i) {
    const double mu = std::pow(1.0 - 0.75 * p_a, t.n - i) * std::pow(0.25 * p_a, i);
    for (int j = 0; j <= t.c; ++j) {
      if (t.counts[i][j] == 0) continue;
      const double nu = std::pow(1.0 - 0.75 * p_b, t.c - j) * std::pow(0.25 * p_b, j);
      f += static_cast<double>(t.counts[i][j]) * mu * nu;
    }
  }
  return f;
}

}  // namespace eacqc
