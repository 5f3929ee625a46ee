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
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eacqc/error.hpp"
#include "eacqc/format.hpp"
#include "eacqc/pauli_oracle.hpp"

namespace eacqc {

enum class Curve { FC_513, FE_513, FE_CQC25, FC_BOWEN, FC_REP, FE_EACQC_BOWEN, FE_EACQC_REP, FE_UNENCODED };

inline constexpr std::array<Curve, 8> kAllCurves = {
    Curve::FC_513,  Curve::FE_513,         Curve::FE_CQC25,     Curve::FC_BOWEN,
    Curve::FC_REP,  Curve::FE_EACQC_BOWEN, Curve::FE_EACQC_REP, Curve::FE_UNENCODED};

/// Column name used in CSV output.
inline std::string_view curve_column(Curve c) {
  switch (c) {
    case Curve::FC_513: return "fc_513";
    case Curve::FE_513: return "fe_513";
    case Curve::FE_CQC25: return "fe_cqc25";
    case Curve::FC_BOWEN: return "fc_bowen";
    case Curve::FC_REP: return "fc_rep";
    case Curve::FE_EACQC_BOWEN: return "fe_eacqc_bowen";
    case Curve::FE_EACQC_REP: return "fe_eacqc_rep";
    case Curve::FE_UNENCODED: return "fe_unencoded";
  }
  return "?";
}

/// Accepts the column names, upper-case ids and the short CLI spellings
/// (513, fc-513, cqc25, bowen, rep, eacqc-bowen, eacqc-rep, unencoded).
inline Curve parse_curve(std::string_view s) {
  std::string t(s);
  for (auto &ch : t) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '-') ch = '_';
  }
  if (t == "fe_513" || t == "513") return Curve::FE_513;
  if (t == "fc_513") return Curve::FC_513;
  if (t == "fe_cqc25" || t == "cqc25" || t == "cqc") return Curve::FE_CQC25;
  if (t == "fc_bowen") return Curve::FC_BOWEN;
  if (t == "fc_rep") return Curve::FC_REP;
  if (t == "fe_eacqc_bowen" || t == "eacqc_bowen" || t == "bowen") return Curve::FE_EACQC_BOWEN;
  if (t == "fe_eacqc_rep" || t == "eacqc_rep" || t == "rep") return Curve::FE_EACQC_REP;
  if (t == "fe_unencoded" || t == "unencoded") return Curve::FE_UNENCODED;
  throw parse_error("unknown curve '" + std::string(s) + "'");
}

/// One term c * mu_i * nu_j of a closed-form channel fidelity.
struct FidelityTerm {
  int i;
  int j;
  int coefficient;
};

// Published expansions for the two [[3,1,3;2]] inner codes (n = 3, c = 2).
inline constexpr std::array<FidelityTerm, 9> kBowenTerms = {{
    {0, 0, 1}, {1, 0, 9}, {3, 0, 6}, {0, 1, 6}, {2, 1, 36}, {3, 1, 54}, {1, 2, 18}, {2, 2, 81}, {3, 2, 45},
}};
inline constexpr std::array<FidelityTerm, 9> kRepetitionTerms = {{
    {0, 0, 1}, {1, 0, 9}, {2, 0, 6}, {1, 1, 18}, {2, 1, 38}, {3, 1, 40}, {1, 2, 18}, {2, 2, 55}, {3, 2, 71},
}};

namespace detail {

inline void check_probability(double p, const char *what) {
  require(p >= 0.0 && p <= 1.0 && !std::isnan(p), std::string(what) + " must lie in [0,1]");
}

template <std::size_t N>
double mu_nu_sum(const std::array<FidelityTerm, N> &terms, int n, int c, double pa, double pb) {
  double f = 0.0;
  for (const auto &t : terms) {
    f += t.coefficient * std::pow(1.0 - 0.75 * pa, n - t.i) * std::pow(0.25 * pa, t.i) *
         std::pow(1.0 - 0.75 * pb, c - t.j) * std::pow(0.25 * pb, t.j);
  }
  return f;
}

}  // namespace detail

inline double fc_513(double p) {
  return 1.0 - 45.0 * p * p / 8.0 + 75.0 * std::pow(p, 3) / 8.0 - 45.0 * std::pow(p, 4) / 8.0 +
         9.0 * std::pow(p, 5) / 8.0;
}

inline double fe_513(double p) {
  return 1.0 - 10.0 * p * p + 20.0 * std::pow(p, 3) - 15.0 * std::pow(p, 4) + 4.0 * std::pow(p, 5);
}

inline double fc_bowen(double pa, double pb) { return detail::mu_nu_sum(kBowenTerms, 3, 2, pa, pb); }
inline double fc_repetition(double pa, double pb) { return detail::mu_nu_sum(kRepetitionTerms, 3, 2, pa, pb); }

/// Evaluates a curve at p with ebit noise p_b = r p where it applies.
inline double eval_fidelity(Curve id, double p, double r = 1.0) {
  detail::check_probability(p, "p");
  detail::require(r >= 0.0 && r * p <= 1.0, "ebit ratio r must satisfy r >= 0 and r * p <= 1");
  const double pb = r * p;
  switch (id) {
    case Curve::FC_513: return fc_513(p);
    case Curve::FE_513: return fe_513(p);
    case Curve::FE_CQC25: return fe_513(1.0 - fc_513(p));
    case Curve::FC_BOWEN: return fc_bowen(p, pb);
    case Curve::FC_REP: return fc_repetition(p, pb);
    case Curve::FE_EACQC_BOWEN: return fe_513(1.0 - fc_bowen(p, pb));
    case Curve::FE_EACQC_REP: return fe_513(1.0 - fc_repetition(p, pb));
    case Curve::FE_UNENCODED: return 1.0 - 0.75 * p;
  }
  throw domain_error("unknown curve");
}

/// Entanglement fidelity of the [[5,1,3]]-outer concatenation over an inner
/// code described by its correctable-error table.
inline double eacqc_entanglement_fidelity(const CorrectableTable &inner, double p_a, double p_b) {
  detail::require(inner.k == 1, "the inner code must encode one qubit");
  return fe_513(1.0 - oracle_channel_fidelity(inner, p_a, p_b));
}

/// Smallest p in (0,1) where the curve drops to the unencoded fidelity 1 - 3p/4.
/// Brackets by a 1e-3 scan from 1e-4, then bisects to 1e-6.
inline std::optional<double> find_threshold(Curve id, double r = 1.0) {
  detail::require(id != Curve::FE_UNENCODED, "the unencoded curve has no threshold");
  detail::require(r >= 0.0, "ebit ratio r must be non-negative");
  const double p_hi = r > 1.0 ? 1.0 / r : 1.0;
  auto gap = [&](double p) { return eval_fidelity(id, p, r) - eval_fidelity(Curve::FE_UNENCODED, p, r); };
  double lo = 1e-4;
  double g_lo = gap(lo);
  for (int step = 1;; ++step) {
    double hi = 1e-4 + step * 1e-3;
    if (hi >= p_hi) {
      if (lo >= p_hi) return std::nullopt;
      hi = p_hi;
    }
    const double g_hi = gap(hi);
    if (g_lo > 0.0 && g_hi <= 0.0) {
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    if (hi >= p_hi) return std::nullopt;
    lo = hi;
    g_lo = g_hi;
  }
}

struct CurveTable {
  std::vector<Curve> ids;
  std::vector<double> p;
  std::vector<std::vector<double>> values;  // values[row][column]
};

/// Samples each curve at p_min, p_min + step, ... up to p_max.
inline CurveTable sample_curves(const std::vector<Curve> &ids, double r, double p_min, double p_max,
                                double step) {
  detail::require(!ids.empty(), "at least one curve is required");
  detail::require(0.0 <= p_min && p_min < p_max && p_max <= 1.0, "need 0 <= p_min < p_max <= 1");
  detail::require(step > 0.0, "step must be positive");
  CurveTable t;
  t.ids = ids;
  const auto rows = static_cast<std::size_t>(std::floor((p_max - p_min) / step + 1e-9)) + 1;
  for (std::size_t row = 0; row < rows; ++row) {
    const double p = std::min(p_max, p_min + static_cast<double>(row) * step);
    std::vector<double> vals;
    for (auto id : ids) vals.push_back(eval_fidelity(id, p, r));
    t.p.push_back(p);
    t.values.push_back(std::move(vals));
  }
  return t;
}

inline std::string to_csv(const CurveTable &t) {
  std::vector<std::string> header{"p"};
  for (auto id : t.ids) header.emplace_back(curve_column(id));
  std::string out = csv_line(header) + "\n";
  for (std::size_t row = 0; row < t.p.size(); ++row) {
    std::vector<std::string> fields{format_double(t.p[row])};
    for (double v : t.values[row]) fields.push_back(format_double(v));
    out += csv_line(fields) + "\n";
  }
  return out;
}

}  // namespace eacqc
