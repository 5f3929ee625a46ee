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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eacqc/catalog_data.hpp"
#include "eacqc/format.hpp"
#include "eacqc/params.hpp"

namespace eacqc {

/// Whether a record carries its ebit count (full) or only k - c in the k slot (net).
enum class ParamForm { full, net };

struct CatalogRow {
  std::string table_id;
  MixedInnerSpec inner;
  CodeParams outer;
  ParamForm outer_form = ParamForm::full;
  CodeParams claimed;
  ParamForm claimed_form = ParamForm::full;
  CodeParams best_qecc;
  bool best_qecc_bold = false;
  std::optional<CodeParams> best_eaqecc;
  bool best_eaqecc_bold = false;
  std::string notes;
  // Inner multiset exactly as typeset, kept when it differs from `inner`.
  std::optional<MixedInnerSpec> inner_as_printed;

  friend bool operator==(const CatalogRow &, const CatalogRow &) = default;
};

struct RowReport {
  CodeParams recomputed;
  bool length_ok = false;
  bool net_ok = false;
  bool distance_ok = false;
  bool ebits_checked = false;
  bool ebits_ok = true;
  bool beats_qecc = false;
  std::optional<bool> beats_eaqecc;

  [[nodiscard]] bool arithmetic_ok() const { return length_ok && net_ok && distance_ok && ebits_ok; }
  /// Arithmetic consistency plus improvement over the best-known QECC.
  [[nodiscard]] bool passes() const { return arithmetic_ok() && beats_qecc; }
};

inline std::string render(const CodeParams &p, ParamForm form) {
  return form == ParamForm::full ? to_string(p) : to_net_string(p);
}

/// Omits ";c" when c = 0, as the comparison columns are typeset.
inline std::string render_compact(const CodeParams &p) { return p.c == 0 ? to_net_string(p) : to_string(p); }


/// Recomputes the concatenation and checks it against the claimed record.
inline RowReport verify_row(const CatalogRow &row) {
  RowReport rep;
  rep.recomputed = concat_mixed(row.inner, row.outer);
  const auto &got = rep.recomputed;
  const auto &want = row.claimed;
  rep.length_ok = got.n == want.n;
  rep.net_ok = got.net_transmission() == want.net_transmission();
  rep.distance_ok = got.d == want.d;
  rep.ebits_checked = row.outer_form == ParamForm::full && row.claimed_form == ParamForm::full;
  rep.ebits_ok = !rep.ebits_checked || (got.c == want.c && got.k == want.k);
  if (want.n == row.best_qecc.n) rep.beats_qecc = better_than(want, row.best_qecc);
  if (row.best_eaqecc && row.best_eaqecc->n == want.n) rep.beats_eaqecc = better_than(want, *row.best_eaqecc);
  return rep;
}

namespace detail {

inline ParamForm parse_form(const std::string &s) {
  if (s == "full") return ParamForm::full;
  if (s == "net") return ParamForm::net;
  throw parse_error("unknown parameter form '" + s + "'");
}

inline MixedInnerSpec parse_inner_list(const nlohmann::json &arr) {
  MixedInnerSpec spec;
  for (const auto &e : arr) spec.entries.push_back(parse_inner_entry(e.get<std::string>()));
  if (spec.entries.empty()) throw parse_error("catalog row has no inner codes");
  return spec;
}

inline nlohmann::ordered_json inner_to_json(const MixedInnerSpec &spec) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &e : spec.entries) arr.push_back(to_string(e));
  return arr;
}

}  // namespace detail

inline CatalogRow row_from_json(const nlohmann::json &j) {
  try {
    CatalogRow row;
    row.table_id = j.at("table").get<std::string>();
    row.inner = detail::parse_inner_list(j.at("inner"));
    row.outer = parse_code(j.at("outer").get<std::string>());
    row.outer_form = detail::parse_form(j.at("outer_form").get<std::string>());
    row.claimed = parse_code(j.at("claimed").get<std::string>());
    row.claimed_form = detail::parse_form(j.at("claimed_form").get<std::string>());
    row.best_qecc = parse_code(j.at("best_qecc").get<std::string>());
    row.best_qecc_bold = j.value("qecc_bold", false);
    if (j.contains("best_eaqecc") && !j.at("best_eaqecc").is_null()) {
      row.best_eaqecc = parse_code(j.at("best_eaqecc").get<std::string>());
    }
    row.best_eaqecc_bold = j.value("eaqecc_bold", false);
    row.notes = j.value("notes", std::string{});
    if (j.contains("inner_as_printed")) row.inner_as_printed = detail::parse_inner_list(j.at("inner_as_printed"));
    return row;
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("malformed catalog row: ") + e.what());
  }
}

inline nlohmann::ordered_json to_json(const CatalogRow &row) {
  using oj = nlohmann::ordered_json;
  oj j = {
      {"table", row.table_id},
      {"inner", detail::inner_to_json(row.inner)},
      {"outer", render(row.outer, row.outer_form)},
      {"outer_form", row.outer_form == ParamForm::full ? "full" : "net"},
      {"claimed", render(row.claimed, row.claimed_form)},
      {"claimed_form", row.claimed_form == ParamForm::full ? "full" : "net"},
      {"best_qecc", to_net_string(row.best_qecc)},
      {"qecc_bold", row.best_qecc_bold},
      {"best_eaqecc", row.best_eaqecc ? oj(render_compact(*row.best_eaqecc)) : oj(nullptr)},
      {"eaqecc_bold", row.best_eaqecc_bold},
      {"notes", row.notes},
  };
  if (row.inner_as_printed) j["inner_as_printed"] = detail::inner_to_json(*row.inner_as_printed);
  return j;
}

inline std::vector<CatalogRow> rows_from_json(const nlohmann::json &doc) {
  std::vector<CatalogRow> rows;
  try {
    for (const auto &r : doc.at("rows")) rows.push_back(row_from_json(r));
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("malformed catalog document: ") + e.what());
  }
  return rows;
}

/// All embedded rows, in table order.
inline const std::vector<CatalogRow> &catalog_rows() {
  static const std::vector<CatalogRow> rows = rows_from_json(nlohmann::json::parse(kCatalogJson));
  return rows;
}

inline const std::vector<std::string> &catalog_tables() {
  static const std::vector<std::string> ids = {"S1", "S2", "S3", "S4"};
  return ids;
}

inline std::vector<CatalogRow> catalog_table(std::string_view table_id) {
  bool known = false;
  for (const auto &t : catalog_tables()) known = known || t == table_id;
  detail::require(known, "unknown catalog table '" + std::string(table_id) + "' (expected S1, S2, S3 or S4)");
  std::vector<CatalogRow> out;
  for (const auto &r : catalog_rows()) {
    if (r.table_id == table_id) out.push_back(r);
  }
  return out;
}

inline std::string export_json(std::string_view table_id) {
  nlohmann::ordered_json doc = {{"version", 1}, {"table", std::string(table_id)}, {"rows", nlohmann::ordered_json::array()}};
  for (const auto &r : catalog_table(table_id)) doc["rows"].push_back(to_json(r));
  return doc.dump(2) + "\n";
}

inline std::vector<CatalogRow> import_json(std::string_view text) {
  try {
    return rows_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error &e) {
    throw parse_error(std::string("catalog JSON does not parse: ") + e.what());
  }
}

inline std::string inner_text(const MixedInnerSpec &spec) {
  std::string s;
  for (const auto &e : spec.entries) {
    if (!s.empty()) s += "+";
    s += to_string(e);
  }
  return s;
}

/// Columns: inner, outer, EACQC, best QECC, best EAQECC.
inline std::string export_csv(std::string_view table_id) {
  std::string out = csv_line({"inner", "outer", "eacqc", "best_qecc", "best_eaqecc"}) + "\n";
  for (const auto &r : catalog_table(table_id)) {
    out += csv_line({inner_text(r.inner), render(r.outer, r.outer_form), render(r.claimed, r.claimed_form),
                     to_net_string(r.best_qecc), r.best_eaqecc ? render_compact(*r.best_eaqecc) : std::string{}}) +
           "\n";
  }
  return out;
}

}  // namespace eacqc
