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
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eacqc/bounds.hpp"
#include "eacqc/catalog.hpp"
#include "eacqc/families.hpp"
#include "eacqc/fidelity.hpp"
#include "eacqc/format.hpp"
#include "eacqc/gf.hpp"
#include "eacqc/named_codes.hpp"
#include "eacqc/params.hpp"
#include "eacqc/pauli_oracle.hpp"

namespace eacqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";

  // concat
  std::vector<std::string> inner;
  std::string outer;
  bool relaxed = false;

  // bound
  std::string bound_kind;
  std::string code;
  double delta = 0.0;
  double c_over_n = 0.0;
  std::int64_t n = 0;
  std::int64_t i = 0;

  // family
  std::string family = "I";
  std::optional<std::int64_t> n2;
  std::optional<std::int64_t> n1;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  unsigned threads = 1;

  // construct
  std::string construction;
  std::int64_t k1 = 0, k2 = 0, d1 = 1, d2 = 1, k = 0, d = 1, c = 0, q = 2;
  std::string h1, h2, h;

  // oracle
  std::string named = "513";
  std::string generators;
  int n_alice = 0, c_bob = 0, k_logical = 1;
  std::string decoder;

  // fidelity / threshold
  std::vector<std::string> curves;
  std::string curve;
  double ratio = 1.0;
  std::optional<double> p;
  double p_min = 0.0, p_max = 0.5, step = 0.05;

  // catalog
  std::string table = "S1";
  bool verify = false;
};

inline std::string code_json_text(const AnyCodeParams &any) {
  return std::visit([](const auto &p) { return to_string(p); }, any);
}

inline json code_json(const CodeParams &p) {
  return {{"code", to_string(p)}, {"n", p.n}, {"k", p.k}, {"d", p.d}, {"c", p.c}, {"q", p.q},
          {"d_is_lower_bound", p.d_is_lower_bound}, {"net", p.net_transmission()}};
}

inline json code_json(const AsymCodeParams &p) {
  return {{"code", to_string(p)}, {"n", p.n}, {"k", p.k}, {"d_z", p.d_z}, {"d_x", p.d_x},
          {"c", p.c}, {"q", p.q}, {"net", p.net_transmission()}};
}

inline json code_json(const AnyCodeParams &any) {
  return std::visit([](const auto &p) { return code_json(p); }, any);
}

inline std::int64_t net_of(const AnyCodeParams &any) {
  return std::visit([](const auto &p) { return p.net_transmission(); }, any);
}

inline std::string verdict_word(const BoundVerdict &v) { return v.satisfied ? "SATISFIED" : "VIOLATED"; }

inline json verdict_json(const BoundVerdict &v) {
  return {{"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}, {"satisfied", v.satisfied},
          {"verdict", verdict_word(v)}, {"margin_log2", v.margin_log2}};
}

inline std::string read_matrix_arg(const std::string &arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw eacqc::parse_error("cannot read matrix file '" + arg.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

// ---------------------------------------------------------------------------

inline void cmd_concat(const Options &o, std::ostream &out) {
  if (o.inner.empty()) throw eacqc::parse_error("--inner is required");
  const auto outer_any = parse_any_code(o.outer);
  AnyCodeParams result;
  if (std::holds_alternative<AsymCodeParams>(outer_any)) {
    if (o.inner.size() != 1) throw eacqc::parse_error("asymmetric concatenation takes a single inner code");
    result = concat_asym(parse_asym_code(o.inner.front()), std::get<AsymCodeParams>(outer_any),
                         o.relaxed ? AsymShape::relaxed : AsymShape::strict);
  } else {
    const auto &outer = std::get<CodeParams>(outer_any);
    MixedInnerSpec spec;
    for (const auto &s : o.inner) spec.entries.push_back(parse_inner_entry(s));
    if (spec.entries.size() == 1 && spec.entries.front().multiplicity == 1 &&
        o.inner.front().find("[[") == 0) {
      result = concat(spec.entries.front().code, outer);
    } else {
      result = concat_mixed(spec, outer);
    }
  }
  if (o.format == "json") {
    out << code_json(result).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "code,net\n" << csv_line({code_json_text(result), std::to_string(net_of(result))}) << "\n";
  } else {
    out << code_json_text(result) << " net=" << net_of(result) << "\n";
  }
}

inline void emit_verdict(const Options &o, const std::string &code, const BoundVerdict &v, std::ostream &out) {
  if (o.format == "json") {
    json j = verdict_json(v);
    j["code"] = code;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "code,lhs,rhs,verdict,margin_log2\n"
        << csv_line({code, v.lhs.str(), v.rhs.str(), verdict_word(v), format_double(v.margin_log2)}) << "\n";
  } else {
    out << "lhs=" << v.lhs.str() << " rhs=" << v.rhs.str() << " verdict=" << verdict_word(v) << "\n";
  }
}

inline void emit_scalar(const Options &o, const std::string &name, const std::vector<std::pair<std::string, double>> &vals,
                        std::ostream &out) {
  if (o.format == "json") {
    json j = {{"quantity", name}};
    for (const auto &[k, v] : vals) j[k] = v;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::vector<std::string> head, row;
    for (const auto &[k, v] : vals) {
      head.push_back(k);
      row.push_back(format_double(v));
    }
    out << csv_line(head) << "\n" << csv_line(row) << "\n";
  } else {
    bool first = true;
    for (const auto &[k, v] : vals) {
      out << (first ? "" : " ") << k << "=" << format_double(v);
      first = false;
    }
    out << "\n";
  }
}

inline void cmd_bound(const Options &o, std::ostream &out) {
  const std::string &kind = o.bound_kind;
  if (kind == "hamming" || kind == "asym") {
    if (o.code.empty()) throw eacqc::parse_error("--code is required");
    const auto any = parse_any_code(o.code);
    if (kind == "asym" && !std::holds_alternative<AsymCodeParams>(any)) {
      throw eacqc::parse_error("bound asym expects a literal of the form [[n,k,dz/dx;c]]");
    }
    emit_verdict(o, code_json_text(any), check_bound(any), out);
  } else if (kind == "rate") {
    emit_scalar(o, "asymptotic_rate_bound", {{"value", asymptotic_rate_bound(o.delta, o.c_over_n)}}, out);
  } else if (kind == "entropy") {
    const auto [lo, hi] = binom_entropy_bounds(o.n, o.i);
    emit_scalar(o, "binom_entropy_bounds", {{"lower", lo}, {"upper", hi}}, out);
    if (o.format == "text") out << "binom=" << binom(o.n, o.i).str() << "\n";
  } else {
    throw eacqc::parse_error("unknown bound kind '" + kind + "' (expected hamming, asym, rate or entropy)");
  }
}

inline void cmd_family(const Options &o, std::ostream &out) {
  const FamilyId id = parse_family(o.family);
  std::optional<std::int64_t> n1 = o.n1;
  if (id == FamilyId::ASYM && !n1) n1 = 2;
  if (o.n2 && !o.from && !o.to) {
    const auto m = build_family(id, *o.n2, n1);
    const auto v = check_bound(m.result);
    if (o.format == "json") {
      json j = {{"family", std::string(family_name(id))}, {"n2", *o.n2},
                {"inner", code_json(m.inner)}, {"outer", code_json(m.outer)},
                {"result", code_json(m.result)}, {"bound", verdict_json(v)},
                {"claimed", in_claim_range(id, *o.n2)}};
      out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      out << "family,n2,inner,outer,result,lhs,rhs,verdict,claimed\n"
          << csv_line({std::string(family_name(id)), std::to_string(*o.n2), code_json_text(m.inner),
                       code_json_text(m.outer), code_json_text(m.result), v.lhs.str(), v.rhs.str(),
                       verdict_word(v), in_claim_range(id, *o.n2) ? "yes" : "no"})
          << "\n";
    } else {
      out << "inner=" << code_json_text(m.inner) << " outer=" << code_json_text(m.outer)
          << " result=" << code_json_text(m.result) << "\n";
      out << "lhs=" << v.lhs.str() << " rhs=" << v.rhs.str() << " verdict=" << verdict_word(v) << "\n";
    }
    return;
  }
  if (!o.from || !o.to) throw eacqc::parse_error("give --n2, or both --from and --to");
  const auto entries = scan_violations(id, *o.from, *o.to, n1, o.threads);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto &e : entries) {
      json row = verdict_json(e.verdict);
      row["n2"] = e.n2;
      row["code"] = code_json_text(e.code);
      row["claimed"] = e.claimed;
      arr.push_back(row);
    }
    out << json{{"family", std::string(family_name(id))}, {"members", arr}}.dump(2) << "\n";
  } else {
    const bool csv = o.format == "csv";
    out << (csv ? "n2,code,lhs,rhs,verdict,claimed\n" : "n2 code lhs rhs verdict claimed\n");
    for (const auto &e : entries) {
      std::vector<std::string> f{std::to_string(e.n2), code_json_text(e.code), e.verdict.lhs.str(),
                                 e.verdict.rhs.str(), verdict_word(e.verdict), e.claimed ? "yes" : "no"};
      if (csv) {
        out << csv_line(f) << "\n";
      } else {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
      }
    }
  }
}

inline void emit_code(const Options &o, const CodeParams &p, const json &extra, std::ostream &out) {
  if (o.format == "json") {
    json j = code_json(p);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::vector<std::string> head{"code", "net"}, row{to_string(p), std::to_string(p.net_transmission())};
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      head.push_back(it.key());
      row.push_back(it.value().is_boolean() ? (it.value().get<bool>() ? "true" : "false") : it.value().dump());
    }
    out << csv_line(head) << "\n" << csv_line(row) << "\n";
  } else {
    out << to_string(p) << " net=" << p.net_transmission();
    for (auto it = extra.begin(); it != extra.end(); ++it) out << " " << it.key() << "=" << it.value().dump();
    out << "\n";
  }
}

inline void cmd_construct(const Options &o, std::ostream &out) {
  const std::string &kind = o.construction;
  if (kind == "css") {
    const auto field = Field::of_size(o.q);
    const auto h1 = Matrix::parse(field, read_matrix_arg(o.h1));
    const auto h2 = Matrix::parse(field, read_matrix_arg(o.h2));
    const auto p = css_construct({o.n, o.k1, o.d1}, {o.n, o.k2, o.d2}, h1, h2);
    emit_code(o, p, json::object(), out);
  } else if (kind == "hermitian") {
    const auto field = Field::square_of(o.q);
    auto h = Matrix::parse(field, read_matrix_arg(o.h));
    if (h.rows() == 0) h = Matrix(field, 0, static_cast<std::size_t>(o.n));
    const auto p = hermitian_construct({o.n, o.k, o.d}, h);
    emit_code(o, p, json::object(), out);
  } else if (kind == "eaqmds") {
    const auto r = eaqmds_params(o.n, o.k1, o.c, o.q);
    emit_code(o, r.params,
              {{"singleton_identity", r.singleton_identity},
               {"distance_in_net_range", r.distance_in_net_range},
               {"net_positive", r.net_positive}},
              out);
  } else {
    throw eacqc::parse_error("unknown construction '" + kind + "' (expected css, hermitian or eaqmds)");
  }
}

inline void cmd_oracle(const Options &o, std::ostream &out) {
  StabilizerSpec spec;
  DecoderOrder order = DecoderOrder::ebit_first;
  if (!o.generators.empty()) {
    spec.n_alice = o.n_alice;
    spec.c_bob = o.c_bob;
    spec.k = o.k_logical;
    std::stringstream ss(o.generators);
    std::string g;
    while (std::getline(ss, g, ',')) spec.generators.push_back(PauliOperator::from_string(g));
  } else {
    const auto code = named_code(o.named);
    spec = code.spec;
    order = code.decoder;
  }
  if (!o.decoder.empty()) order = parse_decoder_order(o.decoder);
  const auto dec = build_decoder(spec, order, o.threads);
  const auto table = correctable_counts(spec, dec, o.threads);
  if (o.format == "json") {
    out << to_json(table).dump() << "\n";
  } else {
    const bool csv = o.format == "csv";
    out << (csv ? "i,j,count\n" : "");
    for (int i = 0; i <= table.n; ++i) {
      for (int j = 0; j <= table.c; ++j) {
        if (table.counts[i][j] == 0) continue;
        if (csv) {
          out << i << "," << j << "," << table.counts[i][j] << "\n";
        } else {
          out << "c" << i << j << "=" << table.counts[i][j] << "\n";
        }
      }
    }
    if (!csv) out << "total=" << table.total() << " decoder=" << decoder_order_name(order) << "\n";
  }
}

inline std::vector<Curve> curve_list(const Options &o) {
  std::vector<Curve> ids;
  for (const auto &s : o.curves) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) ids.push_back(parse_curve(part));
    }
  }
  if (ids.empty()) {
    ids = {Curve::FE_UNENCODED, Curve::FE_CQC25, Curve::FE_EACQC_BOWEN, Curve::FE_EACQC_REP};
  }
  return ids;
}

inline void cmd_fidelity(const Options &o, std::ostream &out) {
  const auto ids = curve_list(o);
  CurveTable t;
  if (o.p) {
    t.ids = ids;
    t.p.push_back(*o.p);
    std::vector<double> vals;
    for (auto id : ids) vals.push_back(eval_fidelity(id, *o.p, o.ratio));
    t.values.push_back(vals);
  } else {
    t = sample_curves(ids, o.ratio, o.p_min, o.p_max, o.step);
  }
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t r = 0; r < t.p.size(); ++r) {
      json row = {{"p", t.p[r]}};
      for (std::size_t c = 0; c < ids.size(); ++c) row[std::string(curve_column(ids[c]))] = t.values[r][c];
      rows.push_back(row);
    }
    out << json{{"ratio", o.ratio}, {"rows", rows}}.dump(2) << "\n";
  } else {
    out << to_csv(t);
  }
}

inline void cmd_threshold(const Options &o, std::ostream &out) {
  const Curve id = parse_curve(o.curve);
  const auto th = find_threshold(id, o.ratio);
  if (o.format == "json") {
    out << json{{"curve", std::string(curve_column(id))}, {"ratio", o.ratio},
                {"threshold", th ? json(*th) : json(nullptr)}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "curve,ratio,threshold\n"
        << csv_line({std::string(curve_column(id)), format_double(o.ratio), th ? format_double(*th) : "none"})
        << "\n";
  } else {
    out << (th ? format_double(*th, 6) : std::string("none")) << "\n";
  }
}

inline void cmd_catalog(const Options &o, std::ostream &out) {
  if (o.verify) {
    const auto rows = catalog_table(o.table);
    json arr = json::array();
    const bool csv = o.format == "csv";
    if (o.format == "text" || csv) {
      out << (csv ? "row,eacqc,recomputed,arithmetic,beats_qecc,beats_eaqecc\n"
                  : "row eacqc recomputed arithmetic beats_qecc beats_eaqecc\n");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto rep = verify_row(rows[i]);
      const std::string eaq = rep.beats_eaqecc ? (*rep.beats_eaqecc ? "yes" : "no") : "-";
      std::vector<std::string> f{std::to_string(i + 1), render(rows[i].claimed, rows[i].claimed_form),
                                 to_string(rep.recomputed), rep.arithmetic_ok() ? "ok" : "MISMATCH",
                                 rep.beats_qecc ? "yes" : "no", eaq};
      if (o.format == "json") {
        arr.push_back({{"row", i + 1}, {"eacqc", f[1]}, {"recomputed", f[2]}, {"arithmetic_ok", rep.arithmetic_ok()},
                       {"length_ok", rep.length_ok}, {"net_ok", rep.net_ok}, {"distance_ok", rep.distance_ok},
                       {"ebits_checked", rep.ebits_checked}, {"ebits_ok", rep.ebits_ok},
                       {"beats_qecc", rep.beats_qecc},
                       {"beats_eaqecc", rep.beats_eaqecc ? json(*rep.beats_eaqecc) : json(nullptr)}});
      } else if (csv) {
        out << csv_line(f) << "\n";
      } else {
        for (std::size_t k = 0; k < f.size(); ++k) out << (k ? " " : "") << f[k];
        out << "\n";
      }
    }
    if (o.format == "json") out << json{{"table", o.table}, {"rows", arr}}.dump(2) << "\n";
    return;
  }
  if (o.format == "csv") {
    out << export_csv(o.table);
  } else if (o.format == "json") {
    out << export_json(o.table);
  } else {
    for (const auto &r : catalog_table(o.table)) {
      out << inner_text(r.inner) << " | " << render(r.outer, r.outer_form) << " | "
          << render(r.claimed, r.claimed_form) << " | " << to_net_string(r.best_qecc) << " | "
          << (r.best_eaqecc ? render_compact(*r.best_eaqecc) : std::string("-")) << "\n";
    }
  }
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Returns the exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  detail::Options o;
  CLI::App app{"Parameter algebra, bounds, oracles and fidelity curves for entanglement-assisted concatenated codes",
               "eacqc"};
  app.require_subcommand(1);
  // "-h" is left free for the Hermitian parity-check option of `construct`.
  app.set_help_flag("--help", "Print this help message and exit");
  const std::vector<std::string> formats{"text", "json", "csv"};
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto *concat_cmd = app.add_subcommand("concat", "Concatenate an inner code (or a mixed multiset) with an outer code");
  // A per-occurrence callback: a vector option would treat "[[...]]" as a bracketed list and split it.
  concat_cmd
      ->add_option_function<std::string>(
          "--inner", [&o](const std::string &v) { o.inner.push_back(v); },
          "Inner code literal, optionally prefixed by a multiplicity 'Mx'; repeatable")
      ->trigger_on_parse()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->required();
  concat_cmd->add_option("--outer", o.outer, "Outer code literal")->required();
  concat_cmd->add_flag("--relaxed", o.relaxed, "Allow asymmetric inputs outside the repetition-family shape");
  add_format(concat_cmd);

  auto *bound_cmd = app.add_subcommand("bound", "Hamming-type bounds and entropy estimates");
  bound_cmd->add_option("kind", o.bound_kind, "hamming | asym | rate | entropy")->required();
  bound_cmd->add_option("--code", o.code, "Code literal for hamming/asym");
  bound_cmd->add_option("--delta", o.delta, "Relative distance for rate");
  bound_cmd->add_option("--c-over-n", o.c_over_n, "Ebit ratio c/n for rate");
  bound_cmd->add_option("--n", o.n, "n for entropy");
  bound_cmd->add_option("--i", o.i, "i for entropy");
  add_format(bound_cmd);

  auto *family_cmd = app.add_subcommand("family", "Build or scan the bound-violating families");
  family_cmd->add_option("--id", o.family, "I | II | III | IV | ASYM");
  family_cmd->add_option("--n2", o.n2, "Outer length");
  family_cmd->add_option("--n1", o.n1, "Inner length for ASYM (default 2)");
  family_cmd->add_option("--from", o.from, "Scan start");
  family_cmd->add_option("--to", o.to, "Scan end (inclusive)");
  family_cmd->add_option("--threads", o.threads, "Worker threads");
  add_format(family_cmd);

  auto *construct_cmd = app.add_subcommand("construct", "Ebit counts from classical parity-check matrices");
  construct_cmd->add_option("kind", o.construction, "css | hermitian | eaqmds")->required();
  construct_cmd->add_option("--n", o.n, "Length");
  construct_cmd->add_option("--k1", o.k1, "Dimension of C1 (css) or of the MDS code (eaqmds)");
  construct_cmd->add_option("--d1", o.d1, "Distance of C1");
  construct_cmd->add_option("--k2", o.k2, "Dimension of C2");
  construct_cmd->add_option("--d2", o.d2, "Distance of C2");
  construct_cmd->add_option("--k", o.k, "Dimension (hermitian)");
  construct_cmd->add_option("--d", o.d, "Distance (hermitian)");
  construct_cmd->add_option("--c", o.c, "Ebits (eaqmds)");
  construct_cmd->add_option("--q", o.q, "Field size q (css: GF(q); hermitian: GF(q^2))");
  construct_cmd->add_option("--h1", o.h1, "H1 as hex rows separated by ';' or newlines, or @file");
  construct_cmd->add_option("--h2", o.h2, "H2, same format");
  construct_cmd->add_option("--h", o.h, "H over GF(q^2), same format");
  add_format(construct_cmd);

  auto *oracle_cmd = app.add_subcommand("oracle", "Correctable-error counts by exhaustive Pauli enumeration");
  oracle_cmd->add_option("--code", o.named, "513 | bowen | rep");
  oracle_cmd->add_option("--generators", o.generators, "Comma-separated generators, e.g. XZZXI,IXZZX,...");
  oracle_cmd->add_option("--n-alice", o.n_alice, "Alice qubits for --generators");
  oracle_cmd->add_option("--c-bob", o.c_bob, "Bob qubits for --generators");
  oracle_cmd->add_option("--k", o.k_logical, "Logical qubits for --generators");
  oracle_cmd->add_option("--decoder", o.decoder, "ebit-first | total-weight");
  oracle_cmd->add_option("--threads", o.threads, "Worker threads");
  add_format(oracle_cmd);

  auto *fidelity_cmd = app.add_subcommand("fidelity", "Sample fidelity curves");
  fidelity_cmd->add_option("--curves", o.curves, "Comma-separated curve ids");
  fidelity_cmd->add_option("--ratio", o.ratio, "Ebit noise ratio r = p_b / p_a");
  fidelity_cmd->add_option("--p", o.p, "Single evaluation point");
  fidelity_cmd->add_option("--p-min", o.p_min, "Grid start");
  fidelity_cmd->add_option("--p-max", o.p_max, "Grid end");
  fidelity_cmd->add_option("--step", o.step, "Grid step");
  add_format(fidelity_cmd);

  auto *threshold_cmd = app.add_subcommand("threshold", "Crossing with the unencoded fidelity 1 - 3p/4");
  threshold_cmd->add_option("--curve", o.curve, "Curve id")->required();
  threshold_cmd->add_option("--ratio", o.ratio, "Ebit noise ratio r = p_b / p_a");
  add_format(threshold_cmd);

  auto *catalog_cmd = app.add_subcommand("catalog", "Export or verify the embedded construction tables");
  catalog_cmd->add_option("--table", o.table, "S1 | S2 | S3 | S4");
  catalog_cmd->add_flag("--verify", o.verify, "Recompute every row");
  add_format(catalog_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (concat_cmd->parsed()) detail::cmd_concat(o, out);
    if (bound_cmd->parsed()) detail::cmd_bound(o, out);
    if (family_cmd->parsed()) detail::cmd_family(o, out);
    if (construct_cmd->parsed()) detail::cmd_construct(o, out);
    if (oracle_cmd->parsed()) detail::cmd_oracle(o, out);
    if (fidelity_cmd->parsed()) detail::cmd_fidelity(o, out);
    if (threshold_cmd->parsed()) detail::cmd_threshold(o, out);
    if (catalog_cmd->parsed()) detail::cmd_catalog(o, out);
  } catch (const eacqc::parse_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eacqc::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace eacqc::cli
