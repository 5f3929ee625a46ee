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

#include <string>
#include <string_view>
#include <vector>

#include "eacqc/pauli_oracle.hpp"

namespace eacqc {

struct NamedCode {
  std::string_view id;
  std::string_view description;
  StabilizerSpec spec;
  DecoderOrder decoder;
};

namespace detail {

inline StabilizerSpec make_spec(int n_alice, int c_bob, int k, std::initializer_list<std::string_view> gens) {
  StabilizerSpec s{n_alice, c_bob, k, {}};
  for (auto g : gens) s.generators.push_back(PauliOperator::from_string(g));
  validate(s);
  return s;
}

}  // namespace detail

// Laflamme-Miquel-Paz-Zurek / Bennett et al. five-qubit code, cyclic generators.
inline NamedCode five_qubit_code() {
  return {"513", "[[5,1,3]] perfect code",
          detail::make_spec(5, 0, 1, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
          DecoderOrder::total_weight};
}

// Bowen's [[3,1,3;2]]: the five-qubit generators with qubits 3 and 4 held by
// Bob as ebit halves. Its coefficient table matches the minimum-weight decoder.
inline NamedCode bowen_code() {
  return {"bowen", "Bowen [[3,1,3;2]] EA code",
          detail::make_spec(3, 2, 1, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
          DecoderOrder::total_weight};
}

// [[3,1,3;2]] EA repetition code: CSS extension of the [3,1,3] parity checks,
// Alice qubits 0..2, Bob qubits 3..4.
inline NamedCode ea_repetition_code() {
  return {"rep", "[[3,1,3;2]] EA repetition code",
          detail::make_spec(3, 2, 1, {"ZZIZI", "IZZIZ", "XXIIX", "IXXXI"}),
          DecoderOrder::ebit_first};
}

inline std::vector<NamedCode> named_codes() {
  return {five_qubit_code(), bowen_code(), ea_repetition_code()};
}

inline NamedCode named_code(std::string_view id) {
  for (auto &code : named_codes()) {
    if (code.id == id) return code;
  }
  throw parse_error("unknown named code '" + std::string(id) + "' (expected 513, bowen or rep)");
}

}  // namespace eacqc
