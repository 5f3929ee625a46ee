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

#include <string_view>

namespace eacqc {

// Catalog of concatenated constructions with best-known comparison codes.
// Codes in "net" form list the net transmission k - c in the k slot.
inline constexpr std::string_view kCatalogJson = R"json({
  "version": 1,
  "rows": [
    {"table": "S1", "inner": ["17x[[4,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[68,2,>=18]]", "claimed_form": "net", "best_qecc": "[[68,2,16]]", "qecc_bold": false, "best_eaqecc": "[[68,2,16]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["16x[[4,2,2;0]]", "1x[[5,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[69,2,>=18]]", "claimed_form": "net", "best_qecc": "[[69,2,16]]", "qecc_bold": false, "best_eaqecc": "[[69,1,17]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["15x[[4,2,2;0]]", "2x[[5,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[70,2,>=18]]", "claimed_form": "net", "best_qecc": "[[70,2,16]]", "qecc_bold": false, "best_eaqecc": "[[70,2,17]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["14x[[4,2,2;0]]", "3x[[5,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[71,2,>=18]]", "claimed_form": "net", "best_qecc": "[[71,2,16]]", "qecc_bold": false, "best_eaqecc": "[[71,1,18]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["12x[[4,2,2;0]]", "5x[[5,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[73,2,>=18]]", "claimed_form": "net", "best_qecc": "[[73,2,16]]", "qecc_bold": false, "best_eaqecc": "[[73,1,18]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["11x[[4,2,2;0]]", "6x[[5,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[74,2,>=18]]", "claimed_form": "net", "best_qecc": "[[74,2,16]]", "qecc_bold": false, "best_eaqecc": "[[74,2,17]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["10x[[4,2,2;0]]", "7x[[5,2,2;0]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[75,2,>=18]]", "claimed_form": "net", "best_qecc": "[[75,2,17]]", "qecc_bold": false, "best_eaqecc": "[[75,1,18]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["16x[[4,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[67,1,>=18]]", "claimed_form": "net", "best_qecc": "[[67,1,17]]", "qecc_bold": false, "best_eaqecc": "[[67,1,17]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["15x[[4,2,2;0]]", "1x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[68,1,>=18]]", "claimed_form": "net", "best_qecc": "[[68,1,17]]", "qecc_bold": false, "best_eaqecc": "[[68,0,18]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed; printed inner multiplicity 16 corrected to 15 (length 68, 17 outer symbols)", "inner_as_printed": ["16x[[4,2,2;0]]", "1x[[5,2,2;0]]", "1x[[3,2,2;1]]"]},
    {"table": "S1", "inner": ["14x[[4,2,2;0]]", "2x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[69,1,>=18]]", "claimed_form": "net", "best_qecc": "[[69,1,17]]", "qecc_bold": false, "best_eaqecc": "[[69,1,17]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["13x[[4,2,2;0]]", "3x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[70,1,>=18]]", "claimed_form": "net", "best_qecc": "[[70,1,17]]", "qecc_bold": false, "best_eaqecc": "[[70,0,18]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["9x[[4,2,2;0]]", "7x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,5,9;4]]_4", "outer_form": "full", "claimed": "[[74,1,>=18]]", "claimed_form": "net", "best_qecc": "[[74,1,17]]", "qecc_bold": false, "best_eaqecc": "[[74,0,18]]", "eaqecc_bold": false, "notes": "outer stored in full form; net checked against claimed"},
    {"table": "S1", "inner": ["17x[[4,2,2;0]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[68,6,>=16]]", "claimed_form": "net", "best_qecc": "[[68,6,14]]", "qecc_bold": false, "best_eaqecc": "[[68,6,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["16x[[4,2,2;0]]", "1x[[5,2,2;0]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[69,6,>=16]]", "claimed_form": "net", "best_qecc": "[[69,6,14]]", "qecc_bold": false, "best_eaqecc": "[[69,5,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["15x[[4,2,2;0]]", "2x[[5,2,2;0]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[70,6,>=16]]", "claimed_form": "net", "best_qecc": "[[70,6,14]]", "qecc_bold": false, "best_eaqecc": "[[70,6,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["14x[[4,2,2;0]]", "3x[[5,2,2;0]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[71,6,>=16]]", "claimed_form": "net", "best_qecc": "[[71,6,14]]", "qecc_bold": false, "best_eaqecc": "[[71,5,16]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["12x[[4,2,2;0]]", "5x[[5,2,2;0]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[73,6,>=16]]", "claimed_form": "net", "best_qecc": "[[73,6,14]]", "qecc_bold": false, "best_eaqecc": "[[73,5,16]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["16x[[4,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[67,5,>=16]]", "claimed_form": "net", "best_qecc": "[[67,5,14]]", "qecc_bold": false, "best_eaqecc": "[[67,5,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["15x[[4,2,2;0]]", "2x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[66,4,>=16]]", "claimed_form": "net", "best_qecc": "[[66,4,14]]", "qecc_bold": false, "best_eaqecc": "[[66,4,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["15x[[4,2,2;0]]", "1x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[68,5,>=16]]", "claimed_form": "net", "best_qecc": "[[68,5,14]]", "qecc_bold": false, "best_eaqecc": "[[68,4,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["14x[[4,2,2;0]]", "2x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[69,5,>=16]]", "claimed_form": "net", "best_qecc": "[[69,5,14]]", "qecc_bold": false, "best_eaqecc": "[[69,5,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["13x[[4,2,2;0]]", "3x[[5,2,2;0]]", "1x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[70,5,>=16]]", "claimed_form": "net", "best_qecc": "[[70,5,14]]", "qecc_bold": false, "best_eaqecc": "[[70,4,16]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["14x[[4,2,2;0]]", "1x[[5,2,2;0]]", "2x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[67,4,>=16]]", "claimed_form": "net", "best_qecc": "[[67,4,14]]", "qecc_bold": false, "best_eaqecc": "[[67,3,16]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["13x[[4,2,2;0]]", "2x[[5,2,2;0]]", "2x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[68,4,>=16]]", "claimed_form": "net", "best_qecc": "[[68,4,14]]", "qecc_bold": false, "best_eaqecc": "[[68,4,15]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["12x[[4,2,2;0]]", "3x[[5,2,2;0]]", "2x[[3,2,2;1]]"], "outer": "[[17,3,8]]_4", "outer_form": "net", "claimed": "[[69,4,>=16]]", "claimed_form": "net", "best_qecc": "[[69,4,14]]", "qecc_bold": false, "best_eaqecc": "[[69,3,16]]", "eaqecc_bold": false, "notes": "outer known in net form only; net arithmetic checked"},
    {"table": "S1", "inner": ["13x[[10,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[130,2,>=28]]", "claimed_form": "net", "best_qecc": "[[130,2,26]]", "qecc_bold": true, "best_eaqecc": "[[130,2,27]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["12x[[10,2,4;0]]", "1x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[131,2,>=28]]", "claimed_form": "net", "best_qecc": "[[131,2,26]]", "qecc_bold": true, "best_eaqecc": "[[131,1,27]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["11x[[10,2,4;0]]", "2x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[132,2,>=28]]", "claimed_form": "net", "best_qecc": "[[132,2,26]]", "qecc_bold": true, "best_eaqecc": "[[132,2,27]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["10x[[10,2,4;0]]", "3x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[133,2,>=28]]", "claimed_form": "net", "best_qecc": "[[133,2,26]]", "qecc_bold": true, "best_eaqecc": "[[133,1,27]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["9x[[10,2,4;0]]", "4x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[134,2,>=28]]", "claimed_form": "net", "best_qecc": "[[134,2,26]]", "qecc_bold": false, "best_eaqecc": "[[134,1,27]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["8x[[10,2,4;0]]", "5x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[135,2,>=28]]", "claimed_form": "net", "best_qecc": "[[135,2,27]]", "qecc_bold": false, "best_eaqecc": "[[135,2,28]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["7x[[10,2,4;0]]", "6x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[136,2,>=28]]", "claimed_form": "net", "best_qecc": "[[136,2,27]]", "qecc_bold": false, "best_eaqecc": "[[136,2,28]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["6x[[10,2,4;0]]", "7x[[11,2,4;0]]"], "outer": "[[13,1,7]]_4", "outer_form": "net", "claimed": "[[137,2,>=28]]", "claimed_form": "net", "best_qecc": "[[137,2,27]]", "qecc_bold": false, "best_eaqecc": "[[137,1,28]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["14x[[10,2,4;0]]"], "outer": "[[14,2,7]]_4", "outer_form": "net", "claimed": "[[140,4,>=28]]", "claimed_form": "net", "best_qecc": "[[140,4,27]]", "qecc_bold": true, "best_eaqecc": "[[140,4,28]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["13x[[10,2,4;0]]", "1x[[11,2,4;0]]"], "outer": "[[14,2,7]]_4", "outer_form": "net", "claimed": "[[141,4,>=28]]", "claimed_form": "net", "best_qecc": "[[141,4,27]]", "qecc_bold": true, "best_eaqecc": "[[141,3,28]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["12x[[10,2,4;0]]", "2x[[11,2,4;0]]"], "outer": "[[14,2,7]]_4", "outer_form": "net", "claimed": "[[142,4,>=28]]", "claimed_form": "net", "best_qecc": "[[142,4,27]]", "qecc_bold": true, "best_eaqecc": "[[142,4,28]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["15x[[10,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[150,2,>=32]]", "claimed_form": "net", "best_qecc": "[[150,2,30]]", "qecc_bold": false, "best_eaqecc": "[[150,2,30]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["14x[[10,2,4;0]]", "1x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[151,2,>=32]]", "claimed_form": "net", "best_qecc": "[[151,2,30]]", "qecc_bold": false, "best_eaqecc": "[[151,1,31]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["13x[[10,2,4;0]]", "2x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[152,2,>=32]]", "claimed_form": "net", "best_qecc": "[[152,2,30]]", "qecc_bold": false, "best_eaqecc": "[[152,2,31]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["12x[[10,2,4;0]]", "3x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[153,2,>=32]]", "claimed_form": "net", "best_qecc": "[[153,2,30]]", "qecc_bold": false, "best_eaqecc": "[[153,1,31]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["11x[[10,2,4;0]]", "4x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[154,2,>=32]]", "claimed_form": "net", "best_qecc": "[[154,2,30]]", "qecc_bold": false, "best_eaqecc": "[[154,2,31]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["10x[[10,2,4;0]]", "5x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[155,2,>=32]]", "claimed_form": "net", "best_qecc": "[[155,2,30]]", "qecc_bold": false, "best_eaqecc": "[[155,1,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["9x[[10,2,4;0]]", "6x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[156,2,>=32]]", "claimed_form": "net", "best_qecc": "[[156,2,30]]", "qecc_bold": false, "best_eaqecc": "[[156,2,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["8x[[10,2,4;0]]", "7x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[157,2,>=32]]", "claimed_form": "net", "best_qecc": "[[157,2,31]]", "qecc_bold": true, "best_eaqecc": "[[157,1,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["7x[[10,2,4;0]]", "8x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[158,2,>=32]]", "claimed_form": "net", "best_qecc": "[[158,2,31]]", "qecc_bold": true, "best_eaqecc": "[[158,2,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["6x[[10,2,4;0]]", "9x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[159,2,>=32]]", "claimed_form": "net", "best_qecc": "[[159,2,31]]", "qecc_bold": true, "best_eaqecc": "[[159,1,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S1", "inner": ["5x[[10,2,4;0]]", "10x[[11,2,4;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[160,2,>=32]]", "claimed_form": "net", "best_qecc": "[[160,2,31]]", "qecc_bold": true, "best_eaqecc": "[[160,2,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["16x[[10,2,4;0]]"], "outer": "[[16,2,8]]_4", "outer_form": "net", "claimed": "[[160,4,>=32]]", "claimed_form": "net", "best_qecc": "[[160,4,31]]", "qecc_bold": true, "best_eaqecc": "[[160,4,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["15x[[10,2,4;0]]", "1x[[11,2,4;0]]"], "outer": "[[16,2,8]]_4", "outer_form": "net", "claimed": "[[161,4,>=32]]", "claimed_form": "net", "best_qecc": "[[161,4,31]]", "qecc_bold": true, "best_eaqecc": "[[161,3,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["14x[[10,2,4;0]]", "2x[[11,2,4;0]]"], "outer": "[[16,2,8]]_4", "outer_form": "net", "claimed": "[[162,4,>=32]]", "claimed_form": "net", "best_qecc": "[[162,4,31]]", "qecc_bold": true, "best_eaqecc": "[[162,4,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["15x[[10,2,4;0]]", "1x[[8,2,4;2]]"], "outer": "[[16,2,8]]_4", "outer_form": "net", "claimed": "[[158,2,>=32]]", "claimed_form": "net", "best_qecc": "[[158,2,31]]", "qecc_bold": true, "best_eaqecc": "[[158,2,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["14x[[10,2,4;0]]", "1x[[11,2,4;0]]", "1x[[8,2,4;2]]"], "outer": "[[16,2,8]]_4", "outer_form": "net", "claimed": "[[159,2,>=32]]", "claimed_form": "net", "best_qecc": "[[159,2,31]]", "qecc_bold": true, "best_eaqecc": "[[159,1,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["13x[[10,2,4;0]]", "2x[[11,2,4;0]]", "1x[[8,2,4;2]]"], "outer": "[[16,2,8]]_4", "outer_form": "net", "claimed": "[[160,2,>=32]]", "claimed_form": "net", "best_qecc": "[[160,2,31]]", "qecc_bold": true, "best_eaqecc": "[[160,2,32]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["17x[[10,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[170,2,>=36]]", "claimed_form": "net", "best_qecc": "[[170,2,33]]", "qecc_bold": true, "best_eaqecc": "[[170,2,34]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["16x[[10,2,4;0]]", "1x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[171,2,>=36]]", "claimed_form": "net", "best_qecc": "[[171,2,33]]", "qecc_bold": true, "best_eaqecc": "[[171,1,35]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["15x[[10,2,4;0]]", "2x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[172,2,>=36]]", "claimed_form": "net", "best_qecc": "[[172,2,34]]", "qecc_bold": true, "best_eaqecc": "[[172,2,35]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["14x[[10,2,4;0]]", "3x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[173,2,>=36]]", "claimed_form": "net", "best_qecc": "[[173,2,34]]", "qecc_bold": true, "best_eaqecc": "[[173,1,35]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["13x[[10,2,4;0]]", "4x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[174,2,>=36]]", "claimed_form": "net", "best_qecc": "[[174,2,34]]", "qecc_bold": true, "best_eaqecc": "[[174,2,35]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["12x[[10,2,4;0]]", "5x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[175,2,>=36]]", "claimed_form": "net", "best_qecc": "[[175,2,34]]", "qecc_bold": true, "best_eaqecc": "[[175,1,35]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["11x[[10,2,4;0]]", "6x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[176,2,>=36]]", "claimed_form": "net", "best_qecc": "[[176,2,34]]", "qecc_bold": true, "best_eaqecc": "[[176,2,35]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["10x[[10,2,4;0]]", "7x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[177,2,>=36]]", "claimed_form": "net", "best_qecc": "[[177,2,34]]", "qecc_bold": true, "best_eaqecc": "[[177,1,36]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["9x[[10,2,4;0]]", "8x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[178,2,>=36]]", "claimed_form": "net", "best_qecc": "[[178,2,35]]", "qecc_bold": true, "best_eaqecc": "[[178,2,36]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["8x[[10,2,4;0]]", "9x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[179,2,>=36]]", "claimed_form": "net", "best_qecc": "[[179,2,35]]", "qecc_bold": true, "best_eaqecc": "[[179,1,36]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["7x[[10,2,4;0]]", "10x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[180,2,>=36]]", "claimed_form": "net", "best_qecc": "[[180,2,35]]", "qecc_bold": true, "best_eaqecc": "[[180,2,36]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["5x[[10,2,4;0]]", "12x[[11,2,4;0]]"], "outer": "[[17,1,9]]_4", "outer_form": "net", "claimed": "[[182,2,>=36]]", "claimed_form": "net", "best_qecc": "[[182,2,35]]", "qecc_bold": true, "best_eaqecc": "[[182,2,36]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound; printed multiplicities 6 and 11 corrected to 5 and 12 (length 182)", "inner_as_printed": ["6x[[10,2,4;0]]", "11x[[11,2,4;0]]"]},
    {"table": "S2", "inner": ["15x[[16,2,6;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[240,2,>=48]]", "claimed_form": "net", "best_qecc": "[[240,2,46]]", "qecc_bold": true, "best_eaqecc": "[[240,2,48]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["14x[[16,2,6;0]]", "1x[[17,2,6;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[241,2,>=48]]", "claimed_form": "net", "best_qecc": "[[241,2,47]]", "qecc_bold": true, "best_eaqecc": "[[241,1,48]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["13x[[16,2,6;0]]", "2x[[17,2,6;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[242,2,>=48]]", "claimed_form": "net", "best_qecc": "[[242,2,47]]", "qecc_bold": true, "best_eaqecc": "[[242,2,48]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["12x[[16,2,6;0]]", "3x[[17,2,6;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[243,2,>=48]]", "claimed_form": "net", "best_qecc": "[[243,2,47]]", "qecc_bold": true, "best_eaqecc": "[[243,1,48]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["11x[[16,2,6;0]]", "4x[[17,2,6;0]]"], "outer": "[[15,1,8]]_4", "outer_form": "net", "claimed": "[[244,2,>=48]]", "claimed_form": "net", "best_qecc": "[[244,2,47]]", "qecc_bold": true, "best_eaqecc": "[[244,2,48]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["9x[[28,2,10;0]]"], "outer": "[[9,1,5]]_4", "outer_form": "net", "claimed": "[[252,2,>=50]]", "claimed_form": "net", "best_qecc": "[[252,2,49]]", "qecc_bold": true, "best_eaqecc": "[[252,2,50]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["8x[[28,2,10;0]]", "1x[[29,2,10;0]]"], "outer": "[[9,1,5]]_4", "outer_form": "net", "claimed": "[[253,2,>=50]]", "claimed_form": "net", "best_qecc": "[[253,2,49]]", "qecc_bold": true, "best_eaqecc": "[[253,1,50]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S2", "inner": ["7x[[28,2,10;0]]", "2x[[29,2,10;0]]"], "outer": "[[9,1,5]]_4", "outer_form": "net", "claimed": "[[254,2,>=50]]", "claimed_form": "net", "best_qecc": "[[254,2,49]]", "qecc_bold": true, "best_eaqecc": "[[254,2,50]]", "eaqecc_bold": true, "notes": "outer known in net form only; net arithmetic checked; provenance: unverified-bound"},
    {"table": "S3", "inner": ["3x[[5,1,3;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[15,2,6;1]]", "claimed_form": "full", "best_qecc": "[[15,1,5]]", "qecc_bold": false, "best_eaqecc": "[[15,8,6;7]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["3x[[17,1,7;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[51,2,14;1]]", "claimed_form": "full", "best_qecc": "[[51,1,13]]", "qecc_bold": false, "best_eaqecc": "[[51,2,14;1]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["3x[[25,1,9;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[75,2,18;1]]", "claimed_form": "full", "best_qecc": "[[75,1,17]]", "qecc_bold": false, "best_eaqecc": "[[75,37,18;36]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["3x[[29,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[87,2,22;1]]", "claimed_form": "full", "best_qecc": "[[87,1,21]]", "qecc_bold": false, "best_eaqecc": "[[87,43,21;42]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[30,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[88,2,22;1]]", "claimed_form": "full", "best_qecc": "[[88,1,21]]", "qecc_bold": false, "best_eaqecc": "[[88,27,21;27]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[31,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[89,2,22;1]]", "claimed_form": "full", "best_qecc": "[[89,1,21]]", "qecc_bold": false, "best_eaqecc": "[[89,29,21;28]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[32,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[90,2,22;1]]", "claimed_form": "full", "best_qecc": "[[90,1,21]]", "qecc_bold": false, "best_eaqecc": "[[90,31,21;31]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[33,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[91,2,22;1]]", "claimed_form": "full", "best_qecc": "[[91,1,21]]", "qecc_bold": false, "best_eaqecc": "[[91,30,21;29]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[34,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[92,2,22;1]]", "claimed_form": "full", "best_qecc": "[[92,1,21]]", "qecc_bold": false, "best_eaqecc": "[[92,0,22;0]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[35,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[93,2,22;1]]", "claimed_form": "full", "best_qecc": "[[93,1,21]]", "qecc_bold": false, "best_eaqecc": "[[93,32,21;31]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[36,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[94,2,22;1]]", "claimed_form": "full", "best_qecc": "[[94,1,21]]", "qecc_bold": false, "best_eaqecc": "[[94,2,22;2]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[37,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[95,2,22;1]]", "claimed_form": "full", "best_qecc": "[[95,1,21]]", "qecc_bold": false, "best_eaqecc": "[[95,2,22;1]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[39,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[97,2,22;1]]", "claimed_form": "full", "best_qecc": "[[97,1,21]]", "qecc_bold": false, "best_eaqecc": "[[97,45,22;44]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[40,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[98,2,22;1]]", "claimed_form": "full", "best_qecc": "[[98,1,21]]", "qecc_bold": false, "best_eaqecc": "[[98,0,22;0]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[29,1,11;0]]", "1x[[41,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[99,2,22;1]]", "claimed_form": "full", "best_qecc": "[[99,1,21]]", "qecc_bold": false, "best_eaqecc": "[[99,32,21;31]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[30,1,11;0]]", "1x[[40,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[100,2,22;1]]", "claimed_form": "full", "best_qecc": "[[100,1,21]]", "qecc_bold": false, "best_eaqecc": "[[100,0,22;0]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[30,1,11;0]]", "1x[[41,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[101,2,22;1]]", "claimed_form": "full", "best_qecc": "[[101,1,21]]", "qecc_bold": false, "best_eaqecc": "[[101,32,21;31]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[31,1,11;0]]", "1x[[40,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[102,2,22;1]]", "claimed_form": "full", "best_qecc": "[[102,1,21]]", "qecc_bold": false, "best_eaqecc": "[[102,0,22;0]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S3", "inner": ["2x[[31,1,11;0]]", "1x[[41,1,11;0]]"], "outer": "[[3,2,2;1]]", "outer_form": "full", "claimed": "[[103,2,22;1]]", "claimed_form": "full", "best_qecc": "[[103,1,21]]", "qecc_bold": false, "best_eaqecc": "[[103,4,22;3]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["17x[[4,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[68,8,16;2]]", "claimed_form": "full", "best_qecc": "[[68,6,14]]", "qecc_bold": false, "best_eaqecc": "[[68,19,15;13]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["16x[[4,2,2;0]]", "1x[[5,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[69,8,16;2]]", "claimed_form": "full", "best_qecc": "[[69,6,14]]", "qecc_bold": false, "best_eaqecc": "[[69,19,15;14]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["15x[[4,2,2;0]]", "2x[[5,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[70,8,16;2]]", "claimed_form": "full", "best_qecc": "[[70,6,14]]", "qecc_bold": false, "best_eaqecc": "[[70,20,15;14]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["14x[[4,2,2;0]]", "3x[[5,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[71,8,16;2]]", "claimed_form": "full", "best_qecc": "[[71,6,14]]", "qecc_bold": false, "best_eaqecc": "[[71,32,16;27]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["13x[[4,2,2;0]]", "4x[[5,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[72,8,16;2]]", "claimed_form": "full", "best_qecc": "[[72,6,14]]", "qecc_bold": false, "best_eaqecc": "[[72,32,16;26]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["12x[[4,2,2;0]]", "5x[[5,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[73,8,16;2]]", "claimed_form": "full", "best_qecc": "[[73,6,14]]", "qecc_bold": false, "best_eaqecc": "[[73,25,16;20]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["11x[[4,2,2;0]]", "6x[[5,2,2;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[74,8,16;2]]", "claimed_form": "full", "best_qecc": "[[74,6,15]]", "qecc_bold": false, "best_eaqecc": "[[74,32,16;27]]", "eaqecc_bold": false, "notes": ""},
    {"table": "S4", "inner": ["17x[[10,2,4;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[170,8,32;2]]", "claimed_form": "full", "best_qecc": "[[170,6,32]]", "qecc_bold": true, "best_eaqecc": null, "eaqecc_bold": false, "notes": "provenance: unverified-bound; no EAQECC entry"},
    {"table": "S4", "inner": ["16x[[10,2,4;0]]", "1x[[11,2,4;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[171,8,32;2]]", "claimed_form": "full", "best_qecc": "[[171,6,32]]", "qecc_bold": true, "best_eaqecc": null, "eaqecc_bold": false, "notes": "provenance: unverified-bound; no EAQECC entry"},
    {"table": "S4", "inner": ["15x[[10,2,4;0]]", "2x[[11,2,4;0]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[172,8,32;2]]", "claimed_form": "full", "best_qecc": "[[172,6,32]]", "qecc_bold": true, "best_eaqecc": null, "eaqecc_bold": false, "notes": "provenance: unverified-bound; no EAQECC entry"},
    {"table": "S4", "inner": ["16x[[10,2,4;0]]", "1x[[8,2,4;2]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[168,8,32;4]]", "claimed_form": "full", "best_qecc": "[[168,4,32]]", "qecc_bold": true, "best_eaqecc": null, "eaqecc_bold": false, "notes": "provenance: unverified-bound; no EAQECC entry"},
    {"table": "S4", "inner": ["15x[[10,2,4;0]]", "2x[[8,2,4;2]]"], "outer": "[[17,4,8;1]]_4", "outer_form": "full", "claimed": "[[166,8,32;6]]", "claimed_form": "full", "best_qecc": "[[166,2,32]]", "qecc_bold": true, "best_eaqecc": null, "eaqecc_bold": false, "notes": "provenance: unverified-bound; no EAQECC entry"}
  ]
})json";

}  // namespace eacqc
