
// Copyright 2026-present the idealcat project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "idealcat/category.hpp"
#include "idealcat/cones.hpp"
#include "idealcat/report.hpp"

namespace idealcat {

// Every JSON document below is byte-deterministic for a fixed input:
// ordered keys, canonical enumeration order, no timestamps or wall
// times.  Documents carry `schema: 1` so fixtures survive format
// evolution.

const char*
side_name(Side side);

// Ring dump: label, order, distinguished elements, and the operation
// tables as row-major integer matrices.
Json
ring_to_json(const FiniteRing& ring);

// The same dump as aligned human-readable text.
std::string
ring_to_text(const FiniteRing& ring);

// Category dump: objects (generator and element set), hom-set size
// matrix, the factorization table (image and epi witness per
// morphism), and the subobject lattice report.
Json
category_to_json(const Category& cat);

// Graphviz digraph: one boxed node per object labeled with its element
// set, one edge per non-identity morphism labeled with its witness.
// With collapse_edges, parallel morphisms become a single edge labeled
// with their count.
std::string
category_to_dot(const Category& cat, bool collapse_edges = false);

// Cone-ring dump: element list (vertex plus per-object component
// witnesses), add/mul tables as index matrices, negation, and the
// axiom sweep.
Json
cone_ring_to_json(const Category& cat, const ConeRing& ring);

// One suite as JSON (wall time deliberately omitted).
Json
report_to_json(const VerificationReport& report);

// A full verification run: context plus every suite, with a top-level
// ok flag.
Json
reports_to_json(const std::string& ring_label, Side side,
                const std::vector<VerificationReport>& reports);

// Human rendering of one suite, wall time included.
std::string
render_report_text(const VerificationReport& report);

// Serialization used for every exported document: two-space indent and
// a trailing newline.
std::string
dump_json(const Json& doc);

}  // namespace idealcat
