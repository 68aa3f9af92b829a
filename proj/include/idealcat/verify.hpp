
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

// Raised by verify_tc_regular when its precondition (a normal
// category) does not hold; the suite runner renders it as a skipped
// suite rather than a failure.
class SkippedNotNormal : public Error {
public:
    using Error::Error;
};

// Category laws: identities, pointwise composition, associativity,
// zero object, the subobject system (strict preorder, inclusions are
// mono, restrictions of inclusions are inclusions), and the canonical
// epi-inclusion factorization.
VerificationReport
verify_category_axioms(const Category& cat);

// Hom-sets are abelian groups and composition is bilinear.
VerificationReport
verify_preadditive(const Category& cat);

// Every inclusion splits, canonical factorizations exist and are
// unique, and every object is the vertex of a proper cone.
VerificationReport
verify_proper_category(const Category& cat);

// The four normal-category clauses; also notes whether the outcome
// matches von Neumann regularity of the ring (informative only).
VerificationReport
verify_normal_category(const Category& cat);

// The normal cones form a regular semigroup under cone multiplication.
// Throws SkippedNotNormal when verify_normal_category fails.
VerificationReport
verify_tc_regular(const Category& cat, const BuildCaps& caps = {});

// Epi / split-mono / iso against the one-sided ideal containments, for
// every morphism, with brute-force cancellation tests on one side.
VerificationReport
verify_green_characterization(const Category& cat);

// Cone calculus: enumeration invariants, the star composition law,
// semigroup laws of cone multiplication, the idempotent criterion,
// unique maximal images, and the star-reduction laws (with the
// universal epi-component claim and retraction independence reported
// as notes).
VerificationReport
verify_cone_calculus(const Category& cat, const BuildCaps& caps = {});

// Ring of proper cones: the lattice/unique-max prerequisites, the
// direct-sum law, abelian-group laws of cone addition, and both
// distributive laws.  Prerequisite failures fail here and the
// dependent checks are skipped.
VerificationReport
verify_cone_ring(const Category& cat, const BuildCaps& caps = {});

// The two cone suites bundled, calculus first.
std::vector<VerificationReport>
verify_cone_ring_theorems(const Category& cat, const BuildCaps& caps = {});

// Canonical suite order: category, preadditive, proper, normal, tc,
// green, cones, ring.
const std::vector<std::string>&
canonical_suite_names();

// Runs the named suites (or all of them for "all") in canonical
// order, deduplicated.  Unknown names throw InvalidSpec.  A
// SkippedNotNormal from the tc suite becomes a skipped report.  With
// early_exit, stops after the first failing suite.
std::vector<VerificationReport>
run_suites(const Category& cat, const std::vector<std::string>& names, const BuildCaps& caps = {},
           bool early_exit = false);

}  // namespace idealcat
