
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

#include "idealcat/errors.hpp"
#include "idealcat/report.hpp"

namespace idealcat {

// Hard cap on ring order; everything downstream is table-driven and
// exhaustive, so big inputs are refused instead of silently crawling.
inline constexpr int kMaxRingOrder = 256;

// Finite unital ring given by dense operation tables.  Elements are the
// indices 0..order-1 and index 0 is the additive zero.  Construction
// validates structure (shapes, ranges, zero placement, additive
// inverses); the deeper axioms are checked by verify_ring_axioms so a
// deliberately corrupted table can still be built and then fail with a
// witness.
class FiniteRing {
public:
    FiniteRing(std::string label,
               const std::vector<std::vector<int>>& add_table,
               const std::vector<std::vector<int>>& mul_table,
               int one);

    const std::string&
    label() const {
        return label_;
    }

    int
    order() const {
        return order_;
    }

    int
    zero() const {
        return 0;
    }

    int
    one() const {
        return one_;
    }

    int
    add(int a, int b) const {
        return add_[a * order_ + b];
    }

    int
    mul(int a, int b) const {
        return mul_[a * order_ + b];
    }

    // Additive inverse.
    int
    neg(int a) const {
        return neg_[a];
    }

    int
    sub(int a, int b) const {
        return add(a, neg(b));
    }

private:
    std::string label_;
    int order_;
    int one_;
    std::vector<int> add_;  // row-major order x order
    std::vector<int> mul_;
    std::vector<int> neg_;
};

// Builds a ring from a spec string:
//
//   zmod:<n>            integers mod n          (n >= 1)
//   prod:<spec>,<spec>  direct product          (componentwise ops)
//   mat:<k>:zmod:<p>    k x k matrices over Z_p (p prime)
//
// Element orderings are fixed: ascending residues for zmod,
// first-factor-major lexicographic for prod, row-major base-p digits
// (entry (0,0) most significant) for mat.  Throws ParseError on
// grammar violations, InvalidSpec on bad parameters, SizeExceeded when
// the order would exceed kMaxRingOrder.
FiniteRing
parse_ring_spec(const std::string& text);

// Same elements, multiplication reversed.  Right-sided structure over
// R is computed as left-sided structure over the opposite ring.
FiniteRing
opposite_ring(const FiniteRing& ring);

// Sorted element set R*a (left) or a*R (right).
std::vector<int>
principal_left_ideal(const FiniteRing& ring, int a);

std::vector<int>
principal_right_ideal(const FiniteRing& ring, int a);

// Green's relations: mutual generation of one-sided ideals.
bool
green_l(const FiniteRing& ring, int a, int b);  // R*a == R*b

bool
green_r(const FiniteRing& ring, int a, int b);  // a*R == b*R

// Exhaustive check of the unital-ring axioms over the tables, with the
// first counterexample tuple as witness on failure.
VerificationReport
verify_ring_axioms(const FiniteRing& ring);

}  // namespace idealcat
