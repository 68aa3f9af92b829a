
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

#include <array>
#include <set>
#include <vector>

#include "doctest.h"
#include "idealcat/ring.hpp"
#include "test_util.hpp"

using namespace idealcat;

TEST_CASE("zmod parsing and arithmetic") {
    const FiniteRing r = parse_ring_spec("zmod:6");
    CHECK(r.label() == "zmod:6");
    CHECK(r.order() == 6);
    CHECK(r.zero() == 0);
    CHECK(r.one() == 1);
    CHECK(r.add(4, 5) == 3);
    CHECK(r.mul(4, 5) == 2);
    CHECK(r.neg(2) == 4);
    CHECK(r.sub(1, 4) == 3);
    CHECK(verify_ring_axioms(r).ok());
}

TEST_CASE("trivial ring zmod:1") {
    const FiniteRing r = parse_ring_spec("zmod:1");
    CHECK(r.order() == 1);
    CHECK(r.one() == 0);
    CHECK(verify_ring_axioms(r).ok());
}

TEST_CASE("product ring works componentwise, first factor major") {
    const FiniteRing r = parse_ring_spec("prod:zmod:2,zmod:3");
    CHECK(r.order() == 6);
    // element (a, b) sits at index a*3 + b
    const int e10 = 3;
    const int e01 = 1;
    CHECK(r.one() == 4);  // (1, 1)
    CHECK(r.add(e10, e01) == 4);
    CHECK(r.mul(e10, e01) == 0);
    CHECK(verify_ring_axioms(r).ok());
}

TEST_CASE("prod:zmod:2,zmod:3 is isomorphic to zmod:6 (residue oracle)") {
    const FiniteRing p = parse_ring_spec("prod:zmod:2,zmod:3");
    const FiniteRing z = parse_ring_spec("zmod:6");
    // The classical residue map x -> (x mod 2, x mod 3) must be a ring
    // isomorphism onto the product's element indexing.
    std::array<int, 6> phi{};
    std::set<int> hit;
    for (int x = 0; x < 6; ++x) {
        phi[x] = (x % 2) * 3 + (x % 3);
        hit.insert(phi[x]);
    }
    CHECK(hit.size() == 6);
    CHECK(phi[z.one()] == p.one());
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            CHECK(phi[z.add(a, b)] == p.add(phi[a], phi[b]));
            CHECK(phi[z.mul(a, b)] == p.mul(phi[a], phi[b]));
        }
    }
}

TEST_CASE("2x2 matrices over zmod:2") {
    const FiniteRing r = parse_ring_spec("mat:2:zmod:2");
    CHECK(r.order() == 16);
    // Encoding: entry (0,0) is the most significant base-2 digit, so
    // the matrix [[a,b],[c,d]] sits at index 8a + 4b + 2c + d.
    auto idx = [](int a, int b, int c, int d) { return 8 * a + 4 * b + 2 * c + d; };
    CHECK(r.one() == idx(1, 0, 0, 1));  // 9
    CHECK(verify_ring_axioms(r).ok());
    // Hand-multiplied pair: E01 * E10 = E00 but E10 * E01 = E11.
    CHECK(r.mul(idx(0, 1, 0, 0), idx(0, 0, 1, 0)) == idx(1, 0, 0, 0));
    CHECK(r.mul(idx(0, 0, 1, 0), idx(0, 1, 0, 0)) == idx(0, 0, 0, 1));
    bool noncommutative = false;
    for (int a = 0; a < 16 && !noncommutative; ++a) {
        for (int b = 0; b < 16; ++b) {
            if (r.mul(a, b) != r.mul(b, a)) {
                noncommutative = true;
                break;
            }
        }
    }
    CHECK(noncommutative);
}

TEST_CASE("opposite ring transposes multiplication only") {
    const FiniteRing r = parse_ring_spec("mat:2:zmod:2");
    const FiniteRing op = opposite_ring(r);
    CHECK(op.label() == "op(mat:2:zmod:2)");
    CHECK(op.order() == r.order());
    CHECK(op.one() == r.one());
    for (int a = 0; a < r.order(); ++a) {
        for (int b = 0; b < r.order(); ++b) {
            CHECK(op.add(a, b) == r.add(a, b));
            CHECK(op.mul(a, b) == r.mul(b, a));
        }
    }
    const FiniteRing opop = opposite_ring(op);
    for (int a = 0; a < r.order(); ++a) {
        for (int b = 0; b < r.order(); ++b) {
            CHECK(opop.mul(a, b) == r.mul(a, b));
        }
    }
    CHECK(verify_ring_axioms(op).ok());
}

TEST_CASE("principal ideals and mutual generation in zmod:12") {
    const FiniteRing r = parse_ring_spec("zmod:12");
    CHECK(principal_left_ideal(r, 8) == std::vector<int>{0, 4, 8});
    CHECK(principal_right_ideal(r, 8) == std::vector<int>{0, 4, 8});
    CHECK(green_l(r, 8, 4));
    CHECK(green_r(r, 8, 4));
    CHECK_FALSE(green_l(r, 8, 2));
    CHECK(green_l(r, 5, 1));  // units generate everything
}

TEST_CASE("spec grammar and limits") {
    CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("zmod"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("zmod:"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("zmod:x"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("ring:3"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("zmod:6x"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("prod:zmod:2"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("zmod:0"), InvalidSpec);
    CHECK_THROWS_AS(parse_ring_spec("mat:2:zmod:4"), InvalidSpec);  // modulus must be prime
    CHECK_THROWS_AS(parse_ring_spec("mat:0:zmod:2"), InvalidSpec);
    CHECK_THROWS_AS(parse_ring_spec("zmod:257"), SizeExceeded);
    CHECK_THROWS_AS(parse_ring_spec("prod:zmod:20,zmod:20"), SizeExceeded);
    CHECK_THROWS_AS(parse_ring_spec("mat:3:zmod:3"), SizeExceeded);
    // Nested products parse.
    const FiniteRing r = parse_ring_spec("prod:zmod:2,prod:zmod:2,zmod:2");
    CHECK(r.order() == 8);
    CHECK(verify_ring_axioms(r).ok());
}

TEST_CASE("axiom sweep catches corrupted tables with a witness") {
    // zmod:3 with mul(2,2) corrupted from 1 to 2; construction-time
    // validation cannot see this, the exhaustive sweep must.
    const std::vector<std::vector<int>> add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::vector<int>> mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    const FiniteRing bad("corrupted", add, mul, 1);
    const VerificationReport report = verify_ring_axioms(bad);
    CHECK_FALSE(report.ok());
    bool found_failing_with_witness = false;
    for (const CheckResult& check : report.checks) {
        if (check.status == CheckStatus::kFail) {
            found_failing_with_witness = !check.witness.is_null();
            break;
        }
    }
    CHECK(found_failing_with_witness);
}

TEST_CASE("structural validation at construction") {
    // Additive zero not at index 0.
    CHECK_THROWS_AS(FiniteRing("bad", {{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}, 0), InvalidSpec);
    // Ragged table.
    CHECK_THROWS_AS(FiniteRing("bad", {{0, 1}, {1}}, {{0, 0}, {0, 1}}, 1), InvalidSpec);
    // Entry out of range.
    CHECK_THROWS_AS(FiniteRing("bad", {{0, 1}, {1, 7}}, {{0, 0}, {0, 1}}, 1), InvalidSpec);
    // One out of range.
    CHECK_THROWS_AS(FiniteRing("bad", {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 5), InvalidSpec);
    // Order over the hard cap, stated before any table validation.
    const int n = kMaxRingOrder + 1;
    std::vector<std::vector<int>> big_add(n, std::vector<int>(n, 0));
    std::vector<std::vector<int>> big_mul(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            big_add[i][j] = (i + j) % n;
            big_mul[i][j] = (i * j) % n;
        }
    }
    CHECK_THROWS_AS(FiniteRing("big", big_add, big_mul, 1), SizeExceeded);
}

TEST_CASE("corpus rings all satisfy the ring axioms") {
    for (const auto& entry : idealcat::testutil::kCorpus) {
        CAPTURE(entry.spec);
        const FiniteRing r = parse_ring_spec(entry.spec);
        const VerificationReport report = verify_ring_axioms(r);
        CHECK(report.ok());
        CHECK(report.failed() == 0);
    }
}
