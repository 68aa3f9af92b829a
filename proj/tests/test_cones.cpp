
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

#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "idealcat/cones.hpp"
#include "idealcat/ring.hpp"
#include "test_util.hpp"

using namespace idealcat;

namespace {

// The cone of right-translations x -> x*s, seeded at the top object.
Cone
translation_cone(const Category& cat, int s) {
    const int vertex = cat.object_with_elements(principal_left_ideal(cat.ring(), s));
    REQUIRE(vertex >= 0);
    return cone_from_top_morphism(cat, cat.make_morphism(cat.top(), s, vertex));
}

bool
cone_ring_sorted(const Category& cat, const ConeRing& ring) {
    return std::is_sorted(ring.elements.begin(), ring.elements.end(),
                          [&](const Cone& a, const Cone& b) {
                              const int ga = cat.object(a.vertex).generator;
                              const int gb = cat.object(b.vertex).generator;
                              if (ga != gb) {
                                  return ga < gb;
                              }
                              return a.components[cat.top()].graph <
                                     b.components[cat.top()].graph;
                          });
}

// Index of a translation cone inside the cone-ring element list.
int
index_of(const ConeRing& ring, const Cone& cone) {
    const auto it = std::find(ring.elements.begin(), ring.elements.end(), cone);
    REQUIRE(it != ring.elements.end());
    return static_cast<int>(it - ring.elements.begin());
}

}  // namespace

TEST_CASE("frozen cone censuses") {
    for (const auto& entry : idealcat::testutil::kCorpus) {
        CAPTURE(entry.spec);
        const Category cat = Category::build_left(parse_ring_spec(entry.spec));
        const std::vector<Cone> cones = enumerate_cones(cat);
        CHECK(cones.size() == static_cast<size_t>(entry.cones));
        CHECK(cones.front() == zero_cone(cat));

        int proper = 0;
        int normal = 0;
        int idempotent = 0;
        for (const Cone& cone : cones) {
            CHECK(is_compatible_cone(cat, cone));
            if (is_proper(cat, cone)) {
                ++proper;
                idempotent += (multiply(cat, cone, cone) == cone) ? 1 : 0;
            }
            normal += is_normal(cat, cone) ? 1 : 0;
        }
        CHECK(proper == entry.proper_cones);
        CHECK(normal == entry.normal_cones);
        CHECK(idempotent == entry.idempotent_proper_cones);
        CHECK(enumerate_proper_cones(cat).size() == static_cast<size_t>(entry.proper_cones));
    }
}

TEST_CASE("assignment search agrees with top-component enumeration") {
    for (const char* spec : {"zmod:1", "zmod:4", "zmod:6", "prod:zmod:2,zmod:2"}) {
        CAPTURE(spec);
        const Category cat = Category::build_left(parse_ring_spec(spec));
        auto key = [&](const Cone& c) {
            return std::pair<int, int>{c.vertex, c.components[cat.top()].gen_image};
        };
        std::vector<Cone> fast = enumerate_cones(cat);
        std::vector<Cone> brute = enumerate_cones_full_search(cat);
        std::sort(fast.begin(), fast.end(),
                  [&](const Cone& a, const Cone& b) { return key(a) < key(b); });
        std::sort(brute.begin(), brute.end(),
                  [&](const Cone& a, const Cone& b) { return key(a) < key(b); });
        CHECK(fast == brute);
    }
}

TEST_CASE("principal cones are proper with the requested vertex") {
    for (const auto& entry : idealcat::testutil::kCorpus) {
        CAPTURE(entry.spec);
        const Category cat = Category::build_left(parse_ring_spec(entry.spec));
        for (int d = 0; d < cat.object_count(); ++d) {
            const Cone cone = principal_cone(cat, d);
            CHECK(cone.vertex == d);
            CHECK(is_compatible_cone(cat, cone));
            CHECK(is_proper(cat, cone));
            CHECK(cone == translation_cone(cat, cat.object(d).generator));
        }
    }
}

TEST_CASE("cone seeds must start at the top object") {
    const Category cat = Category::build_left(parse_ring_spec("zmod:6"));
    CHECK_THROWS_AS(cone_from_top_morphism(cat, cat.make_morphism(2, 1, 1)), DomainMismatch);
}

TEST_CASE("star, product and reduction arithmetic in L(Z6)") {
    const Category cat = Category::build_left(parse_ring_spec("zmod:6"));
    const Cone g2 = translation_cone(cat, 2);
    const Cone g3 = translation_cone(cat, 3);
    const Cone g5 = translation_cone(cat, 5);

    CHECK(g2.vertex == 2);
    CHECK(m_set(cat, g2) == std::vector<int>{1, 2});

    // Products mirror ring multiplication of the translating elements.
    CHECK(multiply(cat, g2, g5) == translation_cone(cat, 4));
    CHECK(multiply(cat, g2, g3) == zero_cone(cat));
    CHECK(multiply(cat, g3, g3) == g3);

    // Sums mirror ring addition.
    CHECK(add(cat, g2, g3) == g5);
    CHECK(direct_sum(cat, g2, g3) == g5);
    CHECK(negate(cat, g2) == translation_cone(cat, 4));
    CHECK(add(cat, g2, negate(cat, g2)) == zero_cone(cat));

    // Star with the identity is neutral; star against a morphism out of
    // a different object is rejected.
    CHECK(star(cat, g2, cat.identity(2)) == g2);
    CHECK_THROWS_AS(star(cat, g2, cat.make_morphism(1, 1, 1)), DomainMismatch);

    // Star of the identity cone against x -> 2x collapses onto the
    // translation cone of 2.
    const Cone identity_cone = cone_from_top_morphism(cat, cat.identity(cat.top()));
    CHECK(star(cat, identity_cone, cat.make_morphism(1, 2, 1)) == g2);

    // An improper cone: vertex Z6 but every component scaled by 2.  Its
    // maximal component image is {0,2,4}, and reduction lands on the
    // proper translation cone of 2.
    const Cone improper = cone_from_top_morphism(cat, cat.make_morphism(1, 2, 1));
    CHECK_FALSE(is_proper(cat, improper));
    CHECK(m_set(cat, improper).empty());
    CHECK(max_image(cat, improper) == 2);
    CHECK(star_reduce(cat, improper) == g2);
    CHECK(star_reduce(cat, g2) == g2);
    CHECK_THROWS_AS(star_reduce_with(cat, improper, cat.identity(1)), DomainMismatch);
    CHECK_THROWS_AS(add(cat, improper, g2), DomainMismatch);
}

TEST_CASE("reduction fails honestly where no retraction exists") {
    const Category cat = Category::build_left(parse_ring_spec("zmod:4"));
    const Cone improper = cone_from_top_morphism(cat, cat.make_morphism(1, 2, 1));
    CHECK(max_image(cat, improper) == 2);
    CHECK_THROWS_AS(star_reduce(cat, improper), NoRetraction);
}

TEST_CASE("cone enumeration cap") {
    const Category cat = Category::build_left(parse_ring_spec("zmod:6"));
    CHECK_THROWS_AS(enumerate_cones(cat, BuildCaps{.max_cones = 3}), SizeExceeded);
}

TEST_CASE("cone-ring construction is refused without its prerequisites") {
    for (const char* spec : {"zmod:4", "zmod:12"}) {
        CAPTURE(spec);
        const Category cat = Category::build_left(parse_ring_spec(spec));
        CHECK_THROWS_AS(build_cone_ring(cat), RRViolation);
    }
}

TEST_CASE("ring of proper cones over Z6") {
    const Category cat = Category::build_left(parse_ring_spec("zmod:6"));
    const ConeRing pl = build_cone_ring(cat);

    CHECK(pl.order() == 6);
    CHECK(pl.zero == 0);
    CHECK(pl.elements[0] == zero_cone(cat));
    CHECK(cone_ring_sorted(cat, pl));
    CHECK(pl.axioms.ok());
    CHECK(pl.axioms.add_closed);
    CHECK(pl.axioms.mul_closed);
    CHECK(pl.axioms.add_commutative);
    CHECK(pl.axioms.mul_associative);
    CHECK(pl.axioms.left_distributive);
    CHECK(pl.axioms.right_distributive);
    REQUIRE(pl.one >= 0);
    CHECK(pl.elements[pl.one] == cone_from_top_morphism(cat, cat.identity(cat.top())));

    const FiniteRing repacked = pl.to_finite_ring("cones-of-zmod:6");
    CHECK(repacked.label() == "cones-of-zmod:6");
    CHECK(repacked.order() == 6);
    CHECK(verify_ring_axioms(repacked).ok());
}

TEST_CASE("translation map is a ring isomorphism onto the cone ring") {
    // s -> (cone of right-translations by s) is a bijection that sends
    // both operation tables across; checked on every ring the
    // construction accepts, including the noncommutative one.
    for (const char* spec : {"zmod:2", "zmod:6", "prod:zmod:2,zmod:2", "mat:2:zmod:2"}) {
        CAPTURE(spec);
        const FiniteRing r = parse_ring_spec(spec);
        const Category cat = Category::build_left(r);
        const ConeRing pl = build_cone_ring(cat);
        REQUIRE(pl.order() == r.order());

        std::vector<int> phi(r.order());
        std::vector<char> hit(r.order(), 0);
        for (int s = 0; s < r.order(); ++s) {
            phi[s] = index_of(pl, translation_cone(cat, s));
            hit[phi[s]] = 1;
        }
        CHECK(std::count(hit.begin(), hit.end(), 1) == r.order());
        CHECK(phi[r.zero()] == pl.zero);
        REQUIRE(pl.one >= 0);
        CHECK(phi[r.one()] == pl.one);
        for (int a = 0; a < r.order(); ++a) {
            CHECK(pl.neg_table[phi[a]] == phi[r.neg(a)]);
            for (int b = 0; b < r.order(); ++b) {
                CHECK(pl.add_table[phi[a]][phi[b]] == phi[r.add(a, b)]);
                CHECK(pl.mul_table[phi[a]][phi[b]] == phi[r.mul(a, b)]);
            }
        }
    }
}

TEST_CASE("blind permutation search also finds the Z6 isomorphism") {
    // Second, structure-free oracle: some relabeling of the cone ring
    // of Z6 must reproduce the Z6 tables exactly.
    const FiniteRing z6 = parse_ring_spec("zmod:6");
    const Category cat = Category::build_left(z6);
    const ConeRing pl = build_cone_ring(cat);
    REQUIRE(pl.order() == 6);

    std::vector<int> sigma(6);
    std::iota(sigma.begin(), sigma.end(), 0);
    bool found = false;
    do {
        bool iso = sigma[pl.zero] == z6.zero() && sigma[pl.one] == z6.one();
        for (int a = 0; a < 6 && iso; ++a) {
            for (int b = 0; b < 6 && iso; ++b) {
                iso = sigma[pl.add_table[a][b]] == z6.add(sigma[a], sigma[b]) &&
                      sigma[pl.mul_table[a][b]] == z6.mul(sigma[a], sigma[b]);
            }
        }
        found = iso;
    } while (!found && std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(found);
}
