
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

namespace idealcat {

// A cone: one morphism into the vertex from every object, compatible
// with inclusions (restricting the component at b to a subobject a
// gives the component at a).  Components are stored for every object
// even though the component at the top object determines the rest;
// the redundancy lets compatibility be asserted directly.
struct Cone {
    int vertex = -1;
    std::vector<Translation> components;  // indexed by object

    friend bool
    operator==(const Cone& a, const Cone& b) {
        return a.vertex == b.vertex && a.components == b.components;
    }
};

// Validates the cone definition: every component lands in the vertex
// and j(a,b) then γ(b) equals γ(a) for every comparable pair.
bool
is_compatible_cone(const Category& cat, const Cone& cone);

// Objects whose component is an epimorphism.  Nonempty iff the cone is
// proper.
std::vector<int>
m_set(const Category& cat, const Cone& cone);

bool
is_proper(const Category& cat, const Cone& cone);

// Some component is an isomorphism.
bool
is_normal(const Category& cat, const Cone& cone);

// The unique cone whose component at the top object is t: top -> d
// (compatibility forces every other component).
Cone
cone_from_top_morphism(const Category& cat, const Translation& t);

// All cones, deduplicated, ordered by (vertex, top-component) in
// hom-set order.  Completeness relies on the ring being unital: the
// top object exists and the top component determines the cone.
// Compatibility is re-asserted for every candidate as a safety check.
std::vector<Cone>
enumerate_cones(const Category& cat, const BuildCaps& caps = {});

std::vector<Cone>
enumerate_proper_cones(const Category& cat, const BuildCaps& caps = {});

// Independent oracle for the enumerators: try every assignment of one
// hom-set member per object and keep the compatible ones.  Exponential
// in object count; intended for small cross-checks only.
std::vector<Cone>
enumerate_cones_full_search(const Category& cat, const BuildCaps& caps = {});

// The cone of right-translations by the canonical generator of d.
Cone
principal_cone(const Category& cat, int d);

// γ⋆f° for f out of the cone's vertex: post-compose every component
// with the epi part of f.  Vertex becomes image(f).  Proper cones stay
// proper (their M-set only grows).
Cone
star(const Category& cat, const Cone& cone, const Translation& f);

// γ·η = γ⋆(η at γ's vertex)°.
Cone
multiply(const Category& cat, const Cone& lhs, const Cone& rhs);

// The unique maximum of {image(γ(a)) : a object}; NoUniqueMax is a
// falsification of the cone-ring prerequisites for this category.
int
max_image(const Category& cat, const Cone& cone);

// γ*: post-compose every component with the canonical (smallest-
// witness) retraction of the vertex onto max_image.  Fixes proper
// cones, and makes any cone proper.
Cone
star_reduce(const Category& cat, const Cone& cone);

// Same, with an explicit retraction (used by the sweep that checks
// independence of the retraction choice).
Cone
star_reduce_with(const Category& cat, const Cone& cone, const Translation& retraction);

// γ⊕δ: vertex-join cone with components γ(a)j + δ(a)j'.  With equal
// vertices this is the pointwise hom-set sum.
Cone
direct_sum(const Category& cat, const Cone& lhs, const Cone& rhs);

// γ+δ = (γ⊕δ)*; defined on proper cones.
Cone
add(const Category& cat, const Cone& lhs, const Cone& rhs);

// The constant-zero cone with vertex {0}: the additive identity.
Cone
zero_cone(const Category& cat);

// Pointwise hom-set negation; preserves vertex and the M-set.
Cone
negate(const Category& cat, const Cone& cone);

// Outcome of the axiom sweep run while the cone-ring tables are
// assembled.  A missing multiplicative identity is reported, not
// required.
struct ConeRingAxioms {
    bool add_closed = true;
    bool mul_closed = true;
    bool add_associative = true;
    bool add_commutative = true;
    bool zero_identity = true;
    bool add_inverses = true;
    bool mul_associative = true;
    bool left_distributive = true;
    bool right_distributive = true;

    bool
    ok() const {
        return add_closed && mul_closed && add_associative && add_commutative && zero_identity &&
               add_inverses && mul_associative && left_distributive && right_distributive;
    }
};

// The ring of proper cones, as tables over the deduplicated proper-
// cone list sorted by (vertex generator, top-component graph).
// Element 0 is always the zero cone.
struct ConeRing {
    std::vector<Cone> elements;
    std::vector<std::vector<int>> add_table;
    std::vector<std::vector<int>> mul_table;
    std::vector<int> neg_table;
    int zero = -1;
    int one = -1;  // -1 when no multiplicative identity exists
    ConeRingAxioms axioms;

    int
    order() const {
        return static_cast<int>(elements.size());
    }

    // Repackages the tables as a FiniteRing so the construction can be
    // iterated; requires the multiplicative identity and a clean axiom
    // sweep.
    FiniteRing
    to_finite_ring(const std::string& label) const;
};

// Assembles the ring of proper cones.  Refuses with RRViolation unless
// check_rr_conditions passes.
ConeRing
build_cone_ring(const Category& cat, const BuildCaps& caps = {});

}  // namespace idealcat
