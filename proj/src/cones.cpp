
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

#include "idealcat/cones.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace idealcat {

bool
is_compatible_cone(const Category& cat, const Cone& cone) {
    const int m = cat.object_count();
    if (cone.vertex < 0 || cone.vertex >= m ||
        static_cast<int>(cone.components.size()) != m) {
        return false;
    }
    for (int a = 0; a < m; ++a) {
        if (cone.components[a].dom != a || cone.components[a].cod != cone.vertex) {
            return false;
        }
    }
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a == b || !cat.leq(a, b)) {
                continue;
            }
            if (!(cat.compose(cat.inclusion(a, b), cone.components[b]) == cone.components[a])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int>
m_set(const Category& cat, const Cone& cone) {
    std::vector<int> out;
    for (int a = 0; a < cat.object_count(); ++a) {
        if (cat.is_epi(cone.components[a])) {
            out.push_back(a);
        }
    }
    return out;
}

bool
is_proper(const Category& cat, const Cone& cone) {
    for (int a = 0; a < cat.object_count(); ++a) {
        if (cat.is_epi(cone.components[a])) {
            return true;
        }
    }
    return false;
}

bool
is_normal(const Category& cat, const Cone& cone) {
    for (int a = 0; a < cat.object_count(); ++a) {
        if (cat.is_iso(cone.components[a])) {
            return true;
        }
    }
    return false;
}

Cone
cone_from_top_morphism(const Category& cat, const Translation& t) {
    if (t.dom != cat.top()) {
        throw DomainMismatch("cone seed must start at the top object");
    }
    Cone cone;
    cone.vertex = t.cod;
    cone.components.reserve(cat.object_count());
    for (int a = 0; a < cat.object_count(); ++a) {
        cone.components.push_back(cat.compose(cat.inclusion(a, cat.top()), t));
    }
    return cone;
}

std::vector<Cone>
enumerate_cones(const Category& cat, const BuildCaps& caps) {
    std::vector<Cone> out;
    for (int d = 0; d < cat.object_count(); ++d) {
        for (const Translation& t : cat.hom(cat.top(), d)) {
            if (static_cast<int>(out.size()) >= caps.max_cones) {
                throw SizeExceeded("cone count exceeds cap " + std::to_string(caps.max_cones));
            }
            Cone cone = cone_from_top_morphism(cat, t);
            if (!is_compatible_cone(cat, cone)) {
                // Cannot happen for a category of translations; kept
                // as a hard safety check on the enumeration shortcut.
                throw Error("enumerated cone violates compatibility");
            }
            out.push_back(std::move(cone));
        }
    }
    return out;
}

std::vector<Cone>
enumerate_proper_cones(const Category& cat, const BuildCaps& caps) {
    std::vector<Cone> out;
    for (Cone& cone : enumerate_cones(cat, caps)) {
        if (is_proper(cat, cone)) {
            out.push_back(std::move(cone));
        }
    }
    return out;
}

std::vector<Cone>
enumerate_cones_full_search(const Category& cat, const BuildCaps& caps) {
    const int m = cat.object_count();
    std::vector<Cone> out;
    for (int d = 0; d < m; ++d) {
        double combinations = 1.0;
        for (int a = 0; a < m; ++a) {
            combinations *= static_cast<double>(cat.hom(a, d).size());
        }
        if (combinations > 1e7) {
            throw SizeExceeded("assignment search space too large");
        }
        if (combinations == 0.0) {
            continue;  // some hom-set empty (never for translations, but be total)
        }
        std::vector<size_t> choice(m, 0);
        while (true) {
            Cone cone;
            cone.vertex = d;
            cone.components.reserve(m);
            for (int a = 0; a < m; ++a) {
                cone.components.push_back(cat.hom(a, d)[choice[a]]);
            }
            if (is_compatible_cone(cat, cone)) {
                if (static_cast<int>(out.size()) >= caps.max_cones) {
                    throw SizeExceeded("cone count exceeds cap " +
                                       std::to_string(caps.max_cones));
                }
                out.push_back(std::move(cone));
            }
            int a = m - 1;
            while (a >= 0 && ++choice[a] == cat.hom(a, d).size()) {
                choice[a] = 0;
                --a;
            }
            if (a < 0) {
                break;
            }
        }
    }
    return out;
}

Cone
principal_cone(const Category& cat, int d) {
    const int g = cat.object(d).generator;
    Cone cone;
    cone.vertex = d;
    cone.components.reserve(cat.object_count());
    for (int a = 0; a < cat.object_count(); ++a) {
        // x -> x*g always lands in the ideal generated by g.
        cone.components.push_back(cat.make_morphism(a, g, d));
    }
    return cone;
}

Cone
star(const Category& cat, const Cone& cone, const Translation& f) {
    if (f.dom != cone.vertex) {
        throw DomainMismatch("star requires a morphism out of the cone's vertex");
    }
    const CanonicalFactorization cf = cat.canonical_factorization(f);
    Cone out;
    out.vertex = cf.image;
    out.components.reserve(cat.object_count());
    for (int a = 0; a < cat.object_count(); ++a) {
        out.components.push_back(cat.compose(cone.components[a], cf.epi));
    }
    return out;
}

Cone
multiply(const Category& cat, const Cone& lhs, const Cone& rhs) {
    return star(cat, lhs, rhs.components[lhs.vertex]);
}

int
max_image(const Category& cat, const Cone& cone) {
    std::vector<int> images;
    images.reserve(cat.object_count());
    for (const Translation& component : cone.components) {
        images.push_back(cat.image_object(component));
    }
    for (int candidate : images) {
        bool dominates = true;
        for (int other : images) {
            if (!cat.leq(other, candidate)) {
                dominates = false;
                break;
            }
        }
        if (dominates) {
            return candidate;
        }
    }
    throw NoUniqueMax("component images of the cone at " + cat.object_name(cone.vertex) +
                      " have no unique maximum");
}

Cone
star_reduce_with(const Category& cat, const Cone& cone, const Translation& retraction) {
    const int d0 = max_image(cat, cone);
    if (retraction.dom != cone.vertex || retraction.cod != d0 ||
        !(cat.compose(cat.inclusion(d0, cone.vertex), retraction) == cat.identity(d0))) {
        throw DomainMismatch("star_reduce needs a retraction of the vertex onto the max image");
    }
    Cone out;
    out.vertex = d0;
    out.components.reserve(cat.object_count());
    for (int a = 0; a < cat.object_count(); ++a) {
        out.components.push_back(cat.compose(cone.components[a], retraction));
    }
    return out;
}

Cone
star_reduce(const Category& cat, const Cone& cone) {
    const int d0 = max_image(cat, cone);
    const auto retraction = cat.canonical_retraction(cone.vertex, d0);
    if (!retraction) {
        throw NoRetraction("no retraction of " + cat.object_name(cone.vertex) + " onto " +
                           cat.object_name(d0));
    }
    return star_reduce_with(cat, cone, *retraction);
}

Cone
direct_sum(const Category& cat, const Cone& lhs, const Cone& rhs) {
    const int join = cat.lattice().join[lhs.vertex][rhs.vertex];
    if (join < 0) {
        throw NoJoin("vertices " + cat.object_name(lhs.vertex) + " and " +
                     cat.object_name(rhs.vertex) + " have no join");
    }
    const Translation jl = cat.inclusion(lhs.vertex, join);
    const Translation jr = cat.inclusion(rhs.vertex, join);
    Cone out;
    out.vertex = join;
    out.components.reserve(cat.object_count());
    for (int a = 0; a < cat.object_count(); ++a) {
        out.components.push_back(cat.add_morphisms(cat.compose(lhs.components[a], jl),
                                                   cat.compose(rhs.components[a], jr)));
    }
    return out;
}

Cone
add(const Category& cat, const Cone& lhs, const Cone& rhs) {
    if (!is_proper(cat, lhs) || !is_proper(cat, rhs)) {
        throw DomainMismatch("cone addition is defined on proper cones");
    }
    return star_reduce(cat, direct_sum(cat, lhs, rhs));
}

Cone
zero_cone(const Category& cat) {
    Cone cone;
    cone.vertex = cat.bottom();
    cone.components.reserve(cat.object_count());
    for (int a = 0; a < cat.object_count(); ++a) {
        cone.components.push_back(cat.zero_morphism(a, cat.bottom()));
    }
    return cone;
}

Cone
negate(const Category& cat, const Cone& cone) {
    Cone out;
    out.vertex = cone.vertex;
    out.components.reserve(cat.object_count());
    for (const Translation& component : cone.components) {
        out.components.push_back(cat.negate_morphism(component));
    }
    return out;
}

FiniteRing
ConeRing::to_finite_ring(const std::string& label) const {
    if (one < 0) {
        throw InvalidSpec("cone ring has no multiplicative identity");
    }
    if (!axioms.ok()) {
        throw InvalidSpec("cone ring failed its axiom sweep");
    }
    const int n = order();
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            add[i][j] = add_table[i][j];
            mul[i][j] = mul_table[i][j];
        }
    }
    return FiniteRing(label, add, mul, one);
}

ConeRing
build_cone_ring(const Category& cat, const BuildCaps& caps) {
    {
        const VerificationReport rr = cat.check_rr_conditions();
        if (!rr.ok()) {
            std::string detail;
            for (const auto& check : rr.checks) {
                if (check.status == CheckStatus::kFail) {
                    detail = check.id + " — " + check.title;
                    if (!check.witness.is_null()) {
                        detail += " ; witness " + check.witness.dump();
                    }
                    break;
                }
            }
            throw RRViolation("cone-ring prerequisites fail for this category: " + detail);
        }
    }

    ConeRing ring;
    ring.elements = enumerate_proper_cones(cat, caps);
    // Canonical element order: lexicographic by (vertex generator,
    // top-component graph).  Keeps the table layout reproducible and
    // puts the zero cone (vertex generated by 0, all-zero graph) first.
    std::sort(ring.elements.begin(), ring.elements.end(), [&](const Cone& a, const Cone& b) {
        const int ga = cat.object(a.vertex).generator;
        const int gb = cat.object(b.vertex).generator;
        if (ga != gb) {
            return ga < gb;
        }
        return a.components[cat.top()].graph < b.components[cat.top()].graph;
    });
    const int n = ring.order();

    // Proper cones are keyed by (vertex, generator image of the top
    // component): the top component is onto the vertex and determines
    // the whole cone.
    std::map<std::pair<int, int>, int> index_of;
    for (int i = 0; i < n; ++i) {
        index_of[{ring.elements[i].vertex, ring.elements[i].components[cat.top()].gen_image}] = i;
    }
    auto find = [&](const Cone& cone) {
        const auto it =
            index_of.find({cone.vertex, cone.components[cat.top()].gen_image});
        if (it == index_of.end() || !(ring.elements[it->second] == cone)) {
            return -1;
        }
        return it->second;
    };

    ring.zero = find(zero_cone(cat));
    assert(ring.zero == 0);

    ring.add_table.assign(n, std::vector<int>(n, -1));
    ring.mul_table.assign(n, std::vector<int>(n, -1));
    ring.neg_table.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        ring.neg_table[i] = find(negate(cat, ring.elements[i]));
        if (ring.neg_table[i] < 0) {
            ring.axioms.add_inverses = false;
        }
        for (int j = 0; j < n; ++j) {
            ring.add_table[i][j] = find(add(cat, ring.elements[i], ring.elements[j]));
            ring.mul_table[i][j] = find(multiply(cat, ring.elements[i], ring.elements[j]));
            if (ring.add_table[i][j] < 0) {
                ring.axioms.add_closed = false;
            }
            if (ring.mul_table[i][j] < 0) {
                ring.axioms.mul_closed = false;
            }
        }
    }

    // Axiom sweep over the finished tables.  Laws touching a failed
    // closure cell are already accounted for by the closure flags.
    auto defined = [&](int v) { return v >= 0; };
    for (int i = 0; i < n; ++i) {
        if (ring.zero >= 0 && defined(ring.add_table[ring.zero][i]) &&
            (ring.add_table[ring.zero][i] != i || ring.add_table[i][ring.zero] != i)) {
            ring.axioms.zero_identity = false;
        }
        if (ring.neg_table[i] >= 0 && ring.add_table[i][ring.neg_table[i]] != ring.zero) {
            ring.axioms.add_inverses = false;
        }
        for (int j = 0; j < n; ++j) {
            if (defined(ring.add_table[i][j]) && defined(ring.add_table[j][i]) &&
                ring.add_table[i][j] != ring.add_table[j][i]) {
                ring.axioms.add_commutative = false;
            }
            for (int k = 0; k < n; ++k) {
                const int ab = ring.add_table[i][j];
                const int bc = ring.add_table[j][k];
                if (defined(ab) && defined(bc) && defined(ring.add_table[ab][k]) &&
                    defined(ring.add_table[i][bc]) &&
                    ring.add_table[ab][k] != ring.add_table[i][bc]) {
                    ring.axioms.add_associative = false;
                }
                const int mab = ring.mul_table[i][j];
                const int mbc = ring.mul_table[j][k];
                if (defined(mab) && defined(mbc) && defined(ring.mul_table[mab][k]) &&
                    defined(ring.mul_table[i][mbc]) &&
                    ring.mul_table[mab][k] != ring.mul_table[i][mbc]) {
                    ring.axioms.mul_associative = false;
                }
                if (defined(bc) && defined(mab) && defined(ring.mul_table[i][k]) &&
                    defined(ring.mul_table[i][bc]) && defined(ring.mul_table[i][j])) {
                    const int lhs = ring.mul_table[i][bc];
                    const int rhs = ring.add_table[ring.mul_table[i][j]][ring.mul_table[i][k]];
                    if (rhs < 0 || lhs != rhs) {
                        ring.axioms.left_distributive = false;
                    }
                }
                if (defined(ring.add_table[i][j]) && defined(ring.mul_table[i][k]) &&
                    defined(ring.mul_table[j][k]) && defined(ring.mul_table[ab][k])) {
                    const int lhs = ring.mul_table[ab][k];
                    const int rhs = ring.add_table[ring.mul_table[i][k]][ring.mul_table[j][k]];
                    if (rhs < 0 || lhs != rhs) {
                        ring.axioms.right_distributive = false;
                    }
                }
            }
        }
    }

    for (int candidate = 0; candidate < n; ++candidate) {
        bool is_identity = true;
        for (int i = 0; i < n && is_identity; ++i) {
            if (ring.mul_table[candidate][i] != i || ring.mul_table[i][candidate] != i) {
                is_identity = false;
            }
        }
        if (is_identity) {
            ring.one = candidate;
            break;
        }
    }
    return ring;
}

}  // namespace idealcat
