
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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealcat/errors.hpp"
#include "idealcat/ring.hpp"

namespace idealcat {

// Exhaustive-construction limits, overridable from the CLI.
struct BuildCaps {
    int max_objects = 64;
    int max_morphisms = 20000;
    int max_cones = 4096;
};

enum class Side { kLeft, kRight };

// A principal one-sided ideal.  The canonical generator is the
// smallest element generating the set; objects are deduplicated by
// element set, so distinct objects are distinct subsets.
struct IdealObject {
    int generator = -1;
    std::vector<int> elements;  // sorted ascending
};

// A translation morphism x -> x*s between principal ideals, stored as
// its full graph over the domain's sorted elements.  Two translations
// are the same morphism iff they have the same domain, codomain and
// graph — equivalently, the same image of the domain generator.
// `witness` is the smallest s realizing the graph.
struct Translation {
    int dom = -1;
    int cod = -1;
    int witness = -1;
    int gen_image = -1;
    std::vector<int> graph;  // graph[k] = image of dom.elements[k]

    friend bool
    operator==(const Translation& a, const Translation& b) {
        return a.dom == b.dom && a.cod == b.cod && a.graph == b.graph;
    }
};

// f = (epi onto image) then (inclusion into codomain).
struct CanonicalFactorization {
    Translation epi;
    Translation incl;
    int image = -1;  // object index of the image ideal
};

// f = (retraction) then (iso) then (inclusion); exists for every
// morphism exactly when the category is normal rather than merely
// proper.
struct NormalFactorization {
    Translation retraction;
    Translation iso;
    Translation incl;
};

// Join/meet structure of the subobject poset plus the relative
// complement survey used by the cone-ring gate.
struct LatticeReport {
    bool is_lattice = false;
    bool relatively_complemented = false;
    bool is_chain = false;
    std::vector<std::vector<int>> join;  // object index, -1 if undefined
    std::vector<std::vector<int>> meet;
    std::optional<std::pair<int, int>> no_join_witness;
    std::optional<std::pair<int, int>> no_meet_witness;
    // Interval [lo, hi] and member mid with no complement in it.
    std::optional<std::array<int, 3>> complement_witness;
};

// The category of principal one-sided ideals of a finite ring, built
// exhaustively: every object, every hom-set, plus containment, lattice
// structure and cached morphism classifications.  The right-sided
// category is the left-sided category of the opposite ring, relabeled.
//
// Composition is written diagrammatically throughout: compose(f, g)
// means "f then g" and requires cod(f) == dom(g).
class Category {
public:
    static Category
    build_left(const FiniteRing& ring, const BuildCaps& caps = {});

    static Category
    build_right(const FiniteRing& ring, const BuildCaps& caps = {});

    // Ring the translations act in (the opposite ring when side() is
    // kRight — callers doing arithmetic on witnesses must use this).
    const FiniteRing&
    ring() const {
        return ring_;
    }

    Side
    side() const {
        return side_;
    }

    // Label of the ring the category was requested for.
    const std::string&
    ring_label() const {
        return ring_label_;
    }

    int
    object_count() const {
        return static_cast<int>(objects_.size());
    }

    const IdealObject&
    object(int i) const {
        return objects_[i];
    }

    const std::vector<IdealObject>&
    objects() const {
        return objects_;
    }

    // Display name, side-aware: "R*2" or "2*R".
    std::string
    object_name(int i) const;

    int
    top() const {
        return top_;
    }

    int
    bottom() const {
        return bottom_;
    }

    // Subset containment of object element sets.
    bool
    leq(int sub, int sup) const {
        return leq_[sub][sup] != 0;
    }

    int
    morphism_count() const {
        return morphism_count_;
    }

    const std::vector<Translation>&
    hom(int dom, int cod) const {
        return hom_[dom][cod];
    }

    // Index of the object with exactly these (sorted) elements, -1 if
    // absent.
    int
    object_with_elements(const std::vector<int>& elements) const;

    // Position of a ring element inside an object's element list, -1
    // if not a member.
    int
    position_in(int obj, int element) const {
        return pos_[obj][element];
    }

    Translation
    identity(int obj) const;

    Translation
    zero_morphism(int dom, int cod) const;

    // The translation x -> x*s from dom into cod; throws NotAMorphism
    // if the image leaves cod.  The stored witness is canonicalized to
    // the smallest s with the same graph.
    Translation
    make_morphism(int dom, int s, int cod) const;

    // Diagrammatic composition "f then g"; throws NotComposable.
    Translation
    compose(const Translation& f, const Translation& g) const;

    // Pointwise hom-set addition; throws ShapeMismatch unless f and g
    // share domain and codomain.
    Translation
    add_morphisms(const Translation& f, const Translation& g) const;

    Translation
    negate_morphism(const Translation& f) const;

    bool
    is_inclusion(const Translation& f) const;

    // The distinguished monomorphism witnessing sub <= sup; throws
    // NotASubobject.
    Translation
    inclusion(int sub, int sup) const;

    // All e: sup -> sub with inclusion(sub, sup) then e == identity,
    // in ascending witness order.
    std::vector<Translation>
    find_retractions(int sup, int sub) const;

    // First retraction in canonical order, if any.
    std::optional<Translation>
    canonical_retraction(int sup, int sub) const;

    // Epimorphism test.  Surjectivity and right-cancellation are both
    // evaluated (cached); a disagreement would falsify the
    // characterization this library depends on and throws
    // CriterionMismatch.
    bool
    is_epi(const Translation& f) const;

    bool
    is_epi_by_surjectivity(const Translation& f) const;

    bool
    is_epi_by_cancellation(const Translation& f) const;

    bool
    is_mono(const Translation& f) const;

    bool
    is_split_mono(const Translation& f) const;

    bool
    is_iso(const Translation& f) const;

    // Object index of the ideal generated by the image of f.
    int
    image_object(const Translation& f) const;

    // f = epi onto image, then inclusion.  Total, unique, and cheap:
    // the epi part reuses f's graph.
    CanonicalFactorization
    canonical_factorization(const Translation& f) const;

    // f = retraction then iso then inclusion, when one exists.
    std::optional<NormalFactorization>
    try_normal_factorization(const Translation& f) const;

    // Throwing variant: NoNormalFactorization when absent.
    NormalFactorization
    normal_factorization(const Translation& f) const;

    const LatticeReport&
    lattice() const {
        return lattice_;
    }

    // Gate for cone-ring construction: subobject poset is a relatively
    // complemented lattice, and every vertex-top cone has a unique
    // maximal component image.  The chain reading of the second
    // condition is reported as a note.
    VerificationReport
    check_rr_conditions() const;

private:
    Category() = default;

    static Category
    build(FiniteRing ring, std::string ring_label, Side side, const BuildCaps& caps);

    void
    build_objects(const BuildCaps& caps);

    void
    build_homsets(const BuildCaps& caps);

    void
    build_lattice();

    void
    classify_morphisms();

    // Hom-set entry lookup by (dom, cod, gen_image); asserts presence.
    const Translation&
    homset_entry(int dom, int cod, int gen_image) const;

    int
    flat_index(const Translation& f) const;

    FiniteRing ring_{"", {{0}}, {{0}}, 0};
    std::string ring_label_;
    Side side_ = Side::kLeft;
    std::vector<IdealObject> objects_;
    std::vector<std::vector<std::vector<Translation>>> hom_;
    // hom_pos_[dom][cod][gen_image] = index into hom_[dom][cod], -1 if
    // no such morphism.
    std::vector<std::vector<std::vector<int>>> hom_pos_;
    // flat_base_[dom][cod] = offset of hom_[dom][cod] in the flat
    // morphism numbering used by the classification caches.
    std::vector<std::vector<int>> flat_base_;
    std::vector<std::vector<int>> pos_;
    // obj_of_elem_[x] = object index of the principal ideal of x.
    std::vector<int> obj_of_elem_;
    std::vector<std::vector<char>> leq_;
    std::vector<char> epi_surj_, epi_cancel_, mono_, split_mono_, iso_;
    LatticeReport lattice_;
    int top_ = -1;
    int bottom_ = -1;
    int morphism_count_ = 0;
};

}  // namespace idealcat
