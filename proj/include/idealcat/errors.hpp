
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

#include <stdexcept>
#include <string>

namespace idealcat {

// Base class for every error the toolkit raises deliberately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ring spec string does not match the grammar.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally broken input (bad table shape, out-of-range entry,
// missing additive inverse, modulus < 1, non-prime matrix field, ...).
class InvalidSpec : public Error {
public:
    using Error::Error;
};

// A hard size cap would be exceeded (ring order, object count,
// morphism count, cone count).
class SizeExceeded : public Error {
public:
    using Error::Error;
};

// Requested translation does not land in the requested codomain.
class NotAMorphism : public Error {
public:
    using Error::Error;
};

// Composition attempted between morphisms whose middle objects differ.
class NotComposable : public Error {
public:
    using Error::Error;
};

// Morphism addition attempted across different hom-sets.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// Inclusion requested between objects without containment.
class NotASubobject : public Error {
public:
    using Error::Error;
};

// The surjectivity-based and cancellation-based epimorphism tests
// disagreed.  This would falsify the epi characterization the library
// relies on, so it is surfaced loudly instead of picking a side.
class CriterionMismatch : public Error {
public:
    using Error::Error;
};

// A morphism of a merely proper category admits no
// retraction-iso-inclusion factorization.
class NoNormalFactorization : public Error {
public:
    using Error::Error;
};

// A cone's family of component images has no unique maximum.
class NoUniqueMax : public Error {
public:
    using Error::Error;
};

// No retraction exists onto the maximal image, so the cone cannot be
// star-reduced.
class NoRetraction : public Error {
public:
    using Error::Error;
};

// The subobject poset has no least upper bound for the requested pair.
class NoJoin : public Error {
public:
    using Error::Error;
};

// A cone operation was applied to operands it is not defined for
// (wrong vertex, wrong base category, non-proper argument).
class DomainMismatch : public Error {
public:
    using Error::Error;
};

// The category fails the lattice/unique-max conditions required before
// the cone ring may be constructed.
class RRViolation : public Error {
public:
    using Error::Error;
};

}  // namespace idealcat
