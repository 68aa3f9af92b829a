
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

#include "idealcat/report.hpp"

namespace idealcat::testutil {

inline const CheckResult*
find_check(const VerificationReport& report, const std::string& id) {
    for (const CheckResult& check : report.checks) {
        if (check.id == id) {
            return &check;
        }
    }
    return nullptr;
}

// The fixed test corpus with its frozen structural counts.  The counts
// were derived independently of the library: hom-set sizes follow
// |hom(Ra,Rb)| = |aR ∩ Rb| (for the commutative rings this is the
// intersection ideal), cone counts are the sums of hom-set sizes out
// of the top object, and the proper-cone count equals the ring order
// because a cone is proper exactly when its top component is onto the
// vertex, which pairs the proper cones bijectively with ring elements.
struct CorpusEntry {
    const char* spec;
    int objects;
    int morphisms;
    int cones;
    int proper_cones;
    int normal_cones;
    int idempotent_proper_cones;
};

inline constexpr CorpusEntry kCorpus[] = {
    {"zmod:2", 2, 5, 3, 2, 2, 2},
    {"zmod:4", 3, 15, 7, 4, 3, 2},
    {"zmod:6", 4, 30, 12, 6, 6, 4},
    {"zmod:12", 6, 90, 28, 12, 9, 4},
    {"prod:zmod:2,zmod:2", 4, 25, 9, 4, 4, 4},
    {"mat:2:zmod:2", 5, 67, 29, 16, 16, 8},
};

}  // namespace idealcat::testutil
