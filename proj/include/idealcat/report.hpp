
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
#include <utility>
#include <vector>

#include "json.hpp"

namespace idealcat {

// Ordered so exported documents are byte-stable across runs.
using Json = nlohmann::ordered_json;

// A check either asserts a claim (pass/fail), was not applicable
// (skip), or records an informative finding that must never fail a
// suite (note).
enum class CheckStatus { kPass, kFail, kSkip, kNote };

std::string
to_string(CheckStatus status);

// One verified claim.  `id` is a stable dotted identifier
// ("proper.inclusions_split"), `title` states the claim in words, and
// `witness` carries a canonical counterexample (or finding) payload:
// null for plain passes, smallest-index witnesses otherwise.
struct CheckResult {
    std::string id;
    std::string title;
    CheckStatus status = CheckStatus::kPass;
    Json witness;
};

// Outcome of one verification suite.  Wall time is informational only
// and is excluded from JSON form so exports stay byte-deterministic.
struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;

    CheckResult&
    add(std::string id, std::string title, bool passed, Json witness = nullptr) {
        checks.push_back({std::move(id),
                          std::move(title),
                          passed ? CheckStatus::kPass : CheckStatus::kFail,
                          std::move(witness)});
        return checks.back();
    }

    CheckResult&
    add_status(std::string id, std::string title, CheckStatus status, Json witness = nullptr) {
        checks.push_back({std::move(id), std::move(title), status, std::move(witness)});
        return checks.back();
    }

    int
    count(CheckStatus status) const {
        int n = 0;
        for (const auto& c : checks) {
            n += (c.status == status) ? 1 : 0;
        }
        return n;
    }

    int
    passed() const {
        return count(CheckStatus::kPass);
    }
    int
    failed() const {
        return count(CheckStatus::kFail);
    }
    int
    skipped() const {
        return count(CheckStatus::kSkip);
    }
    int
    notes() const {
        return count(CheckStatus::kNote);
    }

    // A suite is OK when nothing failed; notes and skips never count
    // against it.
    bool
    ok() const {
        return failed() == 0;
    }
};

}  // namespace idealcat
