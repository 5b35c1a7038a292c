// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPERM_VERIFY_H
#define QPERM_VERIFY_H

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qperm {

enum class Suite { Algebra, Faithfulness, Laws, Identities, All };

/// Accepts algebra, faithfulness, laws, identities, all.
Suite parse_suite(std::string_view name);
std::string suite_name(Suite suite);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    /// Largest tensor order for the algebra and faithfulness checks.
    size_t max_k = 3;
    unsigned threads = 1;
    /// Progress lines, one per finished check; may be null.
    std::ostream *progress = nullptr;
};

/// Runs the exact checks of one suite (or all of them). A check that
/// throws is reported as failed with the exception message.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions &options);

}  // namespace qperm

#endif
