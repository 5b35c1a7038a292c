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

#ifndef QPERM_IDENTITIES_H
#define QPERM_IDENTITIES_H

#include <string>
#include <utility>

#include "qperm/rational.h"
#include "qperm/series.h"

namespace qperm {

/// Both sides of a binomial identity, evaluated exactly.
struct IdentitySides {
    Rational lhs;
    Rational rhs;
    bool holds() const {
        return lhs == rhs;
    }
};

/// sum_m binom(2p+q, 2p+2m) binom(p+m, p) = 2^(q-1) (2p+q)/(p+q) binom(p+q, q).
/// Requires p + q > 0.
IdentitySides binomial_sum_identity(unsigned p, unsigned q);

/// sum_r (2p+2r)! (2p+2q-2r)! / (r! (q-r)! (p+r)! (p+q-r)!)
///   = 4^q/q! * (2p)! (2p+q)! / (p! p!).
IdentitySides factorial_sum_identity(unsigned p, unsigned q);

/// In u = 1/xi: sum_q u^(p+q) (2p+q)/(p+q) binom(p+q, p) against
/// u^p (2-u)/(1-u)^(p+1), both to `order`. Requires p >= 1.
std::pair<FormalSeries, FormalSeries> generating_series_identity(unsigned p, unsigned order);

/// sum_p binom(2p, p) x^p against (1-4x)^(-1/2), both to `order`.
std::pair<FormalSeries, FormalSeries> central_binomial_identity(unsigned order);

struct IdentityReport {
    unsigned checked = 0;
    unsigned failed = 0;
    std::string first_failure;
    bool passed() const {
        return failed == 0;
    }
};

/// Checks the two integer identities for all p, q <= max_pq, and the two
/// series identities to `order` (the first for 1 <= p <= max_pq).
IdentityReport verify_standard_identities(unsigned max_pq = 20, unsigned order = 30);

}  // namespace qperm

#endif
