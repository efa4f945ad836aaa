// Copyright 2026 The hbac-ico Authors
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

#ifndef HBAC_VALIDATION_H
#define HBAC_VALIDATION_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hbac/oracle.h"

namespace hbac {

struct ValidationCheck {
    std::string name;
    bool passed;
    /// Worst observed error.
    double value;
    double threshold;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    oracle::ComparisonReport oracle;
    bool passed() const;
};

struct ValidationOptions {
    /// Largest register exponent for the dense comparisons.
    size_t nmax = 3;
    size_t trials = 100;
    uint64_t seed = 2021;
    /// Nonzero values corrupt the fast path inside the oracle comparison.
    double inject_fault = 0;
};

/// Oracle equivalence plus the invariant battery (stochasticity, branch algebra, fixed point,
/// Pauli identities, dense reset, control-qubit route).
ValidationReport run_validation(const ValidationOptions &options);

}  // namespace hbac

#endif
