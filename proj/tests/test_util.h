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

#ifndef HBAC_TESTS_TEST_UTIL_H
#define HBAC_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hbac::testing {

inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random probability vector; roughly one entry in `zero_every` is exactly zero.
inline std::vector<double> random_simplex(std::mt19937_64 &rng, size_t size, size_t zero_every = 0) {
    std::vector<double> v(size);
    double total = 0;
    for (auto &x : v) {
        if (zero_every && rng() % zero_every == 0) {
            x = 0;
        } else {
            x = -std::log(1 - uniform01(rng));
        }
        total += x;
    }
    if (total == 0) {
        v[0] = total = 1;
    }
    for (auto &x : v) {
        x /= total;
    }
    return v;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace hbac::testing

#endif
