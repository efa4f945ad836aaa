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

#ifndef HBAC_RNG_H
#define HBAC_RNG_H

#include <cstdint>

namespace hbac {

/// Counter-based generator: the n-th draw of stream s under seed k is a pure function of (k, s, n),
/// so trajectories can be sampled in any order or on any thread and still reproduce exactly.
/// Each output is a SplitMix64 finalizer applied to key + counter * golden-gamma.
class CounterRng {
   public:
    CounterRng(uint64_t seed, uint64_t stream);

    uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    uint64_t counter() const {
        return counter_;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace hbac

#endif
