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

#ifndef HBAC_QUANTUM_SWITCH_H
#define HBAC_QUANTUM_SWITCH_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hbac/cooling.h"
#include "hbac/register.h"

namespace hbac {

/// A diagonal block of the superposed unitaries. kOne is a 1x1 identity in both U_A and U_B;
/// kPair is a 2x2 block holding sigma_y in U_A and sigma_z in U_B.
enum class Block : uint8_t {
    kOne,
    kPair,
};

enum class SpecFamily {
    kStandard,
    kIdeal,
    kKIco,
    kTreeSort,
    kCustom,
};

const char *family_name(SpecFamily family);

/// Block-diagonal layout shared by the two switched unitaries U_A and U_B.
class BlockUnitarySpec {
   public:
    /// Throws std::invalid_argument unless the block dimensions add up to 2^(n+1).
    BlockUnitarySpec(size_t n, std::vector<Block> blocks, SpecFamily family = SpecFamily::kCustom);

    /// Parses comma separated tokens: "1" for a scalar block and "YZ" for a (sigma_y, sigma_z) pair,
    /// e.g. "1,YZ,1" for n = 1. Any other Pauli pairing is rejected.
    static BlockUnitarySpec parse(size_t n, std::string_view text);

    size_t n() const {
        return n_;
    }
    size_t dimension() const {
        return size_t{1} << (n_ + 1);
    }
    SpecFamily family() const {
        return family_;
    }
    const std::vector<Block> &blocks() const {
        return blocks_;
    }
    /// Number of kPair blocks.
    size_t pair_count() const;
    std::string to_string() const;

    bool operator==(const BlockUnitarySpec &other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

   private:
    size_t n_;
    std::vector<Block> blocks_;
    SpecFamily family_;
};

/// [ONE, PAIR x (2^n - 1), ONE].
BlockUnitarySpec standard_pair(size_t n);
/// [ONE, ONE, PAIR x (2^n - 1)].
BlockUnitarySpec ideal_pair(size_t n);
/// [ONE x 2^k, PAIR x (2^n - 2^(k-1))]. Throws std::out_of_range unless 1 <= k <= n.
BlockUnitarySpec k_pair(size_t n, size_t k);
/// Tree-sort layout that heralds qubit `level` counted from the most significant one.
///
/// Level 0 is [ONE x 2^n, PAIR x 2^(n-1)]: pairs cover every label whose leading qubit is excited.
/// Level l repeats [ONE x 2^(n-l), PAIR x 2^(n-l-1)] 2^l times, so the pair region shifts into each
/// dyadic sub-block and covers labels whose (l+1)-th qubit is excited. Valid levels are 0..n-1.
BlockUnitarySpec tree_pair(size_t n, size_t level);

enum class Sign {
    kPlus,
    kMinus,
};

const char *sign_name(Sign sign);

/// Unnormalized post-measurement populations for one control outcome.
struct BranchOutcome {
    Sign sign;
    DiagonalState state;
    /// Equals state.norm().
    double probability;
};

struct BranchPair {
    BranchOutcome plus;
    BranchOutcome minus;
};

/// Applies the switch with the control prepared in |+> and measured in the +/- basis.
///
/// With sigma_y sigma_z = i sigma_x the interference terms cancel block by block: the PLUS branch
/// keeps populations under ONE blocks and drops those under PAIR blocks; the MINUS branch drops the
/// ONE populations and swaps the two populations inside each PAIR block.
BranchPair switch_branches(const DiagonalState &state, const BlockUnitarySpec &spec);

/// Branch map on reduced populations including the bath step: M p = reduce(branch(reset(p))).
/// For the standard pair the PLUS map is Diag(e^eps, 0, ..., 0, e^-eps)/z and PLUS + MINUS = T.
TransferMatrix branch_transfer(const ThermalParams &params, const BlockUnitarySpec &spec, Sign sign);

/// Branch map on full-register populations without any bath step (the ICO-alone S matrices).
TransferMatrix ico_transfer(const BlockUnitarySpec &spec, Sign sign);

/// Copy of `matrix` with every nonzero entry replaced by 1.
TransferMatrix unit_pattern(const TransferMatrix &matrix);

}  // namespace hbac

#endif
