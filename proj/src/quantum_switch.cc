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

#include "hbac/quantum_switch.h"

#include <stdexcept>

namespace hbac {

const char *family_name(SpecFamily family) {
    switch (family) {
        case SpecFamily::kStandard:
            return "standard";
        case SpecFamily::kIdeal:
            return "ideal";
        case SpecFamily::kKIco:
            return "k-ico";
        case SpecFamily::kTreeSort:
            return "tree-sort";
        case SpecFamily::kCustom:
            return "custom";
    }
    return "?";
}

const char *sign_name(Sign sign) {
    return sign == Sign::kPlus ? "+" : "-";
}

BlockUnitarySpec::BlockUnitarySpec(size_t n, std::vector<Block> blocks, SpecFamily family)
    : n_(n), blocks_(std::move(blocks)), family_(family) {
    check_register_exponent(n);
    size_t dim = 0;
    for (auto b : blocks_) {
        dim += b == Block::kOne ? 1 : 2;
    }
    if (dim != dimension()) {
        throw std::invalid_argument(
            "BlockUnitarySpec: blocks span dimension " + std::to_string(dim) + " but the register needs " +
            std::to_string(dimension()));
    }
}

BlockUnitarySpec BlockUnitarySpec::parse(size_t n, std::string_view text) {
    std::vector<Block> blocks;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') {
            token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
            token.remove_suffix(1);
        }
        if (token == "1") {
            blocks.push_back(Block::kOne);
        } else if (token == "YZ") {
            blocks.push_back(Block::kPair);
        } else {
            throw std::invalid_argument(
                "BlockUnitarySpec::parse: unsupported block '" + std::string(token) +
                "' (only '1' and the sigma_y/sigma_z pair 'YZ' are allowed)");
        }
        pos = comma + 1;
    }
    return {n, std::move(blocks)};
}

size_t BlockUnitarySpec::pair_count() const {
    size_t count = 0;
    for (auto b : blocks_) {
        count += b == Block::kPair;
    }
    return count;
}

std::string BlockUnitarySpec::to_string() const {
    std::string out;
    for (size_t i = 0; i < blocks_.size(); i++) {
        if (i) {
            out += ',';
        }
        out += blocks_[i] == Block::kOne ? "1" : "YZ";
    }
    return out;
}

namespace {

void require_positive_n(size_t n, const char *who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": n must be at least 1");
    }
}

}  // namespace

BlockUnitarySpec standard_pair(size_t n) {
    require_positive_n(n, "standard_pair");
    check_register_exponent(n);
    std::vector<Block> blocks;
    blocks.reserve((size_t{1} << n) + 1);
    blocks.push_back(Block::kOne);
    blocks.insert(blocks.end(), (size_t{1} << n) - 1, Block::kPair);
    blocks.push_back(Block::kOne);
    return {n, std::move(blocks), SpecFamily::kStandard};
}

BlockUnitarySpec ideal_pair(size_t n) {
    require_positive_n(n, "ideal_pair");
    check_register_exponent(n);
    std::vector<Block> blocks{Block::kOne, Block::kOne};
    blocks.insert(blocks.end(), (size_t{1} << n) - 1, Block::kPair);
    return {n, std::move(blocks), SpecFamily::kIdeal};
}

BlockUnitarySpec k_pair(size_t n, size_t k) {
    if (k < 1 || k > n) {
        throw std::out_of_range("k_pair: k must satisfy 1 <= k <= n");
    }
    check_register_exponent(n);
    std::vector<Block> blocks(size_t{1} << k, Block::kOne);
    blocks.insert(blocks.end(), (size_t{1} << n) - (size_t{1} << (k - 1)), Block::kPair);
    return {n, std::move(blocks), SpecFamily::kKIco};
}

BlockUnitarySpec tree_pair(size_t n, size_t level) {
    require_positive_n(n, "tree_pair");
    if (level >= n) {
        throw std::out_of_range("tree_pair: level must satisfy 0 <= level < n");
    }
    check_register_exponent(n);
    const size_t ones = size_t{1} << (n - level);
    const size_t pairs = ones / 2;
    std::vector<Block> blocks;
    for (size_t rep = 0; rep < (size_t{1} << level); rep++) {
        blocks.insert(blocks.end(), ones, Block::kOne);
        blocks.insert(blocks.end(), pairs, Block::kPair);
    }
    return {n, std::move(blocks), SpecFamily::kTreeSort};
}

BranchPair switch_branches(const DiagonalState &state, const BlockUnitarySpec &spec) {
    if (state.n() != spec.n()) {
        throw std::invalid_argument("switch_branches: state and spec register sizes differ");
    }
    auto lambda = state.populations();
    std::vector<double> plus(lambda.size(), 0.0);
    std::vector<double> minus(lambda.size(), 0.0);
    size_t i = 0;
    for (auto b : spec.blocks()) {
        if (b == Block::kOne) {
            plus[i] = lambda[i];
            i += 1;
        } else {
            minus[i] = lambda[i + 1];
            minus[i + 1] = lambda[i];
            i += 2;
        }
    }
    DiagonalState plus_state(state.n(), std::move(plus));
    DiagonalState minus_state(state.n(), std::move(minus));
    double p_plus = plus_state.norm();
    double p_minus = minus_state.norm();
    return {
        BranchOutcome{Sign::kPlus, std::move(plus_state), p_plus},
        BranchOutcome{Sign::kMinus, std::move(minus_state), p_minus},
    };
}

namespace {

const BranchOutcome &pick(const BranchPair &pair, Sign sign) {
    return sign == Sign::kPlus ? pair.plus : pair.minus;
}

TransferKind kind_of(Sign sign) {
    return sign == Sign::kPlus ? TransferKind::kPlus : TransferKind::kMinus;
}

}  // namespace

TransferMatrix branch_transfer(const ThermalParams &params, const BlockUnitarySpec &spec, Sign sign) {
    const size_t n = spec.n();
    if (n > kDenseTransferCap) {
        throw std::length_error("branch_transfer: dense matrices are capped at n=" + std::to_string(kDenseTransferCap));
    }
    const size_t dim = size_t{1} << n;
    std::vector<double> m(dim * dim, 0.0);
    std::vector<double> basis(dim, 0.0);
    for (size_t c = 0; c < dim; c++) {
        basis[c] = 1;
        ReducedState column = reduce(pick(switch_branches(reset(ReducedState(n, basis), params), spec), sign).state);
        for (size_t r = 0; r < dim; r++) {
            m[r * dim + c] = column[r];
        }
        basis[c] = 0;
    }
    return {n, kind_of(sign), dim, std::move(m)};
}

TransferMatrix ico_transfer(const BlockUnitarySpec &spec, Sign sign) {
    const size_t n = spec.n();
    if (n + 1 > kDenseTransferCap) {
        throw std::length_error("ico_transfer: dense matrices are capped at dimension 2^" + std::to_string(kDenseTransferCap));
    }
    const size_t dim = spec.dimension();
    std::vector<double> m(dim * dim, 0.0);
    std::vector<double> basis(dim, 0.0);
    for (size_t c = 0; c < dim; c++) {
        basis[c] = 1;
        DiagonalState column = pick(switch_branches(DiagonalState(n, basis), spec), sign).state;
        for (size_t r = 0; r < dim; r++) {
            m[r * dim + c] = column[r];
        }
        basis[c] = 0;
    }
    return {n, kind_of(sign), dim, std::move(m)};
}

TransferMatrix unit_pattern(const TransferMatrix &matrix) {
    std::vector<double> m(matrix.entries().begin(), matrix.entries().end());
    for (auto &x : m) {
        x = x != 0 ? 1.0 : 0.0;
    }
    return {matrix.n(), matrix.kind(), matrix.dimension(), std::move(m)};
}

}  // namespace hbac
