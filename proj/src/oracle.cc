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

#include "hbac/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace hbac::oracle {

namespace {

using Complex = std::complex<double>;

constexpr Complex kI{0, 1};

void check_dense_cap(size_t n) {
    if (n > kDenseCap) {
        throw std::length_error("dense oracle is capped at n=" + std::to_string(kDenseCap));
    }
}

size_t exponent_of(const Matrix &rho) {
    auto dim = static_cast<size_t>(rho.rows());
    if (dim < 2 || (dim & (dim - 1)) != 0 || rho.cols() != rho.rows()) {
        throw std::invalid_argument("dense state must be square with a power-of-two dimension");
    }
    return static_cast<size_t>(std::countr_zero(dim)) - 1;
}

}  // namespace

Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix sigma_y() {
    Matrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix materialize(const BlockUnitarySpec &spec, Factor factor) {
    check_dense_cap(spec.n());
    const auto dim = static_cast<Eigen::Index>(spec.dimension());
    Matrix pauli = factor == Factor::kA ? sigma_y() : factor == Factor::kB ? sigma_z() : sigma_x();
    Matrix u = Matrix::Zero(dim, dim);
    Eigen::Index at = 0;
    for (auto block : spec.blocks()) {
        if (block == Block::kOne) {
            u(at, at) = 1;
            at += 1;
        } else {
            u.block(at, at, 2, 2) = pauli;
            at += 2;
        }
    }
    return u;
}

double unitarity_defect(const Matrix &u) {
    Matrix d = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

Matrix density(std::span<const double> populations) {
    const auto dim = static_cast<Eigen::Index>(populations.size());
    Matrix rho = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        rho(i, i) = populations[static_cast<size_t>(i)];
    }
    return rho;
}

Matrix density(const DiagonalState &state) {
    check_dense_cap(state.n());
    return density(state.populations());
}

std::vector<double> diagonal(const Matrix &rho) {
    std::vector<double> d(static_cast<size_t>(rho.rows()));
    for (Eigen::Index i = 0; i < rho.rows(); i++) {
        d[static_cast<size_t>(i)] = rho(i, i).real();
    }
    return d;
}

double max_off_diagonal(const Matrix &rho) {
    double worst = 0;
    for (Eigen::Index r = 0; r < rho.rows(); r++) {
        for (Eigen::Index c = 0; c < rho.cols(); c++) {
            if (r != c) {
                worst = std::max(worst, std::abs(rho(r, c)));
            }
        }
    }
    return worst;
}

Matrix reset(const Matrix &rho, const ThermalParams &params) {
    check_dense_cap(exponent_of(rho));
    const Eigen::Index half = rho.rows() / 2;
    Matrix traced = Matrix::Zero(half, half);
    for (Eigen::Index a = 0; a < half; a++) {
        for (Eigen::Index b = 0; b < half; b++) {
            traced(a, b) = rho(2 * a, 2 * b) + rho(2 * a + 1, 2 * b + 1);
        }
    }
    Matrix bath = Matrix::Zero(2, 2);
    const double z = 2 * std::cosh(params.epsilon);
    bath(0, 0) = std::exp(params.epsilon) / z;
    bath(1, 1) = std::exp(-params.epsilon) / z;
    return Eigen::kroneckerProduct(traced, bath).eval();
}

Matrix switch_channel(const Matrix &rho, const Matrix &ua, const Matrix &ub, Sign sign) {
    const double s = sign == Sign::kPlus ? 1.0 : -1.0;
    Matrix ab = ua * ub;
    Matrix ba = ub * ua;
    Matrix out = ab * rho * ab.adjoint() + ba * rho * ba.adjoint() + s * (ab * rho * ba.adjoint()) +
                 s * (ba * rho * ab.adjoint());
    return out / 4.0;
}

Matrix switch_channel(const Matrix &rho, const BlockUnitarySpec &spec, Sign sign) {
    return switch_channel(rho, materialize(spec, Factor::kA), materialize(spec, Factor::kB), sign);
}

Matrix switch_unitary(const Matrix &ua, const Matrix &ub) {
    const Eigen::Index dim = ua.rows();
    Matrix u = Matrix::Zero(2 * dim, 2 * dim);
    u.topLeftCorner(dim, dim) = ub * ua;
    u.bottomRightCorner(dim, dim) = ua * ub;
    return u;
}

Matrix switch_via_control(const Matrix &rho, const Matrix &ua, const Matrix &ub, Sign sign) {
    Matrix plus_projector = Matrix::Constant(2, 2, 0.5);
    Matrix joint = Eigen::kroneckerProduct(plus_projector, rho).eval();
    Matrix u = switch_unitary(ua, ub);
    Matrix evolved = u * joint * u.adjoint();
    const Eigen::Index dim = rho.rows();
    const double s = sign == Sign::kPlus ? 1.0 : -1.0;
    // <+-| (x) 1 applied on both sides.
    Matrix out = evolved.topLeftCorner(dim, dim) + evolved.bottomRightCorner(dim, dim) +
                 s * evolved.topRightCorner(dim, dim) + s * evolved.bottomLeftCorner(dim, dim);
    return out / 2.0;
}

double min_eigenvalue(const Matrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double ComparisonReport::max_deviation() const {
    double worst = 0;
    for (const auto &r : rows) {
        worst = std::max(worst, r.diagonal);
    }
    return worst;
}

double ComparisonReport::max_off_diagonal() const {
    double worst = 0;
    for (const auto &r : rows) {
        worst = std::max(worst, r.off_diagonal);
    }
    return worst;
}

ComparisonReport compare(size_t nmax, size_t trials, uint64_t seed, double fault) {
    check_dense_cap(nmax);
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::map<std::pair<std::string, int>, FamilyDeviation> rows;
    auto record = [&](const std::string &family, Sign sign, double diag, double off) {
        auto key = std::make_pair(family, sign == Sign::kPlus ? 0 : 1);
        auto [it, inserted] = rows.try_emplace(key, FamilyDeviation{family, sign, 0, 0, 0});
        it->second.diagonal = std::max(it->second.diagonal, diag);
        it->second.off_diagonal = std::max(it->second.off_diagonal, off);
        it->second.cases++;
    };

    for (size_t n = 1; n <= nmax; n++) {
        std::vector<BlockUnitarySpec> specs{standard_pair(n), ideal_pair(n)};
        for (size_t k = 1; k <= n; k++) {
            specs.push_back(k_pair(n, k));
        }
        for (size_t level = 0; level < n; level++) {
            specs.push_back(tree_pair(n, level));
        }
        std::vector<std::pair<Matrix, Matrix>> factors;
        for (const auto &spec : specs) {
            factors.emplace_back(materialize(spec, Factor::kA), materialize(spec, Factor::kB));
        }

        const size_t dim = size_t{1} << (n + 1);
        for (size_t t = 0; t < trials; t++) {
            std::vector<double> lambda(dim);
            double total = 0;
            for (auto &x : lambda) {
                double u = uniform();
                x = u < 0.1 ? 0.0 : -std::log(u);
                total += x;
            }
            if (total == 0) {
                lambda[0] = total = 1;
            }
            for (auto &x : lambda) {
                x /= total;
            }
            DiagonalState state(n, lambda);
            Matrix rho = density(state);
            for (size_t s = 0; s < specs.size(); s++) {
                auto fast = switch_branches(state, specs[s]);
                for (Sign sign : {Sign::kPlus, Sign::kMinus}) {
                    Matrix dense = switch_channel(rho, factors[s].first, factors[s].second, sign);
                    auto fast_pop = sign == Sign::kPlus ? fast.plus.state.populations()
                                                        : fast.minus.state.populations();
                    auto dense_pop = diagonal(dense);
                    double worst = 0;
                    for (size_t i = 0; i < dim; i++) {
                        double f = fast_pop[i] + (sign == Sign::kPlus && i == 0 ? fault : 0.0);
                        worst = std::max(worst, std::abs(f - dense_pop[i]));
                        worst = std::max(worst, std::abs(dense(static_cast<Eigen::Index>(i),
                                                               static_cast<Eigen::Index>(i))
                                                             .imag()));
                    }
                    record(family_name(specs[s].family()), sign, worst, max_off_diagonal(dense));
                }
            }
        }
    }

    ComparisonReport report;
    for (auto &[key, row] : rows) {
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace hbac::oracle
