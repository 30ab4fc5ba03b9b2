// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hybridmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HYBRIDMIMO_NUMERICS_HPP
#define HYBRIDMIMO_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hybridmimo/rng.hpp"

namespace hybridmimo {

using cplx = std::complex<double>;

// Dense complex vector.
class CVec {
public:
    CVec() = default;
    explicit CVec(std::size_t n, cplx fill = {}) : data_(n, fill) {}
    CVec(std::initializer_list<cplx> values) : data_(values) {}

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator[](std::size_t i) noexcept { return data_[i]; }
    const cplx& operator[](std::size_t i) const noexcept { return data_[i]; }

    std::span<cplx> span() noexcept { return data_; }
    std::span<const cplx> span() const noexcept { return data_; }
    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    double squared_norm() const noexcept;
    double norm() const noexcept;

private:
    std::vector<cplx> data_;
};

// sin(x)/x with sinc(0) = 1.
double sinc(double x) noexcept;

// x^H y
cplx dot(std::span<const cplx> x, std::span<const cplx> y);

// Dense complex matrix, row-major.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols, cplx fill = {}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    // Rows given as nested lists; every row must have the same length.
    CMat(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMat identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<cplx> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    CVec column(std::size_t c) const;
    void set_column(std::size_t c, const CVec& v);

    // Conjugate transpose.
    CMat adjoint() const;

    std::span<const cplx> data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMat operator*(const CMat& a, const CMat& b);
CVec operator*(const CMat& a, const CVec& x);
CMat operator-(const CMat& a, const CMat& b);

// Frobenius norm.
double frobenius_norm(const CMat& a);

// Draws n i.i.d. CN(0, 1) values. Throws EmptyInputError for n = 0.
CVec sample_cgauss(RngStream& stream, std::size_t n);

// Solves M X = B by Gaussian elimination with partial pivoting.
//
// Intended for the small K x K Gram matrices of the ZF precoder (K <= 64). A
// pivot smaller than 1e-12 times the largest magnitude in M raises
// SingularMatrixError.
CMat hermitian_solve(const CMat& m, const CMat& b);

inline constexpr std::size_t kMaxSolveDim = 64;
inline constexpr double kSingularPivotTolerance = 1e-12;

// Sample mean with a 95% normal-approximation confidence half-width.
struct MeanCI {
    double mean = 0.0;
    double half_width = 0.0;
    std::size_t count = 0;
};

inline constexpr double kZ95 = 1.96;

// Throws InsufficientSamplesError for fewer than two samples.
MeanCI mean_ci(std::span<const double> samples);

// Streaming mean / variance accumulator (Welford). merge() combines partial
// results; the outcome depends only on the order of merges, so a fixed merge
// order yields bit-identical results.
class RunningStats {
public:
    void add(double x) noexcept;
    void merge(const RunningStats& other) noexcept;

    std::size_t count() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }
    // Unbiased sample variance; zero for fewer than two samples.
    double variance() const noexcept;
    double std_error() const noexcept;

    // Throws InsufficientSamplesError for fewer than two samples.
    MeanCI to_mean_ci() const;

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace hybridmimo

#endif
