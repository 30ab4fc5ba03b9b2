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

#include "hybridmimo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hybridmimo/errors.hpp"

namespace hybridmimo {

double CVec::squared_norm() const noexcept
{
    double s = 0.0;
    for (const auto& v : data_) {
        s += std::norm(v);
    }
    return s;
}

double CVec::norm() const noexcept
{
    return std::sqrt(squared_norm());
}

double sinc(double x) noexcept
{
    return x == 0.0 ? 1.0 : std::sin(x) / x;
}

cplx dot(std::span<const cplx> x, std::span<const cplx> y)
{
    if (x.size() != y.size()) {
        throw DimensionError("dot: length mismatch " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    cplx s{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("CMat: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMat CMat::identity(std::size_t n)
{
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CVec CMat::column(std::size_t c) const
{
    CVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void CMat::set_column(std::size_t c, const CVec& v)
{
    if (v.size() != rows_) {
        throw DimensionError("set_column: length " + std::to_string(v.size()) + " for " + std::to_string(rows_) +
                             " rows");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

CMat CMat::adjoint() const
{
    CMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = std::conj((*this)(r, c));
        }
    }
    return t;
}

CMat operator*(const CMat& a, const CMat& b)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    CMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

CVec operator*(const CMat& a, const CVec& x)
{
    if (a.cols() != x.size()) {
        throw DimensionError("matrix-vector product: " + std::to_string(a.cols()) + " columns vs length " +
                             std::to_string(x.size()));
    }
    CVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s{};
        for (std::size_t k = 0; k < a.cols(); ++k) {
            s += a(i, k) * x[k];
        }
        y[i] = s;
    }
    return y;
}

CMat operator-(const CMat& a, const CMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix difference: shape mismatch");
    }
    CMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

double frobenius_norm(const CMat& a)
{
    double s = 0.0;
    for (const auto& v : a.data()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

CVec sample_cgauss(RngStream& stream, std::size_t n)
{
    if (n == 0) {
        throw EmptyInputError("sample_cgauss: n must be at least 1");
    }
    CVec v(n);
    for (auto& x : v) {
        x = stream.cgauss();
    }
    return v;
}

CMat hermitian_solve(const CMat& m, const CMat& b)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) {
        throw DimensionError("hermitian_solve: matrix is " + std::to_string(n) + "x" + std::to_string(m.cols()));
    }
    if (b.rows() != n) {
        throw DimensionError("hermitian_solve: right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                             std::to_string(n));
    }
    if (n == 0 || n > kMaxSolveDim) {
        throw DimensionError("hermitian_solve: dimension " + std::to_string(n) + " outside 1..64");
    }

    CMat a = m;
    CMat x = b;
    const std::size_t nrhs = b.cols();

    double scale = 0.0;
    for (const auto& v : m.data()) {
        scale = std::max(scale, std::abs(v));
    }
    const double tol = kSingularPivotTolerance * scale;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (!(best > tol)) {
            throw SingularMatrixError("hermitian_solve: pivot " + std::to_string(best) + " below tolerance at column " +
                                      std::to_string(col));
        }
        if (piv != col) {
            std::swap_ranges(a.row(col).begin(), a.row(col).end(), a.row(piv).begin());
            std::swap_ranges(x.row(col).begin(), x.row(col).end(), x.row(piv).begin());
        }
        const cplx inv_pivot = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) * inv_pivot;
            if (f == cplx{}) {
                continue;
            }
            a(r, col) = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) {
                a(r, c) -= f * a(col, c);
            }
            for (std::size_t c = 0; c < nrhs; ++c) {
                x(r, c) -= f * x(col, c);
            }
        }
    }

    // Back substitution.
    for (std::size_t ri = n; ri-- > 0;) {
        const cplx inv_pivot = 1.0 / a(ri, ri);
        for (std::size_t c = 0; c < nrhs; ++c) {
            cplx s = x(ri, c);
            for (std::size_t k = ri + 1; k < n; ++k) {
                s -= a(ri, k) * x(k, c);
            }
            x(ri, c) = s * inv_pivot;
        }
    }
    return x;
}

MeanCI mean_ci(std::span<const double> samples)
{
    if (samples.size() < 2) {
        throw InsufficientSamplesError("mean_ci: need at least 2 samples, got " + std::to_string(samples.size()));
    }
    RunningStats s;
    for (double x : samples) {
        s.add(x);
    }
    return s.to_mean_ci();
}

void RunningStats::add(double x) noexcept
{
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) noexcept
{
    if (other.n_ == 0) {
        return;
    }
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double d = other.mean_ - mean_;
    mean_ += d * nb / n;
    m2_ += other.m2_ + d * d * na * nb / n;
    n_ += other.n_;
}

double RunningStats::variance() const noexcept
{
    return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double RunningStats::std_error() const noexcept
{
    return n_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

MeanCI RunningStats::to_mean_ci() const
{
    if (n_ < 2) {
        throw InsufficientSamplesError("mean_ci: need at least 2 samples, got " + std::to_string(n_));
    }
    return {mean_, kZ95 * std_error(), n_};
}

}  // namespace hybridmimo
