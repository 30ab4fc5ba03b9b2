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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hybridmimo/bits.hpp"
#include "hybridmimo/errors.hpp"
#include "hybridmimo/numerics.hpp"

namespace hm = hybridmimo;
using hm::cplx;

namespace {

hm::CMat random_matrix(hm::RngStream& s, std::size_t r, std::size_t c)
{
    hm::CMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (auto& v : m.row(i)) {
            v = s.cgauss();
        }
    }
    return m;
}

double max_abs_diff(const hm::CMat& a, const hm::CMat& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    }
    return d;
}

TEST(Matrix, AdjointTwiceIsIdentityMap)
{
    hm::RngStream s(1, 0);
    const auto x = random_matrix(s, 5, 3);
    const auto xh = x.adjoint();
    ASSERT_EQ(xh.rows(), 3u);
    ASSERT_EQ(xh.cols(), 5u);
    EXPECT_EQ(xh(2, 4), std::conj(x(4, 2)));
    EXPECT_EQ(max_abs_diff(xh.adjoint(), x), 0.0);
}

TEST(Matrix, ProductMatchesHandComputation)
{
    const hm::CMat a{{1.0, cplx(0, 1)}, {2.0, 3.0}};
    const hm::CMat b{{cplx(0, -1), 0.0}, {1.0, 1.0}};
    const auto c = a * b;
    EXPECT_EQ(c(0, 0), cplx(0, -1) + cplx(0, 1));
    EXPECT_EQ(c(0, 1), cplx(0, 1));
    EXPECT_EQ(c(1, 0), cplx(3, -2));
    EXPECT_EQ(c(1, 1), cplx(3, 0));
}

TEST(Matrix, ShapeMismatchThrows)
{
    EXPECT_THROW((hm::CMat{{1.0, 2.0}, {3.0}}), hm::DimensionError);
    EXPECT_THROW(hm::CMat(2, 3) * hm::CMat(2, 3), hm::DimensionError);
    EXPECT_THROW(hm::CMat(2, 3) * hm::CVec(2), hm::DimensionError);
    EXPECT_THROW(hm::dot(hm::CVec(2).span(), hm::CVec(3).span()), hm::DimensionError);
}

TEST(Matrix, DotConjugatesFirstArgument)
{
    const hm::CVec x{cplx(0, 1), 2.0};
    const hm::CVec y{1.0, cplx(0, 1)};
    EXPECT_EQ(hm::dot(x.span(), y.span()), cplx(0, -1) + cplx(0, 2));
}

TEST(Sinc, ValuesAndRemovableSingularity)
{
    EXPECT_EQ(hm::sinc(0.0), 1.0);
    EXPECT_NEAR(hm::sinc(std::numbers::pi / 2.0), 2.0 / std::numbers::pi, 1e-15);
    EXPECT_NEAR(hm::sinc(1e-9), 1.0, 1e-15);
}

TEST(HermitianSolve, IdentitySystem)
{
    const hm::CMat b{{1.0}, {cplx(2, -1)}, {3.0}};
    const auto x = hm::hermitian_solve(hm::CMat::identity(3), b);
    EXPECT_EQ(max_abs_diff(x, b), 0.0);
}

TEST(HermitianSolve, DiagonalSystem)
{
    const hm::CMat m{{2.0, 0.0}, {0.0, 4.0}};
    const hm::CMat b{{1.0}, {1.0}};
    const auto x = hm::hermitian_solve(m, b);
    EXPECT_NEAR(x(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(x(1, 0).real(), 0.25, 1e-15);
}

TEST(HermitianSolve, GramResidualIsTiny)
{
    hm::RngStream s(3, 0);
    const auto a = random_matrix(s, 4, 4);
    const auto m = a.adjoint() * a;
    const auto b = random_matrix(s, 4, 2);
    const auto x = hm::hermitian_solve(m, b);
    EXPECT_LE(frobenius_norm(m * x - b), 1e-10 * frobenius_norm(b));
}

TEST(HermitianSolve, RandomGramSystemsAcrossSizes)
{
    hm::RngStream s(17, 0);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t k = 2 + static_cast<std::size_t>(s.next_u64() % 7);
        const auto a = random_matrix(s, k + 2, k);
        const auto m = a.adjoint() * a;
        const auto b = random_matrix(s, k, 1);
        const auto x = hm::hermitian_solve(m, b);
        ASSERT_LE(frobenius_norm(m * x - b), 1e-10 * frobenius_norm(b)) << "k=" << k << " rep=" << rep;
    }
}

TEST(HermitianSolve, RejectsSingularAndOversized)
{
    const hm::CMat sing{{1.0, 1.0}, {1.0, 1.0}};
    EXPECT_THROW(hm::hermitian_solve(sing, hm::CMat(2, 1, 1.0)), hm::SingularMatrixError);
    EXPECT_THROW(hm::hermitian_solve(hm::CMat::identity(65), hm::CMat(65, 1)), hm::DimensionError);
    EXPECT_THROW(hm::hermitian_solve(hm::CMat::identity(2), hm::CMat(3, 1)), hm::DimensionError);
}

TEST(MeanCI, ConstantSamplesHaveZeroWidth)
{
    const std::vector<double> v{1, 1, 1, 1};
    const auto ci = hm::mean_ci(v);
    EXPECT_EQ(ci.mean, 1.0);
    EXPECT_EQ(ci.half_width, 0.0);
    EXPECT_EQ(ci.count, 4u);
}

TEST(MeanCI, TwoPointExample)
{
    const std::vector<double> v{0, 2};
    const auto ci = hm::mean_ci(v);
    EXPECT_DOUBLE_EQ(ci.mean, 1.0);
    EXPECT_NEAR(ci.half_width, 1.96, 1e-12);
}

TEST(MeanCI, TooFewSamplesThrow)
{
    EXPECT_THROW(hm::mean_ci(std::vector<double>{}), hm::InsufficientSamplesError);
    EXPECT_THROW(hm::mean_ci(std::vector<double>{3.0}), hm::InsufficientSamplesError);
}

TEST(MeanCI, CoverageOfKnownMean)
{
    int covered = 0;
    constexpr int reps = 400;
    for (int r = 0; r < reps; ++r) {
        hm::RngStream s(99, static_cast<std::uint64_t>(r));
        std::vector<double> v(1000);
        for (auto& x : v) {
            x = s.uniform();
        }
        const auto ci = hm::mean_ci(v);
        covered += std::abs(ci.mean - 0.5) <= ci.half_width;
    }
    EXPECT_GE(covered, static_cast<int>(0.9 * reps));
}

TEST(RunningStats, MergeMatchesSequential)
{
    hm::RngStream s(4, 0);
    hm::RunningStats all;
    hm::RunningStats left;
    hm::RunningStats right;
    for (int i = 0; i < 1000; ++i) {
        const double x = s.uniform(-3.0, 5.0);
        all.add(x);
        (i < 377 ? left : right).add(x);
    }
    left.merge(right);
    EXPECT_EQ(left.count(), all.count());
    EXPECT_NEAR(left.mean(), all.mean(), 1e-12);
    EXPECT_NEAR(left.variance(), all.variance(), 1e-10);
}

TEST(Bits, ParseAndPrint)
{
    EXPECT_EQ(hm::Bits::parse("inf"), hm::Bits::infinite());
    EXPECT_EQ(hm::Bits::parse("3"), hm::Bits(3));
    EXPECT_EQ(hm::Bits(7).to_string(), "7");
    EXPECT_EQ(hm::Bits::infinite().to_string(), "inf");
    EXPECT_TRUE(std::isinf(hm::Bits::infinite().as_real()));
    EXPECT_THROW(hm::Bits::parse("-1"), hm::ConfigError);
    EXPECT_THROW(hm::Bits::parse("abc"), hm::ConfigError);
    EXPECT_THROW(hm::Bits::parse("2.5"), hm::ConfigError);
}

}  // namespace
