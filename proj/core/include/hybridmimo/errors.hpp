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

#ifndef HYBRIDMIMO_ERRORS_HPP
#define HYBRIDMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hybridmimo {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid experiment or call parameters (shape mismatch, M not divisible by K, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

// Pivot fell below the relative tolerance during elimination.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// Request would exceed a hard resource cap (e.g. RVQ codebook larger than 2^20).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Effective channel with zero norm cannot be quantized or normalized.
class DegenerateChannelError : public Error {
public:
    using Error::Error;
};

// A closed-form threshold is undefined at the requested parameters.
class ThresholdUndefinedError : public Error {
public:
    using Error::Error;
};

}  // namespace hybridmimo

#endif
