// SPDX-License-Identifier: Apache-2.0
//
// xlirs: near-field SNR analysis for extremely large intelligent reflecting surfaces
// Copyright (C) 2026 The xlirs authors
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

#ifndef XLIRS_ERRORS_HPP
#define XLIRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xlirs
{

// Failure categories. The CLI maps each one to its own exit status.
enum class ErrorKind
{
    parse,
    validation,
    domain,
    convergence,
    io
};

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Invalid geometry, node, scenario or argument (index out of range, dimension mismatch, ...).
class ValidationError : public Error
{
public:
    explicit ValidationError(const std::string &what) : Error(ErrorKind::validation, what) {}
};

// Argument outside the real domain of a special function.
class DomainError : public Error
{
public:
    explicit DomainError(const std::string &what) : Error(ErrorKind::domain, what) {}
};

// Adaptive quadrature ran out of refinement levels. Carries the best estimate reached.
class ConvergenceError : public Error
{
public:
    ConvergenceError(const std::string &what, double best_estimate, double error_bound)
        : Error(ErrorKind::convergence, what), best_estimate_(best_estimate), error_bound_(error_bound) {}
    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

// Config file syntax problems. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error
{
public:
    ParseError(const std::string &what, int line = 0) : Error(ErrorKind::parse, what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public Error
{
public:
    explicit IoError(const std::string &what) : Error(ErrorKind::io, what) {}
};

} // namespace xlirs

#endif
