/* Copyright 2026 The taut Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef TAUT_ERRORS_HPP
#define TAUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed presentation text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A presentation or representation that violates its structural invariants.
class AlgebraError : public Error {
public:
    using Error::Error;
};

/// The word-length bound was too small to decide the requested quantity.
class BoundExhausted : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Internal cross-check failed; always indicates a bug or an out-of-scope input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace taut

#endif // TAUT_ERRORS_HPP
