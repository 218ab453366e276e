/*
 * Copyright 2026 The pst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PST_ERRORS_HPP
#define PST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pst {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** A graph operation would leave a vertex without successors. */
class DeadEndError : public Error
{
public:
    using Error::Error;
};

/** Structural problem in a graph, objective or template handed to the library. */
class InvalidInputError : public Error
{
public:
    using Error::Error;
};

/** A documented precondition of an algorithm does not hold. */
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/** A brute-force oracle was asked to handle an instance above its size bound. */
class SizeGuardError : public Error
{
public:
    using Error::Error;
};

/** A strategy was asked for a move at a vertex outside its domain. */
class DomainError : public Error
{
public:
    using Error::Error;
};

/** Text input could not be parsed; carries a 1-based line and column. */
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace pst

#endif
