/*
 *   Copyright 2026 The rtop Authors
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

#ifndef RTOP_ERRORS_HPP
#define RTOP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtop {

/** Base of every error raised by the engine. */
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/** Two operands live on different universes. */
class UniverseMismatch : public Error {
public:
	UniverseMismatch() : Error("operands belong to different universes") {}
};

/** An element label or index that is not part of the universe. */
class UnknownElement : public Error {
public:
	using Error::Error;
};

/** A size cap (universe, powerset, open-set count, reduct search) was exceeded. */
class CapExceeded : public Error {
public:
	using Error::Error;
};

/** A structure violates its defining invariants (not a cover, not a preorder, ...). */
class InvalidStructure : public Error {
public:
	using Error::Error;
};

/** Malformed input document. Line and column are 1-based; 0 means unknown. */
class ParseError : public Error {
public:
	ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
		: Error(what), line_(line), column_(column) {}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

} // namespace rtop

#endif // RTOP_ERRORS_HPP
