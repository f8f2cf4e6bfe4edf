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

#ifndef RTOP_RELATIONS_HPP
#define RTOP_RELATIONS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rtop/core_sets.hpp"

namespace rtop {

class Covering;

/**
 * A binary relation on a finite universe, stored row-wise as the right
 * neighbourhood r(x) = {y | x R y} of every element. Left neighbourhoods are
 * computed on demand.
 */
class BinaryRelation {
public:
	/** One right neighbourhood per element, all on the same universe. */
	BinaryRelation(UniverseRef u, std::vector<Subset> right_nbhds);

	static BinaryRelation identity(const UniverseRef &u);
	static BinaryRelation full(const UniverseRef &u);
	static BinaryRelation from_pairs(const UniverseRef &u,
	                                 const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

	const UniverseRef &universe() const noexcept { return universe_; }
	std::size_t size() const noexcept { return right_.size(); }

	const Subset &right(std::size_t x) const;
	const std::vector<Subset> &rights() const noexcept { return right_; }
	bool related(std::size_t x, std::size_t y) const;

	/** All pairs (x, y) with x R y, ordered by x then y. */
	std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

	friend bool operator==(const BinaryRelation &a, const BinaryRelation &b);

private:
	UniverseRef universe_;
	std::vector<Subset> right_;
};

/** l(x) = {y | y R x}. */
Subset left_nbhd(const BinaryRelation &rel, std::size_t x);
/** r(x) = {y | x R y}. */
const Subset &right_nbhd(const BinaryRelation &rel, std::size_t x);

bool is_reflexive(const BinaryRelation &rel);
bool is_symmetric(const BinaryRelation &rel);
bool is_transitive(const BinaryRelation &rel);
bool is_equivalence(const BinaryRelation &rel);
/** Reflexive and transitive. */
bool is_preorder(const BinaryRelation &rel);

BinaryRelation inverse(const BinaryRelation &rel);

/** x R y iff y lies in the covering neighbourhood N(x). Always a preorder. */
BinaryRelation relation_from_covering(const Covering &c);

} // namespace rtop

#endif // RTOP_RELATIONS_HPP
