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

#ifndef RTOP_COVERINGS_HPP
#define RTOP_COVERINGS_HPP

#include <cstddef>
#include <vector>

#include "rtop/core_sets.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace rtop {

/**
 * A cover of U: non-empty members whose union is U.
 */
class Covering {
public:
	/** Throws InvalidStructure if a member is empty or the union misses an element. */
	explicit Covering(SetFamily members);

	const UniverseRef &universe() const noexcept { return members_.universe(); }
	const SetFamily &members() const noexcept { return members_; }

	friend bool operator==(const Covering &a, const Covering &b) { return a.members_ == b.members_; }

private:
	SetFamily members_;
};

/** The open sets of `t` minus the empty set. */
Covering covering_from_topology(const Topology &t, std::size_t max_opens = kDefaultMaxOpens);

/** Md(x): the inclusion-minimal members containing x. */
SetFamily minimal_description(const Covering &c, std::size_t x);

/** N(x): intersection of the members containing x. */
Subset neighborhood(const Covering &c, std::size_t x);
/** N(x) for every x, indexed by element. */
std::vector<Subset> neighborhoods(const Covering &c);

/** |Md(x)| = 1 for every x. */
bool is_unary(const Covering &c);

/** F(C) = {N(x) | x in U}, deduplicated. */
Covering neighborhood_transform(const Covering &c);

/** {r(x) | x in U} for a preorder; throws InvalidStructure otherwise. */
Covering covering_from_relation(const BinaryRelation &rel);

} // namespace rtop

#endif // RTOP_COVERINGS_HPP
