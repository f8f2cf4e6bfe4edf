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

#ifndef RTOP_TOPOLOGY_HPP
#define RTOP_TOPOLOGY_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "rtop/core_sets.hpp"
#include "rtop/relations.hpp"

namespace rtop {

/** Default ceiling on the number of open sets materialize_opens will produce. */
inline constexpr std::size_t kDefaultMaxOpens = std::size_t{1} << 16;

/**
 * Generating family of a topology. Empty members are dropped on
 * construction; elements whose generating neighbourhood was empty are kept
 * in `empty_rows` for reporting.
 */
class Subbase {
public:
	explicit Subbase(SetFamily members, std::vector<std::size_t> empty_rows = {});

	const UniverseRef &universe() const noexcept { return members_.universe(); }
	const SetFamily &members() const noexcept { return members_; }
	const std::vector<std::size_t> &empty_rows() const noexcept { return empty_rows_; }

	/** Union of the two generating families. */
	Subbase merged(const Subbase &other) const;

private:
	SetFamily members_;
	std::vector<std::size_t> empty_rows_;
};

/**
 * A finite topology held through its minimal open neighbourhoods N(x).
 *
 * On a finite universe N determines the topology completely: G is open iff
 * N(x) is contained in G for every x in G. The full open family is built
 * lazily by materialize_opens and cached; the cache is shared between copies
 * and guarded for concurrent readers.
 */
class Topology {
public:
	/**
	 * Requires x in N(x) and y in N(x) => N(y) within N(x).
	 * Throws InvalidStructure otherwise.
	 */
	static Topology from_min_nbhds(UniverseRef u, std::vector<Subset> min_nbhds);

	/** Throws InvalidStructure unless `opens` satisfies T1-T3. */
	static Topology from_opens(const SetFamily &opens);

	static Topology discrete(const UniverseRef &u);
	static Topology indiscrete(const UniverseRef &u);

	const UniverseRef &universe() const noexcept { return universe_; }
	const Subset &min_nbhd(std::size_t x) const;
	const std::vector<Subset> &min_nbhds() const noexcept { return min_nbhd_; }

	bool is_open(const Subset &g) const;
	bool is_closed(const Subset &f) const;

	const SetFamily &opens(std::size_t max_opens = kDefaultMaxOpens) const;

private:
	struct Cache;

	Topology(UniverseRef u, std::vector<Subset> min_nbhds);

	UniverseRef universe_;
	std::vector<Subset> min_nbhd_;
	std::shared_ptr<Cache> cache_;
};

/** N(x) is the intersection of the subbase members containing x (U if none). */
Topology generate_from_subbase(const Subbase &s);

/** All unions of minimal neighbourhoods plus the empty set, canonical order. */
const SetFamily &materialize_opens(const Topology &t, std::size_t max_opens = kDefaultMaxOpens);

Subset interior(const Topology &t, const Subset &x);
Subset closure(const Topology &t, const Subset &x);
Subset boundary(const Topology &t, const Subset &x);
bool is_exact(const Topology &t, const Subset &x);

/** Pointwise equality of minimal neighbourhoods; throws on mixed universes. */
bool topologies_equal(const Topology &a, const Topology &b);

/** {r(x) | x in U}, with empty right neighbourhoods recorded and excluded. */
Subbase subbase_from_relation(const BinaryRelation &rel);

/** Direct check of T1 (empty set and U present), T2 and T3 on a family. */
struct AxiomCheck {
	bool t1 = false;
	bool t2 = false;
	bool t3 = false;
	bool all() const noexcept { return t1 && t2 && t3; }
};
AxiomCheck check_topology_axioms(const SetFamily &family);

} // namespace rtop

#endif // RTOP_TOPOLOGY_HPP
