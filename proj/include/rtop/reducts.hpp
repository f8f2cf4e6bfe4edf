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

#ifndef RTOP_REDUCTS_HPP
#define RTOP_REDUCTS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rtop/core_sets.hpp"
#include "rtop/infosystem.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace rtop {

/** Largest relation family minimal_reducts will search exhaustively. */
inline constexpr std::size_t kMaxReductFamily = 16;

struct NamedRelation {
	std::string name;
	BinaryRelation relation;
};

/** Named binary relations on one universe. */
class RelationFamily {
public:
	/** Throws on duplicate names or mixed universes. */
	RelationFamily(UniverseRef u, std::vector<NamedRelation> relations);

	/** One relation R_a per attribute, named after the attribute. */
	static RelationFamily from_information_system(const InformationSystem &is);

	const UniverseRef &universe() const noexcept { return universe_; }
	const std::vector<NamedRelation> &relations() const noexcept { return relations_; }
	std::vector<std::string> names() const;
	const BinaryRelation &relation(std::string_view name) const;

private:
	UniverseRef universe_;
	std::vector<NamedRelation> relations_;
};

struct ReductReport {
	/** Queried names, sorted. */
	std::vector<std::string> family;
	std::vector<std::string> superfluous;
	/** Every minimal reduct, each sorted, listed by size then lexicographically. */
	std::vector<std::vector<std::string>> reducts;
	/** Minimal neighbourhood of every element in the topology of the full family. */
	std::vector<Subset> reference_min_nbhds;
};

/** Topology generated by the union of the right-neighbourhood subbases of `names`. */
Topology family_topology(const RelationFamily &fam, const std::vector<std::string> &names);

/**
 * True iff removing `name` from `names` leaves the generated topology
 * unchanged. Needs name in names and at least two names.
 */
bool is_superfluous(const RelationFamily &fam, const std::vector<std::string> &names, std::string_view name);

/**
 * All inclusion-minimal subfamilies generating the same topology as `names`,
 * by cardinality-ascending exhaustive search. A minimal subfamily is also
 * irredundant: dropping any one of its members changes the topology.
 */
ReductReport minimal_reducts(const RelationFamily &fam, const std::vector<std::string> &names);

} // namespace rtop

#endif // RTOP_REDUCTS_HPP
