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

#ifndef RTOP_INFOSYSTEM_HPP
#define RTOP_INFOSYSTEM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rtop/core_sets.hpp"
#include "rtop/coverings.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace rtop {

/** Sorted, deduplicated set of opaque value labels. */
using ValueSet = std::vector<std::string>;

struct Attribute {
	std::string name;
	/** One value set per object, indexed like the object universe. */
	std::vector<ValueSet> values;
};

/**
 * Objects described by set-valued attributes. A single-valued attribute is
 * a singleton value set per object.
 */
class InformationSystem {
public:
	/**
	 * Throws InvalidStructure on duplicate attribute names, a value table
	 * whose length is not |objects|, or an empty value set.
	 */
	InformationSystem(UniverseRef objects, std::vector<Attribute> attributes);

	const UniverseRef &objects() const noexcept { return objects_; }
	const std::vector<Attribute> &attributes() const noexcept { return attributes_; }
	std::vector<std::string> attribute_names() const;
	/** Throws UnknownElement for an unknown attribute name. */
	const Attribute &attribute(std::string_view name) const;

private:
	UniverseRef objects_;
	std::vector<Attribute> attributes_;
};

/** x R_a y iff a(x) and a(y) share a value. */
BinaryRelation relation_for_attribute(const InformationSystem &is, std::string_view attr);
Subbase attribute_subbase(const InformationSystem &is, std::string_view attr);
Topology attribute_topology(const InformationSystem &is, std::string_view attr);
Covering attribute_covering(const InformationSystem &is, std::string_view attr);

/** Topology generated by the union of the subbases of `attrs` (non-empty). */
Topology combined_topology(const InformationSystem &is, const std::vector<std::string> &attrs);

} // namespace rtop

#endif // RTOP_INFOSYSTEM_HPP
