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

#include "rtop/coverings.hpp"

namespace rtop {

Covering::Covering(SetFamily members) : members_(std::move(members))
{
	const auto &u = members_.universe();
	Subset covered = Subset::empty(u);
	for (const auto &k : members_) {
		if (k.empty())
			throw InvalidStructure("a cover may not contain the empty set");
		covered |= k;
	}
	if (!covered.is_full()) {
		const auto missing = complement(covered).labels();
		throw InvalidStructure("members do not cover element '" + missing.front() + "'");
	}
}

Covering covering_from_topology(const Topology &t, std::size_t max_opens)
{
	return Covering(t.opens(max_opens).without(Subset::empty(t.universe())));
}

SetFamily minimal_description(const Covering &c, std::size_t x)
{
	const auto &u = c.universe();
	if (x >= u->size())
		throw UnknownElement("element index " + std::to_string(x) + " out of range");
	std::vector<Subset> holders;
	for (const auto &k : c.members())
		if (k.contains(x))
			holders.push_back(k);
	std::vector<Subset> minimal;
	for (const auto &k : holders) {
		bool is_min = true;
		for (const auto &s : holders)
			if (s != k && s.is_subset_of(k)) {
				is_min = false;
				break;
			}
		if (is_min)
			minimal.push_back(k);
	}
	return SetFamily(u, std::move(minimal));
}

Subset neighborhood(const Covering &c, std::size_t x)
{
	const auto &u = c.universe();
	if (x >= u->size())
		throw UnknownElement("element index " + std::to_string(x) + " out of range");
	Subset n = Subset::full(u);
	for (const auto &k : c.members())
		if (k.contains(x))
			n &= k;
	return n;
}

std::vector<Subset> neighborhoods(const Covering &c)
{
	const auto &u = c.universe();
	std::vector<Subset> out(u->size(), Subset::full(u));
	for (const auto &k : c.members())
		k.for_each([&](std::size_t x) { out[x] &= k; });
	return out;
}

bool is_unary(const Covering &c)
{
	for (std::size_t x = 0; x < c.universe()->size(); ++x)
		if (minimal_description(c, x).size() != 1)
			return false;
	return true;
}

Covering neighborhood_transform(const Covering &c)
{
	return Covering(SetFamily(c.universe(), neighborhoods(c)));
}

Covering covering_from_relation(const BinaryRelation &rel)
{
	if (!is_preorder(rel))
		throw InvalidStructure("covering_from_relation needs a reflexive and transitive relation");
	return Covering(SetFamily(rel.universe(), rel.rights()));
}

} // namespace rtop
