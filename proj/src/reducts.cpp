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

#include "rtop/reducts.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace rtop {

RelationFamily::RelationFamily(UniverseRef u, std::vector<NamedRelation> relations)
	: universe_(std::move(u)), relations_(std::move(relations))
{
	std::set<std::string> seen;
	for (const auto &r : relations_) {
		if (r.name.empty())
			throw InvalidStructure("relation names must be non-empty");
		if (!seen.insert(r.name).second)
			throw InvalidStructure("duplicate relation name '" + r.name + "'");
		require_same_universe(universe_, r.relation.universe());
	}
}

RelationFamily RelationFamily::from_information_system(const InformationSystem &is)
{
	std::vector<NamedRelation> rels;
	for (const auto &a : is.attributes())
		rels.push_back({a.name, relation_for_attribute(is, a.name)});
	return RelationFamily(is.objects(), std::move(rels));
}

std::vector<std::string> RelationFamily::names() const
{
	std::vector<std::string> out;
	for (const auto &r : relations_)
		out.push_back(r.name);
	return out;
}

const BinaryRelation &RelationFamily::relation(std::string_view name) const
{
	for (const auto &r : relations_)
		if (r.name == name)
			return r.relation;
	throw UnknownElement("unknown relation '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> canonical_names(const RelationFamily &fam, const std::vector<std::string> &names)
{
	std::vector<std::string> out = names;
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	for (const auto &n : out)
		(void)fam.relation(n);
	return out;
}

Topology topology_of(const std::vector<Subbase> &subbases, std::uint32_t mask, const UniverseRef &u)
{
	Subbase acc(SetFamily{u});
	for (std::size_t i = 0; i < subbases.size(); ++i)
		if (mask & (std::uint32_t{1} << i))
			acc = acc.merged(subbases[i]);
	return generate_from_subbase(acc);
}

} // namespace

Topology family_topology(const RelationFamily &fam, const std::vector<std::string> &names)
{
	if (names.empty())
		throw InvalidStructure("a relation family topology needs at least one relation");
	Subbase acc(SetFamily{fam.universe()});
	for (const auto &n : names)
		acc = acc.merged(subbase_from_relation(fam.relation(n)));
	return generate_from_subbase(acc);
}

bool is_superfluous(const RelationFamily &fam, const std::vector<std::string> &names, std::string_view name)
{
	const auto p = canonical_names(fam, names);
	if (std::find(p.begin(), p.end(), name) == p.end())
		throw InvalidStructure("relation '" + std::string(name) + "' is not in the queried family");
	if (p.size() < 2)
		throw InvalidStructure("superfluity needs a family of at least two relations");
	std::vector<std::string> rest;
	for (const auto &n : p)
		if (n != name)
			rest.push_back(n);
	return topologies_equal(family_topology(fam, p), family_topology(fam, rest));
}

ReductReport minimal_reducts(const RelationFamily &fam, const std::vector<std::string> &names)
{
	const auto p = canonical_names(fam, names);
	if (p.empty())
		throw InvalidStructure("reduct search needs at least one relation");
	if (p.size() > kMaxReductFamily)
		throw CapExceeded("reduct search is limited to " + std::to_string(kMaxReductFamily) +
		                  " relations, got " + std::to_string(p.size()));

	const auto &u = fam.universe();
	std::vector<Subbase> subbases;
	for (const auto &n : p)
		subbases.push_back(subbase_from_relation(fam.relation(n)));

	const std::size_t k = p.size();
	const std::uint32_t all = (std::uint32_t{1} << k) - 1;
	const Topology reference = topology_of(subbases, all, u);

	ReductReport report;
	report.family = p;
	report.reference_min_nbhds = reference.min_nbhds();

	if (k >= 2)
		for (std::size_t i = 0; i < k; ++i)
			if (topologies_equal(reference, topology_of(subbases, all & ~(std::uint32_t{1} << i), u)))
				report.superfluous.push_back(p[i]);

	std::vector<std::uint32_t> found;
	for (std::size_t size = 1; size <= k; ++size) {
		// masks of this popcount in increasing order
		for (std::uint32_t mask = 1; mask <= all; ++mask) {
			if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
				continue;
			const bool dominated = std::any_of(found.begin(), found.end(),
			                                   [&](std::uint32_t r) { return (mask & r) == r; });
			if (dominated)
				continue;
			if (topologies_equal(reference, topology_of(subbases, mask, u)))
				found.push_back(mask);
		}
	}

	for (auto mask : found) {
		std::vector<std::string> reduct;
		for (std::size_t i = 0; i < k; ++i)
			if (mask & (std::uint32_t{1} << i))
				reduct.push_back(p[i]);
		report.reducts.push_back(std::move(reduct));
	}
	std::sort(report.reducts.begin(), report.reducts.end(), [](const auto &a, const auto &b) {
		return a.size() != b.size() ? a.size() < b.size() : a < b;
	});
	return report;
}

} // namespace rtop
