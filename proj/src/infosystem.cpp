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

#include "rtop/infosystem.hpp"

#include <algorithm>
#include <set>

namespace rtop {

InformationSystem::InformationSystem(UniverseRef objects, std::vector<Attribute> attributes)
	: objects_(std::move(objects)), attributes_(std::move(attributes))
{
	std::set<std::string> names;
	for (auto &a : attributes_) {
		if (a.name.empty())
			throw InvalidStructure("attribute names must be non-empty");
		if (!names.insert(a.name).second)
			throw InvalidStructure("duplicate attribute '" + a.name + "'");
		if (a.values.size() != objects_->size())
			throw InvalidStructure("attribute '" + a.name + "' must give a value set for every object");
		for (std::size_t x = 0; x < a.values.size(); ++x) {
			auto &vs = a.values[x];
			if (vs.empty())
				throw InvalidStructure("attribute '" + a.name + "' has an empty value set for object '" +
				                       objects_->label(x) + "'");
			std::sort(vs.begin(), vs.end());
			vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
		}
	}
}

std::vector<std::string> InformationSystem::attribute_names() const
{
	std::vector<std::string> out;
	for (const auto &a : attributes_)
		out.push_back(a.name);
	return out;
}

const Attribute &InformationSystem::attribute(std::string_view name) const
{
	for (const auto &a : attributes_)
		if (a.name == name)
			return a;
	throw UnknownElement("unknown attribute '" + std::string(name) + "'");
}

namespace {

bool overlaps(const ValueSet &a, const ValueSet &b)
{
	auto i = a.begin();
	auto j = b.begin();
	while (i != a.end() && j != b.end()) {
		if (*i == *j)
			return true;
		if (*i < *j)
			++i;
		else
			++j;
	}
	return false;
}

} // namespace

BinaryRelation relation_for_attribute(const InformationSystem &is, std::string_view attr)
{
	const Attribute &a = is.attribute(attr);
	const auto &u = is.objects();
	std::vector<Subset> rows(u->size(), Subset::empty(u));
	for (std::size_t x = 0; x < u->size(); ++x)
		for (std::size_t y = 0; y < u->size(); ++y)
			if (overlaps(a.values[x], a.values[y]))
				rows[x].insert(y);
	return BinaryRelation(u, std::move(rows));
}

Subbase attribute_subbase(const InformationSystem &is, std::string_view attr)
{
	return subbase_from_relation(relation_for_attribute(is, attr));
}

Topology attribute_topology(const InformationSystem &is, std::string_view attr)
{
	return generate_from_subbase(attribute_subbase(is, attr));
}

Covering attribute_covering(const InformationSystem &is, std::string_view attr)
{
	const auto rel = relation_for_attribute(is, attr);
	return Covering(SetFamily(rel.universe(), rel.rights()));
}

Topology combined_topology(const InformationSystem &is, const std::vector<std::string> &attrs)
{
	if (attrs.empty())
		throw InvalidStructure("combined topology needs at least one attribute");
	Subbase acc = attribute_subbase(is, attrs.front());
	for (std::size_t i = 1; i < attrs.size(); ++i)
		acc = acc.merged(attribute_subbase(is, attrs[i]));
	return generate_from_subbase(acc);
}

} // namespace rtop
