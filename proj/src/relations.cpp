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

#include "rtop/relations.hpp"

#include "rtop/coverings.hpp"

namespace rtop {

BinaryRelation::BinaryRelation(UniverseRef u, std::vector<Subset> right_nbhds)
	: universe_(std::move(u)), right_(std::move(right_nbhds))
{
	if (!universe_)
		throw InvalidStructure("relation requires a universe");
	if (right_.size() != universe_->size())
		throw InvalidStructure("relation needs exactly one right neighbourhood per element");
	for (const auto &r : right_)
		require_same_universe(universe_, r.universe());
}

BinaryRelation BinaryRelation::identity(const UniverseRef &u)
{
	std::vector<Subset> rows;
	rows.reserve(u->size());
	for (std::size_t x = 0; x < u->size(); ++x)
		rows.push_back(Subset::of(u, {x}));
	return BinaryRelation(u, std::move(rows));
}

BinaryRelation BinaryRelation::full(const UniverseRef &u)
{
	return BinaryRelation(u, std::vector<Subset>(u->size(), Subset::full(u)));
}

BinaryRelation BinaryRelation::from_pairs(const UniverseRef &u,
                                          const std::vector<std::pair<std::size_t, std::size_t>> &pairs)
{
	std::vector<Subset> rows(u->size(), Subset::empty(u));
	for (const auto &[x, y] : pairs) {
		if (x >= u->size())
			throw UnknownElement("element index " + std::to_string(x) + " out of range");
		rows[x].insert(y);
	}
	return BinaryRelation(u, std::move(rows));
}

const Subset &BinaryRelation::right(std::size_t x) const
{
	if (x >= right_.size())
		throw UnknownElement("element index " + std::to_string(x) + " out of range");
	return right_[x];
}

bool BinaryRelation::related(std::size_t x, std::size_t y) const
{
	return right(x).contains(y);
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const
{
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t x = 0; x < right_.size(); ++x)
		right_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
	return out;
}

bool operator==(const BinaryRelation &a, const BinaryRelation &b)
{
	return same_universe(a.universe_, b.universe_) && a.right_ == b.right_;
}

Subset left_nbhd(const BinaryRelation &rel, std::size_t x)
{
	Subset out = Subset::empty(rel.universe());
	if (x >= rel.size())
		throw UnknownElement("element index " + std::to_string(x) + " out of range");
	for (std::size_t y = 0; y < rel.size(); ++y)
		if (rel.rights()[y].contains(x))
			out.insert(y);
	return out;
}

const Subset &right_nbhd(const BinaryRelation &rel, std::size_t x)
{
	return rel.right(x);
}

bool is_reflexive(const BinaryRelation &rel)
{
	for (std::size_t x = 0; x < rel.size(); ++x)
		if (!rel.rights()[x].contains(x))
			return false;
	return true;
}

bool is_symmetric(const BinaryRelation &rel)
{
	for (std::size_t x = 0; x < rel.size(); ++x) {
		bool ok = true;
		rel.rights()[x].for_each([&](std::size_t y) { ok = ok && rel.rights()[y].contains(x); });
		if (!ok)
			return false;
	}
	return true;
}

bool is_transitive(const BinaryRelation &rel)
{
	// x R y implies r(y) is a subset of r(x)
	for (std::size_t x = 0; x < rel.size(); ++x) {
		const Subset &rx = rel.rights()[x];
		bool ok = true;
		rx.for_each([&](std::size_t y) { ok = ok && rel.rights()[y].is_subset_of(rx); });
		if (!ok)
			return false;
	}
	return true;
}

bool is_equivalence(const BinaryRelation &rel)
{
	return is_reflexive(rel) && is_symmetric(rel) && is_transitive(rel);
}

bool is_preorder(const BinaryRelation &rel)
{
	return is_reflexive(rel) && is_transitive(rel);
}

BinaryRelation inverse(const BinaryRelation &rel)
{
	std::vector<Subset> rows(rel.size(), Subset::empty(rel.universe()));
	for (std::size_t x = 0; x < rel.size(); ++x)
		rel.rights()[x].for_each([&](std::size_t y) { rows[y].insert(x); });
	return BinaryRelation(rel.universe(), std::move(rows));
}

BinaryRelation relation_from_covering(const Covering &c)
{
	return BinaryRelation(c.universe(), neighborhoods(c));
}

} // namespace rtop
