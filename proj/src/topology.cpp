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

#include "rtop/topology.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <unordered_set>

namespace rtop {

// Subbase

Subbase::Subbase(SetFamily members, std::vector<std::size_t> empty_rows)
	: members_(std::move(members)), empty_rows_(std::move(empty_rows))
{
	const Subset none = Subset::empty(members_.universe());
	if (members_.contains(none))
		members_ = members_.without(none);
	std::sort(empty_rows_.begin(), empty_rows_.end());
	empty_rows_.erase(std::unique(empty_rows_.begin(), empty_rows_.end()), empty_rows_.end());
}

Subbase Subbase::merged(const Subbase &other) const
{
	require_same_universe(universe(), other.universe());
	std::vector<Subset> all = members_.members();
	all.insert(all.end(), other.members_.begin(), other.members_.end());
	std::vector<std::size_t> rows = empty_rows_;
	rows.insert(rows.end(), other.empty_rows_.begin(), other.empty_rows_.end());
	return Subbase(SetFamily(universe(), std::move(all)), std::move(rows));
}

// Topology

struct Topology::Cache {
	std::mutex mutex;
	std::optional<SetFamily> opens;
};

Topology::Topology(UniverseRef u, std::vector<Subset> min_nbhds)
	: universe_(std::move(u)), min_nbhd_(std::move(min_nbhds)), cache_(std::make_shared<Cache>())
{
}

Topology Topology::from_min_nbhds(UniverseRef u, std::vector<Subset> min_nbhds)
{
	if (min_nbhds.size() != u->size())
		throw InvalidStructure("topology needs exactly one minimal neighbourhood per element");
	for (std::size_t x = 0; x < min_nbhds.size(); ++x) {
		require_same_universe(u, min_nbhds[x].universe());
		if (!min_nbhds[x].contains(x))
			throw InvalidStructure("minimal neighbourhood of '" + u->label(x) + "' does not contain it");
	}
	for (std::size_t x = 0; x < min_nbhds.size(); ++x) {
		bool ok = true;
		min_nbhds[x].for_each([&](std::size_t y) { ok = ok && min_nbhds[y].is_subset_of(min_nbhds[x]); });
		if (!ok)
			throw InvalidStructure("minimal neighbourhoods are not consistent with a preorder");
	}
	return Topology(std::move(u), std::move(min_nbhds));
}

Topology Topology::from_opens(const SetFamily &opens)
{
	const auto &u = opens.universe();
	const AxiomCheck axioms = check_topology_axioms(opens);
	if (!axioms.all())
		throw InvalidStructure(std::string("family is not a topology (fails") + (axioms.t1 ? "" : " T1") +
		                       (axioms.t2 ? "" : " T2") + (axioms.t3 ? "" : " T3") + ")");
	std::vector<Subset> nbhds(u->size(), Subset::full(u));
	for (const auto &g : opens)
		g.for_each([&](std::size_t x) { nbhds[x] &= g; });
	Topology t = from_min_nbhds(u, std::move(nbhds));
	t.cache_->opens = opens;
	return t;
}

Topology Topology::discrete(const UniverseRef &u)
{
	std::vector<Subset> nbhds;
	for (std::size_t x = 0; x < u->size(); ++x)
		nbhds.push_back(Subset::of(u, {x}));
	return Topology(u, std::move(nbhds));
}

Topology Topology::indiscrete(const UniverseRef &u)
{
	return Topology(u, std::vector<Subset>(u->size(), Subset::full(u)));
}

const Subset &Topology::min_nbhd(std::size_t x) const
{
	if (x >= min_nbhd_.size())
		throw UnknownElement("element index " + std::to_string(x) + " out of range");
	return min_nbhd_[x];
}

bool Topology::is_open(const Subset &g) const
{
	require_same_universe(universe_, g.universe());
	bool ok = true;
	g.for_each([&](std::size_t x) { ok = ok && min_nbhd_[x].is_subset_of(g); });
	return ok;
}

bool Topology::is_closed(const Subset &f) const
{
	return is_open(complement(f));
}

const SetFamily &Topology::opens(std::size_t max_opens) const
{
	std::lock_guard lock(cache_->mutex);
	if (cache_->opens) {
		if (cache_->opens->size() > max_opens)
			throw CapExceeded("topology has " + std::to_string(cache_->opens->size()) +
			                  " open sets; the cap is " + std::to_string(max_opens));
		return *cache_->opens;
	}

	std::vector<Subset> distinct = min_nbhd_;
	std::sort(distinct.begin(), distinct.end());
	distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

	std::unordered_set<Subset, SubsetHash> seen{Subset::empty(universe_)};
	std::vector<Subset> all{Subset::empty(universe_)};
	for (const auto &n : distinct) {
		const std::size_t before = all.size();
		for (std::size_t i = 0; i < before; ++i) {
			Subset g = all[i] | n;
			if (seen.insert(g).second) {
				all.push_back(std::move(g));
				if (all.size() > max_opens)
					throw CapExceeded("topology has more than " + std::to_string(max_opens) +
					                  " open sets");
			}
		}
	}
	cache_->opens.emplace(universe_, std::move(all));
	return *cache_->opens;
}

Topology generate_from_subbase(const Subbase &s)
{
	const auto &u = s.universe();
	std::vector<Subset> nbhds(u->size(), Subset::full(u));
	for (const auto &member : s.members())
		member.for_each([&](std::size_t x) { nbhds[x] &= member; });
	return Topology::from_min_nbhds(u, std::move(nbhds));
}

const SetFamily &materialize_opens(const Topology &t, std::size_t max_opens)
{
	return t.opens(max_opens);
}

Subset interior(const Topology &t, const Subset &x)
{
	require_same_universe(t.universe(), x.universe());
	Subset out = Subset::empty(t.universe());
	for (std::size_t e = 0; e < t.min_nbhds().size(); ++e)
		if (t.min_nbhds()[e].is_subset_of(x))
			out.insert(e);
	return out;
}

Subset closure(const Topology &t, const Subset &x)
{
	require_same_universe(t.universe(), x.universe());
	Subset out = Subset::empty(t.universe());
	for (std::size_t e = 0; e < t.min_nbhds().size(); ++e)
		if (t.min_nbhds()[e].intersects(x))
			out.insert(e);
	return out;
}

Subset boundary(const Topology &t, const Subset &x)
{
	return closure(t, x) - interior(t, x);
}

bool is_exact(const Topology &t, const Subset &x)
{
	return boundary(t, x).empty();
}

bool topologies_equal(const Topology &a, const Topology &b)
{
	require_same_universe(a.universe(), b.universe());
	return std::equal(a.min_nbhds().begin(), a.min_nbhds().end(), b.min_nbhds().begin(), b.min_nbhds().end());
}

Subbase subbase_from_relation(const BinaryRelation &rel)
{
	std::vector<Subset> members;
	std::vector<std::size_t> empty_rows;
	for (std::size_t x = 0; x < rel.size(); ++x) {
		if (rel.rights()[x].empty())
			empty_rows.push_back(x);
		else
			members.push_back(rel.rights()[x]);
	}
	return Subbase(SetFamily(rel.universe(), std::move(members)), std::move(empty_rows));
}

AxiomCheck check_topology_axioms(const SetFamily &family)
{
	const auto &u = family.universe();
	AxiomCheck out;
	out.t1 = family.contains(Subset::empty(u)) && family.contains(Subset::full(u));
	out.t2 = true;
	out.t3 = true;
	const auto &m = family.members();
	for (std::size_t i = 0; i < m.size() && (out.t2 || out.t3); ++i) {
		for (std::size_t j = i + 1; j < m.size(); ++j) {
			if (out.t2 && !family.contains(m[i] | m[j]))
				out.t2 = false;
			if (out.t3 && !family.contains(m[i] & m[j]))
				out.t3 = false;
		}
	}
	return out;
}

} // namespace rtop
