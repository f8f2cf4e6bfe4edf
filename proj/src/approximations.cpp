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

#include "rtop/approximations.hpp"

#include <vector>

namespace rtop {

std::string_view to_string(Operator op) noexcept
{
	switch (op) {
	case Operator::zhu: return "zhu";
	case Operator::xu_zhang: return "xu-zhang";
	case Operator::yao3: return "yao3";
	case Operator::yao4: return "yao4";
	case Operator::topo: return "topo";
	}
	return "?";
}

std::string_view to_string(Side side) noexcept
{
	return side == Side::lower ? "lower" : "upper";
}

std::optional<Operator> parse_operator(std::string_view text) noexcept
{
	if (text == "zhu")
		return Operator::zhu;
	if (text == "xu-zhang" || text == "xu_zhang")
		return Operator::xu_zhang;
	if (text == "yao3")
		return Operator::yao3;
	if (text == "yao4")
		return Operator::yao4;
	if (text == "topo")
		return Operator::topo;
	return std::nullopt;
}

std::optional<Side> parse_side(std::string_view text) noexcept
{
	if (text == "lower")
		return Side::lower;
	if (text == "upper")
		return Side::upper;
	return std::nullopt;
}

Subset zhu_lower(const Covering &c, const Subset &x)
{
	require_same_universe(c.universe(), x.universe());
	Subset out = Subset::empty(c.universe());
	for (const auto &k : c.members())
		if (k.is_subset_of(x))
			out |= k;
	return out;
}

Subset zhu_upper(const Covering &c, const Subset &x)
{
	const Subset lower = zhu_lower(c, x);
	Subset out = lower;
	(x - lower).for_each([&](std::size_t e) { out |= neighborhood(c, e); });
	return out;
}

Subset xu_zhang_lower(const Covering &c, const Subset &x)
{
	require_same_universe(c.universe(), x.universe());
	const auto nbhds = neighborhoods(c);
	Subset out = Subset::empty(c.universe());
	for (std::size_t e = 0; e < nbhds.size(); ++e)
		if (nbhds[e].is_subset_of(x))
			out.insert(e);
	return out;
}

Subset xu_zhang_upper(const Covering &c, const Subset &x)
{
	require_same_universe(c.universe(), x.universe());
	const auto nbhds = neighborhoods(c);
	Subset out = Subset::empty(c.universe());
	for (std::size_t e = 0; e < nbhds.size(); ++e)
		if (nbhds[e].intersects(x))
			out.insert(e);
	return out;
}

Subset yao3_lower(const BinaryRelation &rel, const Subset &x)
{
	require_same_universe(rel.universe(), x.universe());
	Subset out = Subset::empty(rel.universe());
	for (const auto &r : rel.rights())
		if (r.is_subset_of(x))
			out |= r;
	return out;
}

Subset yao3_upper(const BinaryRelation &rel, const Subset &x)
{
	return complement(yao3_lower(rel, complement(x)));
}

Subset yao4_lower(const BinaryRelation &rel, const Subset &x)
{
	require_same_universe(rel.universe(), x.universe());
	Subset out = Subset::empty(rel.universe());
	for (std::size_t e = 0; e < rel.size(); ++e)
		if (rel.rights()[e].is_subset_of(x))
			out.insert(e);
	return out;
}

Subset yao4_upper(const BinaryRelation &rel, const Subset &x)
{
	require_same_universe(rel.universe(), x.universe());
	Subset out = Subset::empty(rel.universe());
	for (std::size_t e = 0; e < rel.size(); ++e)
		if (rel.rights()[e].intersects(x))
			out.insert(e);
	return out;
}

Subset topo_lower(const Topology &t, const Subset &x)
{
	return interior(t, x);
}

Subset topo_upper(const Topology &t, const Subset &x)
{
	return closure(t, x);
}

namespace {

[[noreturn]] void wrong_structure(Operator op, const char *given)
{
	throw InvalidStructure("operator '" + std::string(to_string(op)) + "' cannot be evaluated on a " + given);
}

} // namespace

ApproxResult approximate(Operator op, const Covering &c, const Subset &x)
{
	switch (op) {
	case Operator::zhu: return {op, x, zhu_lower(c, x), zhu_upper(c, x)};
	case Operator::xu_zhang: return {op, x, xu_zhang_lower(c, x), xu_zhang_upper(c, x)};
	default: wrong_structure(op, "covering");
	}
}

ApproxResult approximate(Operator op, const BinaryRelation &rel, const Subset &x)
{
	switch (op) {
	case Operator::yao3: return {op, x, yao3_lower(rel, x), yao3_upper(rel, x)};
	case Operator::yao4: return {op, x, yao4_lower(rel, x), yao4_upper(rel, x)};
	default: wrong_structure(op, "relation");
	}
}

ApproxResult approximate(Operator op, const Topology &t, const Subset &x)
{
	if (op != Operator::topo)
		wrong_structure(op, "topology");
	return {op, x, topo_lower(t, x), topo_upper(t, x)};
}

SetFamily family_G(const BinaryRelation &rel)
{
	std::vector<Subset> members;
	for (const Subset x : enumerate_powerset(rel.universe()))
		if (yao4_upper(rel, x).empty())
			members.push_back(x);
	return SetFamily(rel.universe(), std::move(members));
}

SetFamily family_H(const BinaryRelation &rel)
{
	std::vector<Subset> members;
	for (const Subset y : enumerate_powerset(rel.universe()))
		members.push_back(yao4_upper(rel, y));
	return SetFamily(rel.universe(), std::move(members));
}

} // namespace rtop
