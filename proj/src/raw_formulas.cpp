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

#include "raw_formulas.hpp"

#include <algorithm>
#include <iterator>

#include "rtop/errors.hpp"

namespace rtop::verify::raw {

namespace {

Family dedup(Family f)
{
	std::sort(f.begin(), f.end());
	f.erase(std::unique(f.begin(), f.end()), f.end());
	return f;
}

Set set_union(const Set &a, const Set &b)
{
	Set out = a;
	out.insert(b.begin(), b.end());
	return out;
}

Set set_intersection(const Set &a, const Set &b)
{
	Set out;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
	return out;
}

Family read_sets(const Space &s, const io::json &sets)
{
	Family out;
	for (const auto &labels : sets)
		out.push_back(labels_to_set(s, labels.get<std::vector<std::string>>()));
	return out;
}

Family relation_from_cover(const Space &s)
{
	Family right(s.n);
	for (std::size_t x = 0; x < s.n; ++x)
		right[x] = nbhd(s, x);
	return right;
}

// Everything obtainable from the generators by repeated binary union and
// intersection, plus the empty set and U.
Family generated_opens(const Space &s, const Family &generators)
{
	Family opens = generators;
	opens.push_back(Set{});
	opens.push_back(universe(s));
	opens = dedup(opens);
	for (bool grew = true; grew;) {
		grew = false;
		const Family snapshot = opens;
		for (const auto &a : snapshot)
			for (const auto &b : snapshot) {
				for (Set c : {set_union(a, b), set_intersection(a, b)}) {
					if (std::find(opens.begin(), opens.end(), c) == opens.end()) {
						opens.push_back(std::move(c));
						grew = true;
					}
				}
			}
	}
	return dedup(opens);
}

} // namespace

Space space_from_structure(const io::json &structure)
{
	Space s;
	s.labels = structure.at("universe").get<std::vector<std::string>>();
	s.n = s.labels.size();
	const std::string kind = structure.at("kind").get<std::string>();
	if (kind == "covering") {
		s.cover = read_sets(s, structure.at("sets"));
		s.right = relation_from_cover(s);
		s.opens = generated_opens(s, s.right);
	} else if (kind == "topology") {
		s.opens = dedup(read_sets(s, structure.at("sets")));
		for (const auto &g : s.opens)
			if (!g.empty())
				s.cover.push_back(g);
		s.right = relation_from_cover(s);
	} else if (kind == "relation") {
		s.right.assign(s.n, Set{});
		for (const auto &p : structure.at("pairs")) {
			const auto xy = p.get<std::vector<std::string>>();
			const Set a = labels_to_set(s, {xy.at(0)});
			const Set b = labels_to_set(s, {xy.at(1)});
			s.right[*a.begin()].insert(*b.begin());
		}
		for (const auto &r : s.right)
			if (!r.empty())
				s.cover.push_back(r);
		s.cover = dedup(s.cover);
		s.opens = generated_opens(s, s.cover);
	} else {
		throw InvalidStructure("unknown structure kind '" + kind + "'");
	}
	return s;
}

Set universe(const Space &s)
{
	Set out;
	for (std::size_t i = 0; i < s.n; ++i)
		out.insert(i);
	return out;
}

Set complement(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t i = 0; i < s.n; ++i)
		if (!x.count(i))
			out.insert(i);
	return out;
}

Set labels_to_set(const Space &s, const std::vector<std::string> &labels)
{
	Set out;
	for (const auto &l : labels) {
		auto it = std::find(s.labels.begin(), s.labels.end(), l);
		if (it == s.labels.end())
			throw UnknownElement("unknown element '" + l + "'");
		out.insert(static_cast<std::size_t>(it - s.labels.begin()));
	}
	return out;
}

std::vector<std::string> set_to_labels(const Space &s, const Set &x)
{
	std::vector<std::string> out;
	for (auto i : x)
		out.push_back(s.labels.at(i));
	return out;
}

bool subset_of(const Set &a, const Set &b)
{
	return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool meets(const Set &a, const Set &b)
{
	return !set_intersection(a, b).empty();
}

// Md(x) = {K | x in K in C and (S in C, x in S, S within K => K = S)}
Family md(const Space &s, std::size_t x)
{
	Family out;
	for (const auto &k : s.cover) {
		if (!k.count(x))
			continue;
		bool minimal = true;
		for (const auto &t : s.cover)
			if (t.count(x) && subset_of(t, k) && t != k)
				minimal = false;
		if (minimal)
			out.push_back(k);
	}
	return dedup(out);
}

// N(x) = intersection of {K in C | x in K}
Set nbhd(const Space &s, std::size_t x)
{
	Set out = universe(s);
	for (const auto &k : s.cover)
		if (k.count(x))
			out = set_intersection(out, k);
	return out;
}

Set left(const Space &s, std::size_t x)
{
	Set out;
	for (std::size_t y = 0; y < s.n; ++y)
		if (s.right[y].count(x))
			out.insert(y);
	return out;
}

Set zhu_lower(const Space &s, const Set &x)
{
	Set out;
	for (const auto &k : s.cover)
		if (subset_of(k, x))
			out = set_union(out, k);
	return out;
}

Set zhu_upper(const Space &s, const Set &x)
{
	const Set lower = zhu_lower(s, x);
	Set out = lower;
	for (auto e : x)
		if (!lower.count(e))
			out = set_union(out, nbhd(s, e));
	return out;
}

namespace {

Set intersection_of(const Space &s, const Family &f)
{
	Set out = universe(s);
	for (const auto &k : f)
		out = set_intersection(out, k);
	return out;
}

} // namespace

Set xu_zhang_lower(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t e = 0; e < s.n; ++e)
		if (subset_of(intersection_of(s, md(s, e)), x))
			out.insert(e);
	return out;
}

Set xu_zhang_upper(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t e = 0; e < s.n; ++e)
		if (meets(intersection_of(s, md(s, e)), x))
			out.insert(e);
	return out;
}

Set yao3_lower(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t e = 0; e < s.n; ++e)
		if (subset_of(s.right[e], x))
			out = set_union(out, s.right[e]);
	return out;
}

Set yao3_upper(const Space &s, const Set &x)
{
	return complement(s, yao3_lower(s, complement(s, x)));
}

Set yao4_lower(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t e = 0; e < s.n; ++e)
		if (subset_of(s.right[e], x))
			out.insert(e);
	return out;
}

Set yao4_upper(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t e = 0; e < s.n; ++e)
		if (meets(s.right[e], x))
			out.insert(e);
	return out;
}

Set yao4_upper_inverse(const Space &s, const Set &x)
{
	Set out;
	for (std::size_t e = 0; e < s.n; ++e)
		if (meets(left(s, e), x))
			out.insert(e);
	return out;
}

Set topo_lower(const Space &s, const Set &x)
{
	Set out;
	for (const auto &g : s.opens)
		if (subset_of(g, x))
			out = set_union(out, g);
	return out;
}

Set topo_upper(const Space &s, const Set &x)
{
	Set out = universe(s);
	for (const auto &g : s.opens) {
		const Set f = complement(s, g);
		if (subset_of(x, f))
			out = set_intersection(out, f);
	}
	return out;
}

bool is_topology(const Space &s, const Family &f)
{
	auto has = [&](const Set &x) { return std::find(f.begin(), f.end(), x) != f.end(); };
	if (!has(Set{}) || !has(universe(s)))
		return false;
	for (const auto &a : f)
		for (const auto &b : f)
			if (!has(set_union(a, b)) || !has(set_intersection(a, b)))
				return false;
	return true;
}

Family transform(const Space &s)
{
	Family out;
	for (std::size_t x = 0; x < s.n; ++x)
		out.push_back(nbhd(s, x));
	return dedup(out);
}

Space with_cover(const Space &s, const Family &cover)
{
	Space out = s;
	out.cover = cover;
	out.right = relation_from_cover(out);
	return out;
}

Set eval(const Space &s, std::string_view expr, const Set &x, const std::optional<Set> &y)
{
	if (expr.starts_with("F:"))
		return eval(with_cover(s, transform(s)), expr.substr(2), x, y);
	if (expr.starts_with("Rcover:")) {
		Family cover;
		for (const auto &r : s.right)
			if (!r.empty())
				cover.push_back(r);
		return eval(with_cover(s, dedup(cover)), expr.substr(7), x, y);
	}
	if (expr == "X")
		return x;
	if (expr == "Y") {
		if (!y)
			throw InvalidStructure("expression uses Y but the witness has none");
		return *y;
	}
	if (expr == "empty")
		return {};
	if (expr == "U")
		return universe(s);

	const auto open = expr.find('(');
	if (open == std::string_view::npos || expr.back() != ')')
		throw InvalidStructure("malformed expression '" + std::string(expr) + "'");
	const std::string_view name = expr.substr(0, open);
	const Set arg = eval(s, expr.substr(open + 1, expr.size() - open - 2), x, y);

	if (name == "zhu_lower")
		return zhu_lower(s, arg);
	if (name == "zhu_upper")
		return zhu_upper(s, arg);
	if (name == "xu_zhang_lower")
		return xu_zhang_lower(s, arg);
	if (name == "xu_zhang_upper")
		return xu_zhang_upper(s, arg);
	if (name == "yao3_lower")
		return yao3_lower(s, arg);
	if (name == "yao3_upper")
		return yao3_upper(s, arg);
	if (name == "yao4_lower")
		return yao4_lower(s, arg);
	if (name == "yao4_upper")
		return yao4_upper(s, arg);
	if (name == "yao4_upper_inverse")
		return yao4_upper_inverse(s, arg);
	if (name == "topo_lower")
		return topo_lower(s, arg);
	if (name == "topo_upper")
		return topo_upper(s, arg);
	if (name == "left_union" || name == "right_union") {
		Set out;
		for (auto e : arg)
			out = set_union(out, name == "left_union" ? left(s, e) : s.right[e]);
		return out;
	}
	throw InvalidStructure("unknown operator '" + std::string(name) + "'");
}

bool eval_predicate(const Space &s, std::string_view expr)
{
	if (expr == "is_topology(F(C))")
		return is_topology(s, transform(s));
	if (expr == "is_topology(F(C)+empty)") {
		Family f = transform(s);
		f.push_back(Set{});
		return is_topology(s, dedup(f));
	}
	throw InvalidStructure("unknown predicate '" + std::string(expr) + "'");
}

} // namespace rtop::verify::raw
