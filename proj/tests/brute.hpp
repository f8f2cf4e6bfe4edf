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

// Brute-force reference implementations for the unit tests. Everything here
// works on std::set<int> straight from the textbook definitions and shares
// no code with the engine.

#ifndef RTOP_TESTS_BRUTE_HPP
#define RTOP_TESTS_BRUTE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace brute {

using Set = std::set<int>;
using Family = std::vector<Set>;

inline Set full(int n)
{
	Set s;
	for (int i = 0; i < n; ++i)
		s.insert(i);
	return s;
}

inline Set from_bits(std::uint64_t bits)
{
	Set s;
	for (int i = 0; bits; ++i, bits >>= 1)
		if (bits & 1)
			s.insert(i);
	return s;
}

inline Family powerset(int n)
{
	Family out;
	for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
		out.push_back(from_bits(b));
	return out;
}

inline bool sub(const Set &a, const Set &b)
{
	return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool meets(const Set &a, const Set &b)
{
	for (int x : a)
		if (b.count(x))
			return true;
	return false;
}

inline Set unite(const Set &a, const Set &b)
{
	Set s = a;
	s.insert(b.begin(), b.end());
	return s;
}

inline Set meet(const Set &a, const Set &b)
{
	Set s;
	for (int x : a)
		if (b.count(x))
			s.insert(x);
	return s;
}

inline Set comp(int n, const Set &a)
{
	Set s;
	for (int i = 0; i < n; ++i)
		if (!a.count(i))
			s.insert(i);
	return s;
}

inline Family dedup(Family f)
{
	std::sort(f.begin(), f.end());
	f.erase(std::unique(f.begin(), f.end()), f.end());
	return f;
}

// Covering side

inline Set N(int n, const Family &cover, int x)
{
	Set s = full(n);
	for (const auto &k : cover)
		if (k.count(x))
			s = meet(s, k);
	return s;
}

inline Family Md(const Family &cover, int x)
{
	Family out;
	for (const auto &k : cover) {
		if (!k.count(x))
			continue;
		bool minimal = true;
		for (const auto &s : cover)
			if (s.count(x) && sub(s, k) && s != k)
				minimal = false;
		if (minimal)
			out.push_back(k);
	}
	return dedup(out);
}

inline Set zhu_lower(const Family &cover, const Set &x)
{
	Set s;
	for (const auto &k : cover)
		if (sub(k, x))
			s = unite(s, k);
	return s;
}

inline Set zhu_upper(int n, const Family &cover, const Set &x)
{
	const Set lo = zhu_lower(cover, x);
	Set s = lo;
	for (int e : x)
		if (!lo.count(e))
			s = unite(s, N(n, cover, e));
	return s;
}

inline Set xz_lower(int n, const Family &cover, const Set &x)
{
	Set s;
	for (int e = 0; e < n; ++e) {
		Set i = full(n);
		for (const auto &k : Md(cover, e))
			i = meet(i, k);
		if (sub(i, x))
			s.insert(e);
	}
	return s;
}

inline Set xz_upper(int n, const Family &cover, const Set &x)
{
	Set s;
	for (int e = 0; e < n; ++e) {
		Set i = full(n);
		for (const auto &k : Md(cover, e))
			i = meet(i, k);
		if (meets(i, x))
			s.insert(e);
	}
	return s;
}

// Relation side: rights[x] = r(x)

inline Set yao3_lower(const Family &rights, const Set &x)
{
	Set s;
	for (const auto &r : rights)
		if (sub(r, x))
			s = unite(s, r);
	return s;
}

inline Set yao3_upper(int n, const Family &rights, const Set &x)
{
	return comp(n, yao3_lower(rights, comp(n, x)));
}

inline Set yao4_lower(const Family &rights, const Set &x)
{
	Set s;
	for (int e = 0; e < static_cast<int>(rights.size()); ++e)
		if (sub(rights[e], x))
			s.insert(e);
	return s;
}

inline Set yao4_upper(const Family &rights, const Set &x)
{
	Set s;
	for (int e = 0; e < static_cast<int>(rights.size()); ++e)
		if (meets(rights[e], x))
			s.insert(e);
	return s;
}

// Topology side

/** Closure of generators under pairwise union and intersection, plus the empty set and U. */
inline Family topology_from(int n, const Family &generators)
{
	std::set<Set> seen;
	Family opens, work;
	auto add = [&](const Set &s) {
		if (seen.insert(s).second) {
			opens.push_back(s);
			work.push_back(s);
		}
	};
	add({});
	add(full(n));
	for (const auto &g : generators)
		add(g);
	while (!work.empty()) {
		const Set a = work.back();
		work.pop_back();
		for (std::size_t i = 0; i < opens.size(); ++i) {
			const Set b = opens[i];
			add(unite(a, b));
			add(meet(a, b));
		}
	}
	return dedup(opens);
}

inline Set interior(const Family &opens, const Set &x)
{
	Set s;
	for (const auto &g : opens)
		if (sub(g, x))
			s = unite(s, g);
	return s;
}

inline Set closure(int n, const Family &opens, const Set &x)
{
	Set s = full(n);
	for (const auto &g : opens) {
		const Set f = comp(n, g);
		if (sub(x, f))
			s = meet(s, f);
	}
	return s;
}

// Reducts: exhaustive search over every subfamily, comparing full open families.

/** Open family generated by the non-empty right neighbourhoods of the chosen relations. */
inline Family family_opens(int n, const std::vector<Family> &relations, std::uint32_t mask)
{
	Family gens;
	for (std::size_t i = 0; i < relations.size(); ++i)
		if (mask & (std::uint32_t{1} << i))
			for (const auto &r : relations[i])
				if (!r.empty())
					gens.push_back(r);
	return topology_from(n, gens);
}

/** Every inclusion-minimal non-empty mask whose topology equals that of all relations. */
inline std::vector<std::uint32_t> minimal_reduct_masks(int n, const std::vector<Family> &relations)
{
	const std::uint32_t all = (std::uint32_t{1} << relations.size()) - 1;
	const Family reference = family_opens(n, relations, all);
	std::vector<std::uint32_t> equal;
	for (std::uint32_t m = 1; m <= all; ++m)
		if (family_opens(n, relations, m) == reference)
			equal.push_back(m);
	std::vector<std::uint32_t> minimal;
	for (auto m : equal) {
		bool has_smaller = false;
		for (auto s : equal)
			if (s != m && (s & m) == s)
				has_smaller = true;
		if (!has_smaller)
			minimal.push_back(m);
	}
	return minimal;
}

// Random structures

inline Family random_cover(std::mt19937_64 &rng, int n)
{
	Family cover;
	const int k = 1 + static_cast<int>(rng() % n);
	Set covered;
	for (int i = 0; i < k; ++i) {
		const Set s = from_bits(1 + rng() % ((std::uint64_t{1} << n) - 1));
		cover.push_back(s);
		covered = unite(covered, s);
	}
	for (int x = 0; x < n; ++x)
		if (!covered.count(x))
			cover.push_back({x});
	return dedup(cover);
}

inline Family random_relation(std::mt19937_64 &rng, int n, int density_percent)
{
	Family rights(n);
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < n; ++y)
			if (static_cast<int>(rng() % 100) < density_percent)
				rights[x].insert(y);
	return rights;
}

inline Family preorder_closure(Family rights)
{
	const int n = static_cast<int>(rights.size());
	for (int x = 0; x < n; ++x)
		rights[x].insert(x);
	for (int k = 0; k < n; ++k)
		for (int i = 0; i < n; ++i)
			if (rights[i].count(k))
				rights[i] = unite(rights[i], rights[k]);
	return rights;
}

} // namespace brute

#endif // RTOP_TESTS_BRUTE_HPP
