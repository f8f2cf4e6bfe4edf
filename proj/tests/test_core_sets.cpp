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

#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "support.hpp"

using namespace rtop;
using support::labels;
using support::to_brute;
using support::to_engine;

TEST_CASE("universe rejects empty, duplicate and oversized label lists")
{
	CHECK_THROWS_AS(Universe::create({}), InvalidStructure);
	CHECK_THROWS_AS(Universe::create({"a", "b", "a"}), InvalidStructure);
	std::vector<std::string> big;
	for (std::size_t i = 0; i <= kMaxUniverseSize; ++i)
		big.push_back("e" + std::to_string(i));
	CHECK_THROWS_AS(Universe::create(big), CapExceeded);
	big.pop_back();
	CHECK(Universe::create(big)->size() == kMaxUniverseSize);
}

TEST_CASE("universe lookup by label")
{
	auto u = Universe::create({"a", "b", "c"});
	CHECK(u->index_of("c") == 2);
	CHECK(u->label(1) == "b");
	CHECK(u->contains("a"));
	CHECK_FALSE(u->contains("z"));
	CHECK_THROWS_AS(u->index_of("z"), UnknownElement);
	CHECK(Universe::numbered(3)->labels() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("subset operations against reference sets")
{
	auto u = Universe::create({"a", "b", "c", "d"});
	const Subset x = labels(u, {"a", "b"});
	const Subset y = labels(u, {"b", "c"});
	CHECK((x | y) == labels(u, {"a", "b", "c"}));
	CHECK((x & y) == labels(u, {"b"}));
	CHECK((x - y) == labels(u, {"a"}));
	CHECK(complement(x) == labels(u, {"c", "d"}));
	CHECK(~Subset::empty(u) == Subset::full(u));
	CHECK(x.count() == 2);
	CHECK(x.labels() == std::vector<std::string>{"a", "b"});
	CHECK(labels(u, {"b"}).is_subset_of(x));
	CHECK_FALSE(x.is_subset_of(y));
	CHECK(x.intersects(y));
	CHECK_FALSE(x.intersects(labels(u, {"d"})));
	CHECK(Subset::full(u).is_full());
	CHECK(Subset::empty(u).empty());
}

TEST_CASE("subset mutation and bounds")
{
	auto u = Universe::numbered(3);
	Subset s = Subset::empty(u);
	s.insert(2);
	s.insert(0);
	CHECK(s.indices() == std::vector<std::size_t>{0, 2});
	s.erase(0);
	CHECK(s.indices() == std::vector<std::size_t>{2});
	CHECK_THROWS_AS(s.insert(3), UnknownElement);
	CHECK_THROWS_AS(s.contains(7), UnknownElement);
	CHECK_THROWS_AS(Subset::from_word(u, 0b1000), InvalidStructure);
}

TEST_CASE("operands from different universes are rejected")
{
	auto u = Universe::create({"a", "b"});
	auto v = Universe::create({"a", "c"});
	auto w = Universe::create({"a", "b"});
	CHECK_THROWS_AS(Subset::full(u) | Subset::full(v), UniverseMismatch);
	CHECK_THROWS_AS((void)Subset::full(u).is_subset_of(Subset::full(v)), UniverseMismatch);
	// Same label sequence counts as the same universe.
	CHECK((Subset::full(u) & Subset::full(w)).count() == 2);
}

TEST_CASE("canonical order is ascending bit pattern")
{
	auto u = Universe::numbered(3);
	std::vector<Subset> all;
	for (Subset s : enumerate_powerset(u))
		all.push_back(s);
	REQUIRE(all.size() == 8);
	for (std::size_t i = 0; i + 1 < all.size(); ++i)
		CHECK(all[i] < all[i + 1]);
	CHECK(all[3] == Subset::of(u, {0, 1}));
	CHECK(all[4] == Subset::of(u, {2}));
}

TEST_CASE("powerset enumeration cap")
{
	CHECK(enumerate_powerset(Universe::numbered(20)).size() == (std::uint64_t{1} << 20));
	CHECK_THROWS_AS(enumerate_powerset(Universe::numbered(21)), CapExceeded);
}

TEST_CASE("multi-word subsets beyond 64 elements")
{
	auto u = Universe::numbered(150);
	Subset a = Subset::of(u, {0, 63, 64, 149});
	Subset b = Subset::of(u, {64, 100});
	CHECK((a & b) == Subset::of(u, {64}));
	CHECK((a | b).count() == 5);
	CHECK(complement(a).count() == 146);
	CHECK(complement(complement(a)) == a);
	CHECK(Subset::full(u).count() == 150);
	CHECK(Subset::full(u).is_full());
	CHECK(Subset::of(u, {0}) < Subset::of(u, {149}));
	CHECK(a.indices() == std::vector<std::size_t>{0, 63, 64, 149});
	CHECK_THROWS_AS(Subset::from_word(u, 1), InvalidStructure);
}

TEST_CASE("union_of and intersection_of conventions")
{
	auto u = Universe::numbered(4);
	CHECK(union_of(u, {}).empty());
	CHECK(intersection_of(u, {}).is_full());
	std::vector<Subset> xs{Subset::of(u, {0, 1}), Subset::of(u, {1, 2})};
	CHECK(union_of(u, xs) == Subset::of(u, {0, 1, 2}));
	CHECK(intersection_of(u, xs) == Subset::of(u, {1}));
}

TEST_CASE("set family is deduplicated and canonically ordered")
{
	auto u = Universe::numbered(3);
	SetFamily f(u, {Subset::of(u, {2}), Subset::of(u, {0}), Subset::of(u, {2}), Subset::empty(u)});
	REQUIRE(f.size() == 3);
	CHECK(f[0].empty());
	CHECK(f[1] == Subset::of(u, {0}));
	CHECK(f[2] == Subset::of(u, {2}));
	CHECK(f.contains(Subset::of(u, {0})));
	CHECK_FALSE(f.contains(Subset::of(u, {1})));
	CHECK(f.with(Subset::of(u, {1})).size() == 4);
	CHECK(f.with(Subset::of(u, {0})) == f);
	CHECK(f.without(Subset::empty(u)).size() == 2);
}

TEST_CASE("hash agrees with equality")
{
	auto u = Universe::numbered(8);
	std::unordered_set<Subset, SubsetHash> seen;
	for (Subset s : enumerate_powerset(u))
		seen.insert(s);
	for (Subset s : enumerate_powerset(u))
		seen.insert(s);
	CHECK(seen.size() == 256);
}

TEST_CASE("property: boolean algebra laws match reference sets")
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 300; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 70);
		auto u = Universe::numbered(static_cast<std::size_t>(n));
		auto draw = [&] {
			brute::Set s;
			for (int i = 0; i < n; ++i)
				if (rng() % 2)
					s.insert(i);
			return s;
		};
		const brute::Set bx = draw(), by = draw();
		const Subset x = to_engine(u, bx), y = to_engine(u, by);
		CHECK(to_brute(x | y) == brute::unite(bx, by));
		CHECK(to_brute(x & y) == brute::meet(bx, by));
		CHECK(to_brute(complement(x)) == brute::comp(n, bx));
		CHECK(x.is_subset_of(y) == brute::sub(bx, by));
		CHECK(x.intersects(y) == brute::meets(bx, by));
		// De Morgan and involution.
		CHECK(complement(x | y) == (complement(x) & complement(y)));
		CHECK(complement(x & y) == (complement(x) | complement(y)));
		CHECK(complement(complement(x)) == x);
		CHECK(x.count() == bx.size());
		CHECK((x < y) == (x != y && !(y < x)));
	}
}
