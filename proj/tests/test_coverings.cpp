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

#include "support.hpp"

using namespace rtop;
using support::labels;
using support::to_brute;

TEST_CASE("covering validation")
{
	auto u = Universe::numbered(3);
	CHECK_THROWS_AS(Covering(SetFamily(u, {Subset::of(u, {0, 1})})), InvalidStructure);
	CHECK_THROWS_AS(Covering(SetFamily(u, {Subset::full(u), Subset::empty(u)})), InvalidStructure);
	CHECK_NOTHROW(Covering(SetFamily(u, {Subset::of(u, {0, 1}), Subset::of(u, {2})})));
}

TEST_CASE("minimal description on the four-point topology")
{
	support::PaperSpace p;
	auto md_c = minimal_description(p.cover, p.u->index_of("c"));
	REQUIRE(md_c.size() == 1);
	CHECK(md_c[0] == labels(p.u, {"c", "d"}));
	auto md_a = minimal_description(p.cover, p.u->index_of("a"));
	REQUIRE(md_a.size() == 1);
	CHECK(md_a[0].is_full());
	CHECK(is_unary(p.cover));
}

TEST_CASE("a non-unary covering")
{
	auto u = Universe::numbered(3);
	Covering c(SetFamily(u, {Subset::of(u, {0, 1}), Subset::of(u, {1, 2}), Subset::full(u)}));
	CHECK_FALSE(is_unary(c));
	CHECK(minimal_description(c, 1) == SetFamily(u, {Subset::of(u, {0, 1}), Subset::of(u, {1, 2})}));
	CHECK(neighborhood(c, 1) == Subset::of(u, {1}));
}

TEST_CASE("covering from a preorder")
{
	support::PaperSpace p;
	auto c = covering_from_relation(p.rel);
	CHECK(c.members() == SetFamily(p.u, {Subset::full(p.u), labels(p.u, {"c", "d"}), labels(p.u, {"d"})}));
	auto u = Universe::numbered(2);
	CHECK_THROWS_AS(covering_from_relation(BinaryRelation::from_pairs(u, {{0, 1}})), InvalidStructure);
}

TEST_CASE("neighbourhood transform on the four-point topology")
{
	support::PaperSpace p;
	auto f = neighborhood_transform(p.cover);
	CHECK(f.members() == SetFamily(p.u, {Subset::full(p.u), labels(p.u, {"c", "d"}), labels(p.u, {"d"})}));
	CHECK_FALSE(check_topology_axioms(f.members()).t1);
	CHECK(check_topology_axioms(f.members().with(Subset::empty(p.u))).all());
}

TEST_CASE("property: Md, N and F against brute force")
{
	std::mt19937_64 rng(21);
	for (int trial = 0; trial < 300; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 8);
		auto u = Universe::numbered(static_cast<std::size_t>(n));
		const auto bc = brute::random_cover(rng, n);
		const Covering c = support::covering_of(u, bc);
		bool unary = true;
		brute::Family fc;
		for (int x = 0; x < n; ++x) {
			const auto md = brute::Md(bc, x);
			unary = unary && md.size() == 1;
			CHECK(to_brute(minimal_description(c, static_cast<std::size_t>(x))) == md);
			CHECK(to_brute(neighborhood(c, static_cast<std::size_t>(x))) == brute::N(n, bc, x));
			fc.push_back(brute::N(n, bc, x));
		}
		CHECK(is_unary(c) == unary);
		const Covering f = neighborhood_transform(c);
		CHECK(to_brute(f.members()) == brute::dedup(fc));
		// F is idempotent and keeps the neighbourhoods.
		CHECK(neighborhood_transform(f) == f);
		CHECK(neighborhoods(f) == neighborhoods(c));
		// Round trip through the induced preorder.
		CHECK(covering_from_relation(relation_from_covering(c)) == f);
	}
}
