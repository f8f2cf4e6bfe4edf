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
#include <thread>

#include "support.hpp"

using namespace rtop;
using support::labels;
using support::to_brute;
using support::to_engine;

TEST_CASE("topology generated from a subbase")
{
	support::PaperSpace p;
	const auto &opens = materialize_opens(p.tau);
	CHECK(opens == SetFamily(p.u, {Subset::empty(p.u), labels(p.u, {"d"}), labels(p.u, {"c", "d"}),
	                              Subset::full(p.u)}));
	CHECK(p.tau.is_open(labels(p.u, {"c", "d"})));
	CHECK_FALSE(p.tau.is_open(labels(p.u, {"c"})));
	CHECK(p.tau.is_closed(labels(p.u, {"a", "b"})));
}

TEST_CASE("interior, closure and boundary on the four-point topology")
{
	support::PaperSpace p;
	const Subset ab = labels(p.u, {"a", "b"});
	CHECK(interior(p.tau, ab).empty());
	CHECK(closure(p.tau, ab) == ab);
	CHECK(closure(p.tau, labels(p.u, {"d"})).is_full());
	CHECK(boundary(p.tau, ab) == ab);
	CHECK_FALSE(is_exact(p.tau, ab));
	CHECK(is_exact(p.tau, labels(p.u, {"c", "d"})) == false);
	CHECK(is_exact(p.tau, Subset::full(p.u)));
}

TEST_CASE("subbase from a relation generates the same topology")
{
	support::PaperSpace p;
	auto s = subbase_from_relation(p.rel);
	CHECK(s.empty_rows().empty());
	CHECK(topologies_equal(generate_from_subbase(s), p.tau));
}

TEST_CASE("empty right neighbourhoods are excluded and recorded")
{
	auto u = Universe::numbered(2);
	auto s = subbase_from_relation(BinaryRelation::from_pairs(u, {{0, 1}}));
	CHECK(s.empty_rows() == std::vector<std::size_t>{1});
	CHECK(s.members() == SetFamily(u, {Subset::of(u, {1})}));
	auto t = generate_from_subbase(s);
	CHECK(materialize_opens(t).size() == 3);
}

TEST_CASE("from_opens checks the axioms")
{
	auto u = Universe::numbered(3);
	CHECK_THROWS_AS(Topology::from_opens(SetFamily(u, {Subset::full(u)})), InvalidStructure);
	CHECK_THROWS_AS(Topology::from_opens(SetFamily(u, {Subset::empty(u), Subset::full(u), Subset::of(u, {0}),
	                                                   Subset::of(u, {1})})),
	                InvalidStructure);
	auto t = Topology::from_opens(SetFamily(u, {Subset::empty(u), Subset::full(u), Subset::of(u, {0})}));
	CHECK(t.min_nbhd(0) == Subset::of(u, {0}));
	CHECK(t.min_nbhd(2).is_full());
}

TEST_CASE("from_min_nbhds validation")
{
	auto u = Universe::numbered(2);
	CHECK_THROWS_AS(Topology::from_min_nbhds(u, {Subset::of(u, {1}), Subset::full(u)}), InvalidStructure);
	CHECK_NOTHROW(Topology::from_min_nbhds(u, {Subset::full(u), Subset::of(u, {1})}));
	auto v = Universe::numbered(3);
	CHECK_THROWS_AS(Topology::from_min_nbhds(v, {Subset::of(v, {0, 1}), Subset::of(v, {1, 2}), Subset::of(v, {2})}),
	                InvalidStructure);
}

TEST_CASE("discrete and indiscrete")
{
	auto u = Universe::numbered(4);
	CHECK(materialize_opens(Topology::discrete(u)).size() == 16);
	CHECK(materialize_opens(Topology::indiscrete(u)).size() == 2);
	CHECK(generate_from_subbase(Subbase(SetFamily(u))).min_nbhd(0).is_full());
}

TEST_CASE("open-set cap")
{
	auto u = Universe::numbered(20);
	auto t = Topology::discrete(u);
	CHECK_THROWS_AS(materialize_opens(t, 1000), CapExceeded);
	CHECK(interior(t, Subset::of(u, {3, 4})) == Subset::of(u, {3, 4}));
	CHECK(materialize_opens(Topology::discrete(Universe::numbered(10)), 1024).size() == 1024);
}

TEST_CASE("materialized opens are shared safely between threads")
{
	auto u = Universe::numbered(12);
	auto t = Topology::discrete(u);
	std::vector<std::thread> workers;
	std::vector<std::size_t> sizes(8);
	for (std::size_t i = 0; i < sizes.size(); ++i)
		workers.emplace_back([&, i] { sizes[i] = materialize_opens(t).size(); });
	for (auto &w : workers)
		w.join();
	for (auto s : sizes)
		CHECK(s == 4096);
}

namespace {

brute::Family random_subbase(std::mt19937_64 &rng, int n)
{
	brute::Family out;
	const int k = static_cast<int>(rng() % (n + 2));
	for (int i = 0; i < k; ++i)
		out.push_back(brute::from_bits(rng() % (std::uint64_t{1} << n)));
	return out;
}

} // namespace

TEST_CASE("property: generated opens and Kuratowski laws against brute force")
{
	std::mt19937_64 rng(31);
	for (int trial = 0; trial < 150; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 7);
		auto u = Universe::numbered(static_cast<std::size_t>(n));
		const auto gens = random_subbase(rng, n);
		const auto bopens = brute::topology_from(n, gens);
		const Topology t = generate_from_subbase(Subbase(support::family_of(u, gens)));
		REQUIRE(to_brute(materialize_opens(t)) == bopens);
		CHECK(check_topology_axioms(materialize_opens(t)).all());
		CHECK(topologies_equal(Topology::from_opens(materialize_opens(t)), t));
		for (Subset x : enumerate_powerset(u)) {
			const Subset i = interior(t, x), c = closure(t, x);
			CHECK(to_brute(i) == brute::interior(bopens, to_brute(x)));
			CHECK(to_brute(c) == brute::closure(n, bopens, to_brute(x)));
			CHECK(i.is_subset_of(x));
			CHECK(x.is_subset_of(c));
			CHECK(interior(t, i) == i);
			CHECK(closure(t, c) == c);
			CHECK(complement(closure(t, complement(x))) == i);
			CHECK(boundary(t, x) == (c - i));
			CHECK(t.is_open(i));
			CHECK(t.is_closed(c));
		}
		const Subset full = Subset::full(u);
		CHECK(closure(t, Subset::empty(u)).empty());
		CHECK(interior(t, full) == full);
	}
}

TEST_CASE("property: binary Kuratowski laws and monotonicity")
{
	std::mt19937_64 rng(32);
	for (int trial = 0; trial < 400; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 10);
		auto u = Universe::numbered(static_cast<std::size_t>(n));
		const Topology t = generate_from_subbase(Subbase(support::family_of(u, random_subbase(rng, n))));
		const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
		const Subset x = Subset::from_word(u, rng() & mask), y = Subset::from_word(u, rng() & mask);
		CHECK(closure(t, x | y) == (closure(t, x) | closure(t, y)));
		CHECK(interior(t, x & y) == (interior(t, x) & interior(t, y)));
		const Subset small = x & y;
		CHECK(interior(t, small).is_subset_of(interior(t, x)));
		CHECK(closure(t, small).is_subset_of(closure(t, x)));
	}
}

TEST_CASE("property: specialization preorder round trip")
{
	std::mt19937_64 rng(33);
	for (int trial = 0; trial < 200; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 8);
		auto u = Universe::numbered(static_cast<std::size_t>(n));
		const auto rights = brute::preorder_closure(brute::random_relation(rng, n, 25));
		const auto rel = support::relation_of(u, rights);
		const Topology t = generate_from_subbase(subbase_from_relation(rel));
		for (int x = 0; x < n; ++x)
			CHECK(to_brute(t.min_nbhd(static_cast<std::size_t>(x))) == rights[x]);
		// Back to the relation through the covering of open sets.
		CHECK(relation_from_covering(covering_from_topology(t)) == rel);
	}
}

TEST_CASE("property: enlarging a subbase refines the topology")
{
	std::mt19937_64 rng(34);
	for (int trial = 0; trial < 200; ++trial) {
		const int n = 1 + static_cast<int>(rng() % 8);
		auto u = Universe::numbered(static_cast<std::size_t>(n));
		const Subbase a(support::family_of(u, random_subbase(rng, n)));
		const Subbase b(support::family_of(u, random_subbase(rng, n)));
		const Topology ta = generate_from_subbase(a);
		const Topology tab = generate_from_subbase(a.merged(b));
		for (const auto &g : materialize_opens(ta))
			CHECK(tab.is_open(g));
		for (std::size_t x = 0; x < u->size(); ++x)
			CHECK(tab.min_nbhd(x).is_subset_of(ta.min_nbhd(x)));
	}
}
