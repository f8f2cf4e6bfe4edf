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

#include "rtop/verifier.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "rtop/approximations.hpp"
#include "raw_formulas.hpp"

namespace rtop::verify {

std::size_t claim_index(std::string_view claim)
{
	for (std::size_t i = 0; i < kClaimIds.size(); ++i)
		if (kClaimIds[i] == claim)
			return i;
	throw InvalidStructure("unknown claim id '" + std::string(claim) + "'");
}

std::string_view to_string(Status s) noexcept
{
	switch (s) {
	case Status::holds: return "holds";
	case Status::fails: return "fails";
	case Status::holds_under_stronger_hypothesis: return "holds-under-stronger-hypothesis";
	}
	return "?";
}

io::json describe(const Covering &c)
{
	io::json j = io::covering_to_json(c);
	return io::json{{"kind", "covering"}, {"universe", j["universe"]}, {"sets", j["sets"]}};
}

io::json describe(const BinaryRelation &rel)
{
	io::json j = io::relation_to_json(rel);
	return io::json{{"kind", "relation"}, {"universe", j["universe"]}, {"pairs", j["pairs"]}};
}

io::json describe(const Topology &t)
{
	io::json j = io::topology_to_json(t);
	return io::json{{"kind", "topology"}, {"universe", j["universe"]}, {"sets", j["sets"]}};
}

namespace {

Fact fact(std::string lhs_expr, std::string relation, std::string rhs_expr, const Subset &lhs, const Subset &rhs)
{
	return {std::move(lhs_expr), std::move(relation), std::move(rhs_expr), lhs.labels(), rhs.labels()};
}

void expect_equal(std::vector<Fact> &out, const char *lhs_expr, const Subset &lhs, const char *rhs_expr,
                  const Subset &rhs)
{
	if (lhs != rhs)
		out.push_back(fact(lhs_expr, "!=", rhs_expr, lhs, rhs));
}

struct Failure {
	Subset x;
	std::vector<Fact> facts;
};

// First X in ascending order for which `check` reports facts.
template <class F>
std::optional<Failure> sweep(const UniverseRef &u, F &&check)
{
	for (const Subset x : enumerate_powerset(u)) {
		auto facts = check(x);
		if (!facts.empty())
			return Failure{x, std::move(facts)};
	}
	return std::nullopt;
}

ClaimVerdict verdict(std::string claim, const InstanceInfo &info, const io::json &structure, const UniverseRef &u)
{
	ClaimVerdict v;
	v.claim = std::move(claim);
	v.instance = info;
	v.structure = structure;
	v.n = u->size();
	v.subsets_tested = std::uint64_t{1} << u->size();
	return v;
}

void fail(ClaimVerdict &v, const io::json &structure, const Subset &x, const std::optional<Subset> &y,
          std::string claimed, std::vector<Fact> facts)
{
	v.status = Status::fails;
	Counterexample c;
	c.structure = structure;
	c.x = x.labels();
	if (y)
		c.y = y->labels();
	c.claimed = std::move(claimed);
	c.facts = std::move(facts);
	v.counterexample = std::move(c);
}

template <class F>
void sweep_claim(ClaimVerdict &v, const UniverseRef &u, const char *claimed, F &&check)
{
	if (auto f = sweep(u, check))
		fail(v, v.structure, f->x, std::nullopt, claimed, std::move(f->facts));
}

BinaryRelation reflexive_closure(const BinaryRelation &rel)
{
	std::vector<Subset> rows = rel.rights();
	for (std::size_t x = 0; x < rows.size(); ++x)
		rows[x].insert(x);
	return BinaryRelation(rel.universe(), std::move(rows));
}

BinaryRelation transitive_closure(const BinaryRelation &rel)
{
	std::vector<Subset> rows = rel.rights();
	for (std::size_t k = 0; k < rows.size(); ++k)
		for (std::size_t i = 0; i < rows.size(); ++i)
			if (rows[i].contains(k))
				rows[i] |= rows[k];
	return BinaryRelation(rel.universe(), std::move(rows));
}

Subset union_over(const Subset &x, const std::function<Subset(std::size_t)> &f)
{
	Subset out = Subset::empty(x.universe());
	x.for_each([&](std::size_t e) { out |= f(e); });
	return out;
}

io::json unary_readings(const Covering &c)
{
	const bool md_singleton = is_unary(c);
	const bool fixed_point = neighborhood_transform(c) == c;
	return io::json{{"md_singleton", md_singleton},
	                {"members_are_neighborhoods", fixed_point},
	                {"readings_diverge", md_singleton != fixed_point}};
}

} // namespace

std::vector<ClaimVerdict> verify_prop31(const Covering &c, const InstanceInfo &info)
{
	const auto &u = c.universe();
	const io::json structure = describe(c);
	const BinaryRelation rel = relation_from_covering(c);
	std::vector<ClaimVerdict> out;

	{
		ClaimVerdict v = verdict("P3.1.1", info, structure, u);
		v.must_hold = true;
		v.subsets_tested = 0;
		for (std::size_t x = 0; x < u->size() && v.status == Status::holds; ++x) {
			const Subset sx = Subset::of(u, {x});
			if (!rel.right(x).contains(x)) {
				fail(v, structure, sx, std::nullopt, "R is reflexive",
				     {fact("X", "!<=", "right_union(X)", sx, rel.right(x))});
				break;
			}
			rel.right(x).for_each([&](std::size_t y) {
				if (v.status == Status::holds && !rel.right(y).is_subset_of(rel.right(x))) {
					const Subset sy = Subset::of(u, {y});
					fail(v, structure, sx, sy, "R is transitive",
					     {fact("Y", "<=", "right_union(X)", sy, rel.right(x)),
					      fact("right_union(Y)", "!<=", "right_union(X)", rel.right(y), rel.right(x))});
				}
			});
		}
		v.details = io::json{{"reflexive", is_reflexive(rel)}, {"transitive", is_transitive(rel)}};
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("P3.1.2", info, structure, u);
		v.must_hold = true;
		sweep_claim(v, u, "C^+X = upper_R(X) and C_+X = lower_R(X)", [&](const Subset &x) {
			std::vector<Fact> f;
			expect_equal(f, "xu_zhang_upper(X)", xu_zhang_upper(c, x), "yao4_upper(X)", yao4_upper(rel, x));
			expect_equal(f, "xu_zhang_lower(X)", xu_zhang_lower(c, x), "yao4_lower(X)", yao4_lower(rel, x));
			return f;
		});
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("P3.1.3", info, structure, u);
		v.must_hold = true;
		const Covering back = covering_from_relation(rel);
		sweep_claim(v, u, "the cover {r(x)} reproduces both pointwise operators of R", [&](const Subset &x) {
			std::vector<Fact> f;
			expect_equal(f, "Rcover:xu_zhang_upper(X)", xu_zhang_upper(back, x), "yao4_upper(X)",
			             yao4_upper(rel, x));
			expect_equal(f, "Rcover:xu_zhang_lower(X)", xu_zhang_lower(back, x), "yao4_lower(X)",
			             yao4_lower(rel, x));
			return f;
		});
		v.details = io::json{{"round_trip_cover", io::family_to_json(back.members())}};
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("P3.1.4", info, structure, u);
		v.must_hold = true;
		const BinaryRelation inv = inverse(rel);
		sweep_claim(v, u, "X^+ = upper_{R^-1}(X)", [&](const Subset &x) {
			std::vector<Fact> f;
			expect_equal(f, "zhu_upper(X)", zhu_upper(c, x), "yao4_upper_inverse(X)", yao4_upper(inv, x));
			return f;
		});
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("P3.1.5", info, structure, u);
		v.must_hold = true;
		sweep_claim(v, u, "C^+X = union of l(x) and X^+ = union of r(x) over x in X", [&](const Subset &x) {
			std::vector<Fact> f;
			expect_equal(f, "xu_zhang_upper(X)", xu_zhang_upper(c, x), "left_union(X)",
			             union_over(x, [&](std::size_t e) { return left_nbhd(rel, e); }));
			expect_equal(f, "zhu_upper(X)", zhu_upper(c, x), "right_union(X)",
			             union_over(x, [&](std::size_t e) { return rel.right(e); }));
			return f;
		});
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("P3.1.6", info, structure, u);
		v.must_hold = true;
		std::optional<Subset> differs;
		std::uint64_t differing = 0;
		for (const Subset x : enumerate_powerset(u))
			if (xu_zhang_upper(c, x) != zhu_upper(c, x)) {
				if (!differs)
					differs = x;
				++differing;
			}
		v.hypothesis_met = !differs;
		v.details = io::json{{"equivalence", is_equivalence(rel)}, {"subsets_where_uppers_differ", differing}};
		if (differs)
			v.details["first_subset_where_uppers_differ"] = differs->labels();
		if (v.hypothesis_met) {
			for (std::size_t x = 0; x < u->size() && v.status == Status::holds; ++x)
				rel.right(x).for_each([&](std::size_t y) {
					if (v.status == Status::holds && !rel.right(y).contains(x)) {
						const Subset sx = Subset::of(u, {x});
						const Subset sy = Subset::of(u, {y});
						fail(v, structure, sx, sy, "R is an equivalence relation",
						     {fact("Y", "<=", "right_union(X)", sy, rel.right(x)),
						      fact("X", "!<=", "right_union(Y)", sx, rel.right(y))});
					}
				});
		}
		out.push_back(std::move(v));
	}
	for (auto &v : out)
		v.details["unary"] = unary_readings(c);
	return out;
}

std::vector<ClaimVerdict> verify_prop32(const BinaryRelation &rel, const InstanceInfo &info)
{
	const auto &u = rel.universe();
	const bool transitive = is_transitive(rel);
	std::vector<ClaimVerdict> out;

	auto idempotence = [&](ClaimVerdict &v, const BinaryRelation &r) {
		sweep_claim(v, u, "upper_R(upper_R(X)) = upper_R(X)", [&](const Subset &x) {
			std::vector<Fact> f;
			const Subset once = yao4_upper(r, x);
			expect_equal(f, "yao4_upper(yao4_upper(X))", yao4_upper(r, once), "yao4_upper(X)", once);
			return f;
		});
	};

	// Nonempty (or any, when allow_empty) X in G with X = upper_R(Y).
	auto g_cap_h = [&](ClaimVerdict &v, const BinaryRelation &r, bool allow_empty, const char *claimed) {
		for (const Subset x : enumerate_powerset(u)) {
			if (!allow_empty && x.empty())
				continue;
			if (!yao4_upper(r, x).empty())
				continue;
			for (const Subset y : enumerate_powerset(u)) {
				if (yao4_upper(r, y) != x)
					continue;
				std::vector<Fact> f{fact("yao4_upper(X)", "=", "empty", yao4_upper(r, x), Subset::empty(u)),
				                    fact("yao4_upper(Y)", "=", "X", yao4_upper(r, y), x)};
				if (!allow_empty)
					f.push_back(fact("X", "!=", "empty", x, Subset::empty(u)));
				fail(v, v.structure, x, y, claimed, std::move(f));
				return;
			}
		}
	};

	auto strengthened = [&](const char *claim, const char *variant, auto &&check) {
		const BinaryRelation closed = reflexive_closure(rel);
		ClaimVerdict s = verdict(claim, info, describe(closed), u);
		s.variant = variant;
		s.must_hold = true;
		s.details = io::json{{"transitive", is_transitive(closed)}, {"reflexive", is_reflexive(closed)}};
		check(s, closed);
		if (s.status == Status::holds)
			s.status = Status::holds_under_stronger_hypothesis;
		out.push_back(std::move(s));
	};

	{
		ClaimVerdict v = verdict("P3.2.1", info, describe(rel), u);
		v.hypothesis_met = transitive;
		v.must_hold = is_preorder(rel);
		if (transitive)
			idempotence(v, rel);
		v.details = io::json{{"transitive", transitive}, {"reflexive", is_reflexive(rel)}};
		const bool retest = v.status == Status::fails && !is_reflexive(rel);
		out.push_back(std::move(v));
		if (retest)
			strengthened("P3.2.1", "with reflexivity added", idempotence);
	}
	{
		const SetFamily g = family_G(rel);
		const SetFamily h = family_H(rel);
		std::vector<Subset> both;
		for (const auto &x : g)
			if (h.contains(x))
				both.push_back(x);
		io::json details{{"transitive", transitive},
		                 {"reflexive", is_reflexive(rel)},
		                 {"G_size", g.size()},
		                 {"H_size", h.size()},
		                 {"G_cap_H", io::family_to_json(SetFamily(u, both))},
		                 {"empty_in_G_and_H", g.contains(Subset::empty(u)) && h.contains(Subset::empty(u))}};

		ClaimVerdict v = verdict("P3.2.2", info, describe(rel), u);
		v.hypothesis_met = transitive;
		v.details = details;
		if (transitive)
			g_cap_h(v, rel, true, "G and H are disjoint");
		out.push_back(std::move(v));

		ClaimVerdict refined = verdict("P3.2.2", info, describe(rel), u);
		refined.variant = "refined: G and H share at most the empty set";
		refined.hypothesis_met = transitive;
		refined.must_hold = is_preorder(rel);
		refined.details = details;
		if (transitive)
			g_cap_h(refined, rel, false, "G and H share at most the empty set");
		const bool retest = refined.status == Status::fails && !is_reflexive(rel);
		out.push_back(std::move(refined));
		if (retest)
			strengthened("P3.2.2", "refined, with reflexivity added", [&](ClaimVerdict &s, const BinaryRelation &r) {
				g_cap_h(s, r, false, "G and H share at most the empty set");
			});
	}
	return out;
}

std::vector<ClaimVerdict> verify_prop33(const BinaryRelation &rel, const InstanceInfo &info)
{
	if (!is_reflexive(rel))
		throw InvalidStructure("the Yao pair comparison assumes a reflexive relation");
	const auto &u = rel.universe();
	std::vector<ClaimVerdict> out;

	auto compare = [&](ClaimVerdict &v, const BinaryRelation &r) {
		sweep_claim(v, u, "set-union and pointwise Yao pairs coincide", [&](const Subset &x) {
			std::vector<Fact> f;
			expect_equal(f, "yao3_lower(X)", yao3_lower(r, x), "yao4_lower(X)", yao4_lower(r, x));
			expect_equal(f, "yao3_upper(X)", yao3_upper(r, x), "yao4_upper(X)", yao4_upper(r, x));
			return f;
		});
	};

	ClaimVerdict v = verdict("P3.3", info, describe(rel), u);
	v.must_hold = is_transitive(rel);
	v.details = io::json{{"transitive", is_transitive(rel)}};
	compare(v, rel);
	const bool retest = v.status == Status::fails && !is_transitive(rel);
	out.push_back(std::move(v));
	if (retest) {
		const BinaryRelation closed = transitive_closure(rel);
		ClaimVerdict s = verdict("P3.3", info, describe(closed), u);
		s.variant = "with transitivity added";
		s.must_hold = true;
		s.details = io::json{{"transitive", is_transitive(closed)}};
		compare(s, closed);
		if (s.status == Status::holds)
			s.status = Status::holds_under_stronger_hypothesis;
		out.push_back(std::move(s));
	}
	return out;
}

std::vector<ClaimVerdict> verify_prop34_and_cor31(const Topology &t, const InstanceInfo &info)
{
	const auto &u = t.universe();
	const io::json structure = describe(t);
	const Covering c = covering_from_topology(t);
	const BinaryRelation rel = relation_from_covering(c);
	const bool unary = is_unary(c);
	std::vector<ClaimVerdict> out;

	{
		ClaimVerdict v = verdict("P3.4", info, structure, u);
		v.must_hold = true;
		sweep_claim(v, u, "X_+ = interior(X)", [&](const Subset &x) {
			std::vector<Fact> f;
			expect_equal(f, "zhu_lower(X)", zhu_lower(c, x), "topo_lower(X)", topo_lower(t, x));
			return f;
		});
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("C3.1.1", info, structure, u);
		v.must_hold = true;
		v.hypothesis_met = unary;
		if (unary)
			sweep_claim(v, u, "all five lower approximations coincide", [&](const Subset &x) {
				std::vector<Fact> f;
				const Subset zl = zhu_lower(c, x);
				expect_equal(f, "zhu_lower(X)", zl, "xu_zhang_lower(X)", xu_zhang_lower(c, x));
				expect_equal(f, "zhu_lower(X)", zl, "yao3_lower(X)", yao3_lower(rel, x));
				expect_equal(f, "zhu_lower(X)", zl, "yao4_lower(X)", yao4_lower(rel, x));
				expect_equal(f, "zhu_lower(X)", zl, "topo_lower(X)", topo_lower(t, x));
				return f;
			});
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("C3.1.2", info, structure, u);
		v.must_hold = true;
		v.hypothesis_met = unary;
		if (unary)
			sweep_claim(v, u, "C^+X = upper_R(X)", [&](const Subset &x) {
				std::vector<Fact> f;
				expect_equal(f, "xu_zhang_upper(X)", xu_zhang_upper(c, x), "yao4_upper(X)", yao4_upper(rel, x));
				return f;
			});
		out.push_back(std::move(v));
	}
	for (auto &v : out)
		v.details["unary"] = unary_readings(c);
	return out;
}

namespace {

io::json direction_counts(const UniverseRef &u, const std::function<Subset(const Subset &)> &topo,
                          const std::function<Subset(const Subset &)> &yao)
{
	std::uint64_t equal = 0, topo_smaller = 0, yao_smaller = 0, incomparable = 0;
	for (const Subset x : enumerate_powerset(u)) {
		const Subset a = topo(x);
		const Subset b = yao(x);
		if (a == b)
			++equal;
		else if (a.is_subset_of(b))
			++topo_smaller;
		else if (b.is_subset_of(a))
			++yao_smaller;
		else
			++incomparable;
	}
	std::string summary = incomparable ? "incomparable"
	                      : yao_smaller ? (topo_smaller ? "mixed" : "yao3 upper within closure")
	                      : topo_smaller ? "closure within yao3 upper"
	                                     : "equal";
	return io::json{{"equal", equal},
	                {"closure_strictly_smaller", topo_smaller},
	                {"yao3_strictly_smaller", yao_smaller},
	                {"incomparable", incomparable},
	                {"direction", summary}};
}

} // namespace

std::vector<ClaimVerdict> verify_prop35_and_lemma32(const Topology &t, const Subset &designated,
                                                    const InstanceInfo &info, const std::optional<Subset> &printed)
{
	const auto &u = t.universe();
	require_same_universe(u, designated.universe());
	const io::json structure = describe(t);
	const Covering c = covering_from_topology(t);
	const BinaryRelation rel = relation_from_covering(c);
	const bool unary = is_unary(c);
	std::vector<ClaimVerdict> out;

	{
		const Subset x = designated;
		const std::map<std::string, Subset> uppers{
			{"zhu", zhu_upper(c, x)},       {"xu-zhang", xu_zhang_upper(c, x)}, {"yao3", yao3_upper(rel, x)},
			{"yao4", yao4_upper(rel, x)},   {"topo", topo_upper(t, x)},
		};
		io::json details{{"X", x.labels()}, {"uppers", io::json::object()}};
		for (const auto &[name, value] : uppers)
			details["uppers"][name] = value.labels();
		details["xu_zhang_equals_yao3"] = uppers.at("xu-zhang") == uppers.at("yao3");
		if (printed) {
			io::json matches = io::json::array();
			for (const auto &[name, value] : uppers)
				if (value == *printed)
					matches.push_back(name);
			details["printed_value"] = printed->labels();
			details["operators_matching_printed_value"] = matches;
		}
		details["unary"] = unary_readings(c);

		ClaimVerdict v = verdict("P3.5.1", info, structure, u);
		v.hypothesis_met = unary;
		v.subsets_tested = 1;
		v.details = details;
		if (unary && uppers.at("xu-zhang") == uppers.at("yao3"))
			fail(v, structure, x, std::nullopt, "C^+X differs from the set-union upper approximation",
			     {fact("xu_zhang_upper(X)", "=", "yao3_upper(X)", uppers.at("xu-zhang"), uppers.at("yao3"))});
		out.push_back(std::move(v));

		ClaimVerdict z = verdict("P3.5.1", info, structure, u);
		z.variant = "reading the upper operator as X^+";
		z.hypothesis_met = unary;
		z.subsets_tested = 1;
		z.details = details;
		if (unary && uppers.at("zhu") == uppers.at("yao3"))
			fail(z, structure, x, std::nullopt, "X^+ differs from the set-union upper approximation",
			     {fact("zhu_upper(X)", "=", "yao3_upper(X)", uppers.at("zhu"), uppers.at("yao3"))});
		out.push_back(std::move(z));
	}
	{
		ClaimVerdict v = verdict("P3.5.2", info, structure, u);
		v.must_hold = true;
		v.hypothesis_met = unary;
		if (unary)
			sweep_claim(v, u, "set-union upper approximation equals closure", [&](const Subset &x) {
				std::vector<Fact> f;
				expect_equal(f, "yao3_upper(X)", yao3_upper(rel, x), "topo_upper(X)", topo_upper(t, x));
				return f;
			});
		out.push_back(std::move(v));
	}
	{
		ClaimVerdict v = verdict("L3.2", info, structure, u);
		v.must_hold = true;
		sweep_claim(v, u, "closure is contained in the set-union upper approximation", [&](const Subset &x) {
			std::vector<Fact> f;
			const Subset a = topo_upper(t, x);
			const Subset b = yao3_upper(rel, x);
			if (!a.is_subset_of(b))
				f.push_back(fact("topo_upper(X)", "!<=", "yao3_upper(X)", a, b));
			return f;
		});
		v.details = direction_counts(
			u, [&](const Subset &x) { return topo_upper(t, x); }, [&](const Subset &x) { return yao3_upper(rel, x); });
		out.push_back(std::move(v));
	}
	return out;
}

ClaimVerdict verify_lemma32_relation(const BinaryRelation &rel, const InstanceInfo &info)
{
	const auto &u = rel.universe();
	const Topology t = generate_from_subbase(subbase_from_relation(rel));
	ClaimVerdict v = verdict("L3.2", info, describe(rel), u);
	v.variant = "arbitrary relation, topology generated by {r(x)}";
	v.must_hold = true;
	sweep_claim(v, u, "closure is contained in the set-union upper approximation", [&](const Subset &x) {
		std::vector<Fact> f;
		const Subset a = topo_upper(t, x);
		const Subset b = yao3_upper(rel, x);
		if (!a.is_subset_of(b))
			f.push_back(fact("topo_upper(X)", "!<=", "yao3_upper(X)", a, b));
		return f;
	});
	v.details = direction_counts(
		u, [&](const Subset &x) { return topo_upper(t, x); }, [&](const Subset &x) { return yao3_upper(rel, x); });
	v.details["reflexive"] = is_reflexive(rel);
	v.details["transitive"] = is_transitive(rel);
	return v;
}

namespace {

ClaimVerdict f_invariance(const Covering &c, const io::json &structure, const InstanceInfo &info)
{
	const auto &u = c.universe();
	const Covering f = neighborhood_transform(c);
	ClaimVerdict v = verdict("F-invariance", info, structure, u);
	v.must_hold = true;
	sweep_claim(v, u, "X^+, C^+X and C_+X are unchanged by the neighbourhood transform", [&](const Subset &x) {
		std::vector<Fact> out;
		expect_equal(out, "zhu_upper(X)", zhu_upper(c, x), "F:zhu_upper(X)", zhu_upper(f, x));
		expect_equal(out, "xu_zhang_upper(X)", xu_zhang_upper(c, x), "F:xu_zhang_upper(X)", xu_zhang_upper(f, x));
		expect_equal(out, "xu_zhang_lower(X)", xu_zhang_lower(c, x), "F:xu_zhang_lower(X)", xu_zhang_lower(f, x));
		return out;
	});
	bool zhu_lower_invariant = true;
	for (const Subset x : enumerate_powerset(u))
		if (zhu_lower(c, x) != zhu_lower(f, x)) {
			zhu_lower_invariant = false;
			break;
		}
	v.details = io::json{{"transformed", io::family_to_json(f.members())},
	                     {"zhu_lower_invariant", zhu_lower_invariant}};
	return v;
}

} // namespace

std::vector<ClaimVerdict> verify_transform_F(const Covering &c, const InstanceInfo &info)
{
	return {f_invariance(c, describe(c), info)};
}

std::vector<ClaimVerdict> verify_transform_F(const Topology &t, const InstanceInfo &info)
{
	const auto &u = t.universe();
	const io::json structure = describe(t);
	const Covering c = covering_from_topology(t);
	std::vector<ClaimVerdict> out{f_invariance(c, structure, info)};

	const SetFamily transformed = neighborhood_transform(c).members();
	const AxiomCheck axioms = check_topology_axioms(transformed);
	ClaimVerdict v = verdict("F-not-topology", info, structure, u);
	v.must_hold = true;
	v.subsets_tested = 0;
	v.details = io::json{{"transformed", io::family_to_json(transformed)},
	                     {"T1", axioms.t1},
	                     {"T2", axioms.t2},
	                     {"T3", axioms.t3},
	                     {"topology_once_empty_set_added",
	                      check_topology_axioms(transformed.with(Subset::empty(u))).all()}};
	if (axioms.all()) {
		v.status = Status::fails;
		v.counterexample = Counterexample{structure, {}, std::nullopt, "F(C) is not a topology",
		                                  {Fact{"is_topology(F(C))", "is-true", "", {}, {}}}};
	}
	out.push_back(std::move(v));
	return out;
}

bool revalidate(const ClaimVerdict &v)
{
	if (!v.counterexample)
		return false;
	const Counterexample &c = *v.counterexample;
	try {
		const raw::Space s = raw::space_from_structure(c.structure);
		const raw::Set x = raw::labels_to_set(s, c.x);
		std::optional<raw::Set> y;
		if (c.y)
			y = raw::labels_to_set(s, *c.y);
		if (c.facts.empty())
			return false;
		for (const auto &f : c.facts) {
			if (f.relation == "is-true") {
				if (!raw::eval_predicate(s, f.lhs_expr))
					return false;
				continue;
			}
			const raw::Set lhs = raw::eval(s, f.lhs_expr, x, y);
			const raw::Set rhs = raw::eval(s, f.rhs_expr, x, y);
			if (raw::set_to_labels(s, lhs) != f.lhs || raw::set_to_labels(s, rhs) != f.rhs)
				return false;
			bool observed = false;
			if (f.relation == "=")
				observed = lhs == rhs;
			else if (f.relation == "!=")
				observed = lhs != rhs;
			else if (f.relation == "<=")
				observed = raw::subset_of(lhs, rhs);
			else if (f.relation == "!<=")
				observed = !raw::subset_of(lhs, rhs);
			if (!observed)
				return false;
		}
		return true;
	} catch (const std::exception &) {
		return false;
	}
}

// Suite

namespace {

class Rng {
public:
	Rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
	{
		std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
		                  static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
		engine_.seed(seq);
	}

	/** Uniform in [0, bound). */
	std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
	std::mt19937_64 engine_;
};

Subset random_nonempty(Rng &rng, const UniverseRef &u)
{
	const std::uint64_t count = (std::uint64_t{1} << u->size()) - 1;
	return Subset::from_word(u, 1 + rng.below(count));
}

Covering random_cover(Rng &rng, const UniverseRef &u)
{
	const std::size_t k = 1 + rng.below(u->size());
	std::vector<Subset> sets;
	Subset covered = Subset::empty(u);
	for (std::size_t i = 0; i < k; ++i) {
		sets.push_back(random_nonempty(rng, u));
		covered |= sets.back();
	}
	complement(covered).for_each([&](std::size_t x) { sets.push_back(Subset::of(u, {x})); });
	return Covering(SetFamily(u, std::move(sets)));
}

Topology random_topology(Rng &rng, const UniverseRef &u)
{
	const std::size_t k = rng.below(u->size() + 2);
	std::vector<Subset> sets;
	for (std::size_t i = 0; i < k; ++i)
		sets.push_back(random_nonempty(rng, u));
	return generate_from_subbase(Subbase(SetFamily(u, std::move(sets))));
}

BinaryRelation random_sparse(Rng &rng, const UniverseRef &u)
{
	const std::size_t n = u->size();
	std::vector<Subset> rows(n, Subset::empty(u));
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			if (rng.below(n + 1) < 2)
				rows[x].insert(y);
	return BinaryRelation(u, std::move(rows));
}

std::string trial_id(std::size_t trial, const char *kind)
{
	std::ostringstream ss;
	ss << "random-" << std::setw(6) << std::setfill('0') << trial << ':' << kind;
	return ss.str();
}

bool selected(const SuiteConfig &config, std::string_view claim)
{
	if (config.claims.empty())
		return true;
	for (const auto &p : config.claims)
		if (p == "all" || claim == p || (claim.starts_with(p) && claim.size() > p.size() && claim[p.size()] == '.'))
			return true;
	return false;
}

void append(std::vector<ClaimVerdict> &out, std::vector<ClaimVerdict> more)
{
	for (auto &v : more)
		out.push_back(std::move(v));
}

} // namespace

void validate(const SuiteConfig &config)
{
	if (config.n_max < 1 || config.n_max > kMaxPowersetSize)
		throw InvalidStructure("n-max must lie in [1, " + std::to_string(kMaxPowersetSize) + "], got " +
		                       std::to_string(config.n_max));
	for (const auto &p : config.claims) {
		if (p == "all")
			continue;
		const bool known = std::any_of(kClaimIds.begin(), kClaimIds.end(), [&](std::string_view id) {
			return id == p || (id.starts_with(p) && id.size() > p.size() && id[p.size()] == '.');
		});
		if (!known)
			throw InvalidStructure("unknown claim id '" + p + "'");
	}
}

SuiteReport run_suite(const SuiteConfig &config)
{
	validate(config);
	std::vector<ClaimVerdict> all;

	if (config.paper_instances) {
		const auto u4 = Universe::create({"a", "b", "c", "d"});
		const auto s = [&](std::initializer_list<std::size_t> idx) { return Subset::of(u4, idx); };
		const Topology tau = Topology::from_opens(SetFamily(u4, {Subset::empty(u4), Subset::full(u4), s({3}), s({2, 3})}));
		const Covering tau_cover = covering_from_topology(tau);
		const BinaryRelation tau_rel = relation_from_covering(tau_cover);
		const InstanceInfo tau_info{"paper:tau", "U = {a,b,c,d}, topology {∅, U, {d}, {c,d}} used as a covering"};
		append(all, verify_prop31(tau_cover, tau_info));
		append(all, verify_transform_F(tau, tau_info));
		append(all, verify_prop34_and_cor31(tau, tau_info));
		append(all, verify_prop35_and_lemma32(tau, s({0, 1}), tau_info, Subset::full(u4)));
		append(all, verify_prop32(tau_rel, tau_info));
		append(all, verify_prop33(tau_rel, tau_info));
		all.push_back(verify_lemma32_relation(tau_rel, tau_info));

		const Covering partition(SetFamily(u4, {s({0, 1}), s({2, 3})}));
		const InstanceInfo part_info{"fixed:partition", "partition {{a,b},{c,d}}"};
		append(all, verify_prop31(partition, part_info));
		append(all, verify_transform_F(partition, part_info));

		const auto u3 = Universe::numbered(3);
		const auto t = [&](std::initializer_list<std::size_t> idx) { return Subset::of(u3, idx); };
		const Covering overlap(SetFamily(u3, {t({0, 1}), t({1, 2}), t({0, 1, 2})}));
		const InstanceInfo overlap_info{"fixed:overlap", "non-unary cover {{1,2},{2,3},{1,2,3}}"};
		append(all, verify_prop31(overlap, overlap_info));
		append(all, verify_transform_F(overlap, overlap_info));

		const auto u2 = Universe::numbered(2);
		const BinaryRelation chain2 = BinaryRelation::from_pairs(u2, {{0, 1}});
		const InstanceInfo chain2_info{"fixed:chain2", "U = {1,2}, R = {(1,2)}: transitive, not reflexive"};
		append(all, verify_prop32(chain2, chain2_info));
		all.push_back(verify_lemma32_relation(chain2, chain2_info));

		const BinaryRelation chain3 = BinaryRelation::from_pairs(u3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
		const InstanceInfo chain3_info{"fixed:chain3", "U = {1,2,3}, r(1)={1,2}, r(2)={2,3}, r(3)={3}: reflexive, not transitive"};
		append(all, verify_prop33(chain3, chain3_info));
		append(all, verify_prop32(chain3, chain3_info));
		all.push_back(verify_lemma32_relation(chain3, chain3_info));
	}

	for (std::size_t trial = 0; trial < config.trials; ++trial) {
		Rng size_rng(config.seed, trial, 0);
		const std::size_t n = config.n_max == 1 ? 1 : 2 + size_rng.below(config.n_max - 1);
		const auto u = Universe::numbered(n);

		Rng cover_rng(config.seed, trial, 1);
		const Covering cover = random_cover(cover_rng, u);
		const InstanceInfo cover_info{trial_id(trial, "cover"), "random cover"};
		append(all, verify_prop31(cover, cover_info));
		append(all, verify_transform_F(cover, cover_info));

		Rng topo_rng(config.seed, trial, 2);
		const Topology topo = random_topology(topo_rng, u);
		const Subset designated = Subset::from_word(u, topo_rng.below(std::uint64_t{1} << n));
		const InstanceInfo topo_info{trial_id(trial, "topology"), "topology generated by a random subbase"};
		append(all, verify_prop34_and_cor31(topo, topo_info));
		append(all, verify_prop35_and_lemma32(topo, designated, topo_info));
		append(all, verify_transform_F(topo, topo_info));

		Rng pre_rng(config.seed, trial, 3);
		const BinaryRelation preorder = transitive_closure(reflexive_closure(random_sparse(pre_rng, u)));
		const InstanceInfo pre_info{trial_id(trial, "preorder"), "reflexive-transitive closure of a random relation"};
		append(all, verify_prop32(preorder, pre_info));
		append(all, verify_prop33(preorder, pre_info));
		all.push_back(verify_lemma32_relation(preorder, pre_info));

		Rng trans_rng(config.seed, trial, 4);
		const BinaryRelation transitive = transitive_closure(random_sparse(trans_rng, u));
		const InstanceInfo trans_info{trial_id(trial, "transitive"), "transitive closure of a random relation"};
		append(all, verify_prop32(transitive, trans_info));
		all.push_back(verify_lemma32_relation(transitive, trans_info));

		Rng refl_rng(config.seed, trial, 5);
		const BinaryRelation reflexive = reflexive_closure(random_sparse(refl_rng, u));
		const InstanceInfo refl_info{trial_id(trial, "reflexive"), "reflexive closure of a random relation"};
		append(all, verify_prop33(reflexive, refl_info));
		all.push_back(verify_lemma32_relation(reflexive, refl_info));
	}

	SuiteReport report;
	for (auto &v : all)
		if (selected(config, v.claim))
			report.verdicts.push_back(std::move(v));
	std::stable_sort(report.verdicts.begin(), report.verdicts.end(), [](const auto &a, const auto &b) {
		const auto ia = claim_index(a.claim);
		const auto ib = claim_index(b.claim);
		return ia != ib ? ia < ib : a.instance.id < b.instance.id;
	});
	for (const auto &v : report.verdicts) {
		if (v.must_hold && v.status == Status::fails)
			++report.must_hold_failures;
		if (v.counterexample && !revalidate(v))
			++report.revalidation_failures;
	}
	return report;
}

io::json verdict_to_json(const ClaimVerdict &v)
{
	io::json j{{"claim", v.claim},
	           {"variant", v.variant},
	           {"status", to_string(v.status)},
	           {"must_hold", v.must_hold},
	           {"hypothesis_met", v.hypothesis_met},
	           {"instance_id", v.instance.id},
	           {"instance", v.instance.description},
	           {"n", v.n},
	           {"subsets_tested", v.subsets_tested},
	           {"structure", v.structure}};
	if (v.counterexample) {
		const auto &c = *v.counterexample;
		io::json facts = io::json::array();
		for (const auto &f : c.facts)
			facts.push_back(io::json{{"lhs_expr", f.lhs_expr},
			                         {"relation", f.relation},
			                         {"rhs_expr", f.rhs_expr},
			                         {"lhs", f.lhs},
			                         {"rhs", f.rhs}});
		io::json cj{{"claimed", c.claimed}, {"structure", c.structure}, {"X", c.x}};
		if (c.y)
			cj["Y"] = *c.y;
		cj["facts"] = std::move(facts);
		cj["revalidated"] = revalidate(v);
		j["counterexample"] = std::move(cj);
	} else {
		j["counterexample"] = nullptr;
	}
	j["details"] = v.details;
	return j;
}

std::string to_jsonl(const SuiteReport &r)
{
	std::string out;
	for (const auto &v : r.verdicts) {
		out += verdict_to_json(v).dump();
		out += '\n';
	}
	return out;
}

std::string summary_table(const SuiteReport &r)
{
	struct Row {
		std::size_t total = 0, holds = 0, fails = 0, stronger = 0, vacuous = 0, must_fail = 0;
	};
	std::map<std::size_t, Row> rows;
	for (const auto &v : r.verdicts) {
		Row &row = rows[claim_index(v.claim)];
		++row.total;
		if (!v.hypothesis_met)
			++row.vacuous;
		switch (v.status) {
		case Status::holds: ++row.holds; break;
		case Status::fails: ++row.fails; break;
		case Status::holds_under_stronger_hypothesis: ++row.stronger; break;
		}
		if (v.must_hold && v.status == Status::fails)
			++row.must_fail;
	}
	std::ostringstream ss;
	ss << std::left << std::setw(16) << "claim" << std::right << std::setw(9) << "verdicts" << std::setw(8) << "holds"
	   << std::setw(8) << "fails" << std::setw(10) << "stronger" << std::setw(9) << "vacuous" << std::setw(12)
	   << "must-fail" << '\n';
	for (const auto &[idx, row] : rows)
		ss << std::left << std::setw(16) << kClaimIds[idx] << std::right << std::setw(9) << row.total << std::setw(8)
		   << row.holds << std::setw(8) << row.fails << std::setw(10) << row.stronger << std::setw(9) << row.vacuous
		   << std::setw(12) << row.must_fail << '\n';
	ss << "must-hold failures: " << r.must_hold_failures << ", unreproducible counterexamples: "
	   << r.revalidation_failures << '\n';
	return ss.str();
}

} // namespace rtop::verify
