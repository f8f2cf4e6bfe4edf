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

#ifndef RTOP_VERIFIER_HPP
#define RTOP_VERIFIER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtop/coverings.hpp"
#include "rtop/io.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace rtop::verify {

/** Every claim the suite adjudicates, in report order. */
inline constexpr std::array<std::string_view, 17> kClaimIds = {
	"P3.1.1", "P3.1.2", "P3.1.3", "P3.1.4", "P3.1.5", "P3.1.6", "P3.2.1", "P3.2.2", "P3.3",
	"P3.4",   "C3.1.1", "C3.1.2", "P3.5.1", "P3.5.2", "L3.2",   "F-invariance", "F-not-topology",
};

/** Position of `claim` in kClaimIds; throws InvalidStructure for unknown ids. */
std::size_t claim_index(std::string_view claim);

enum class Status { holds, fails, holds_under_stronger_hypothesis };
std::string_view to_string(Status s) noexcept;

/** Identifies the structure a verdict was computed on. */
struct InstanceInfo {
	std::string id;
	std::string description;
};

/**
 * One observed relation between two evaluated expressions, e.g.
 * `yao4_upper(yao4_upper(X)) != yao4_upper(X)`. Relations are "=", "!=",
 * "<=" (subset), "!<=" (not a subset) and "is-true" (lhs_expr is a
 * predicate; the sides are empty).
 */
struct Fact {
	std::string lhs_expr;
	std::string relation;
	std::string rhs_expr;
	std::vector<std::string> lhs;
	std::vector<std::string> rhs;
};

/**
 * A concrete failure of a claim: the structure the check ran on (possibly
 * a strengthened variant of the instance), the witness subsets and the facts
 * that together contradict the claim.
 */
struct Counterexample {
	io::json structure;
	std::vector<std::string> x;
	std::optional<std::vector<std::string>> y;
	std::string claimed;
	std::vector<Fact> facts;
};

struct ClaimVerdict {
	std::string claim;
	/** "as-stated", or the reading/strengthening the check used. */
	std::string variant = "as-stated";
	Status status = Status::holds;
	/** False when the claim's hypothesis does not apply; the verdict then holds vacuously. */
	bool hypothesis_met = true;
	/** A failure of a must-hold verdict is an engine bug. */
	bool must_hold = false;
	InstanceInfo instance;
	io::json structure;
	std::optional<Counterexample> counterexample;
	std::size_t n = 0;
	std::uint64_t subsets_tested = 0;
	io::json details = io::json::object();
};

// Structure documents embedded in verdicts: the covering/topology/relation
// JSON documents plus a "kind" key.
io::json describe(const Covering &c);
io::json describe(const BinaryRelation &rel);
io::json describe(const Topology &t);

/** Items (1)-(6) for R = relation_from_covering(c). */
std::vector<ClaimVerdict> verify_prop31(const Covering &c, const InstanceInfo &info);

/**
 * Idempotence of the pointwise upper operator and G ∩ H, for a relation the
 * claim assumes transitive. Failures are retested with reflexivity added.
 */
std::vector<ClaimVerdict> verify_prop32(const BinaryRelation &rel, const InstanceInfo &info);

/**
 * Equality of the set-union and pointwise Yao pairs. Throws InvalidStructure
 * for a non-reflexive relation. Failures are retested with transitivity added.
 */
std::vector<ClaimVerdict> verify_prop33(const BinaryRelation &rel, const InstanceInfo &info);

/** Five-way lower equality and C^+X = R̄X with C = opens minus the empty set. */
std::vector<ClaimVerdict> verify_prop34_and_cor31(const Topology &t, const InstanceInfo &info);

/**
 * Upper-approximation comparisons on a topology used as a covering.
 * `designated` is the X at which the inequality claim is evaluated;
 * `printed` is a reference value to attribute to an operator, if any.
 */
std::vector<ClaimVerdict> verify_prop35_and_lemma32(const Topology &t, const Subset &designated,
                                                    const InstanceInfo &info,
                                                    const std::optional<Subset> &printed = std::nullopt);

/**
 * Closure-vs-set-union-upper containment for an arbitrary relation with the
 * topology generated by its right neighbourhoods; reports the direction.
 */
ClaimVerdict verify_lemma32_relation(const BinaryRelation &rel, const InstanceInfo &info);

/** Invariance of X^+, C^+X and C_+X under the neighbourhood transform. */
std::vector<ClaimVerdict> verify_transform_F(const Covering &c, const InstanceInfo &info);
/** As above on the topology used as a covering, plus whether F(C) is a topology. */
std::vector<ClaimVerdict> verify_transform_F(const Topology &t, const InstanceInfo &info);

/**
 * Re-evaluates a counterexample with the literal formulas, independently of
 * the bitset engine. True iff the recorded sides reproduce and violate the
 * claim.
 */
bool revalidate(const ClaimVerdict &v);

struct SuiteConfig {
	/** Claim ids or id prefixes ("P3.2" selects P3.2.1 and P3.2.2); empty selects all. */
	std::vector<std::string> claims;
	std::size_t n_max = 6;
	std::size_t trials = 100;
	std::uint64_t seed = 42;
	bool paper_instances = true;
};

/** Throws InvalidStructure for an unknown claim or an out-of-range n_max. */
void validate(const SuiteConfig &config);

struct SuiteReport {
	std::vector<ClaimVerdict> verdicts;
	std::size_t must_hold_failures = 0;
	std::size_t revalidation_failures = 0;

	bool ok() const noexcept { return must_hold_failures == 0 && revalidation_failures == 0; }
};

/** Paper instances and seeded random instances; sorted by claim then instance. */
SuiteReport run_suite(const SuiteConfig &config);

io::json verdict_to_json(const ClaimVerdict &v);
/** One verdict per line. */
std::string to_jsonl(const SuiteReport &r);
/** Per-claim counts as a fixed-width text table. */
std::string summary_table(const SuiteReport &r);

} // namespace rtop::verify

#endif // RTOP_VERIFIER_HPP
