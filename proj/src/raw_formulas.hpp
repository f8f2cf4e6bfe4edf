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

// Literal evaluation of the approximation formulas on std::set, used to
// re-check verifier witnesses without going through the bitset engine.

#ifndef RTOP_RAW_FORMULAS_HPP
#define RTOP_RAW_FORMULAS_HPP

#include <cstddef>
#include <set>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtop/io.hpp"

namespace rtop::verify::raw {

using Set = std::set<std::size_t>;
using Family = std::vector<Set>;

struct Space {
	std::vector<std::string> labels;
	std::size_t n = 0;
	/** Covering members; empty for relation structures. */
	Family cover;
	/** r(x) per element. */
	Family right;
	/** All open sets. */
	Family opens;
};

/**
 * Builds the raw space from a verdict structure document:
 *  - covering: R from x R y iff y in N(x); opens generated by {r(x)};
 *  - topology: cover = opens minus the empty set; R from that cover;
 *  - relation: cover = {r(x)} minus the empty set; opens generated by {r(x)}.
 */
Space space_from_structure(const io::json &structure);

Set universe(const Space &s);
Set complement(const Space &s, const Set &x);
Set labels_to_set(const Space &s, const std::vector<std::string> &labels);
std::vector<std::string> set_to_labels(const Space &s, const Set &x);
bool subset_of(const Set &a, const Set &b);
bool meets(const Set &a, const Set &b);

Family md(const Space &s, std::size_t x);
Set nbhd(const Space &s, std::size_t x);
Set left(const Space &s, std::size_t x);

Set zhu_lower(const Space &s, const Set &x);
Set zhu_upper(const Space &s, const Set &x);
Set xu_zhang_lower(const Space &s, const Set &x);
Set xu_zhang_upper(const Space &s, const Set &x);
Set yao3_lower(const Space &s, const Set &x);
Set yao3_upper(const Space &s, const Set &x);
Set yao4_lower(const Space &s, const Set &x);
Set yao4_upper(const Space &s, const Set &x);
Set yao4_upper_inverse(const Space &s, const Set &x);
Set topo_lower(const Space &s, const Set &x);
Set topo_upper(const Space &s, const Set &x);

/** T1 and pairwise closure under union and intersection. */
bool is_topology(const Space &s, const Family &f);
/** Family of N(x) over all x, deduplicated. */
Family transform(const Space &s);
/** Same space with `cover` replaced; R is rederived from it. */
Space with_cover(const Space &s, const Family &cover);

/**
 * Evaluates an expression of the counterexample vocabulary: "X", "Y",
 * "empty", "U", an operator name applied to a sub-expression (zhu_lower,
 * zhu_upper, xu_zhang_lower, xu_zhang_upper, yao3_lower, yao3_upper,
 * yao4_lower, yao4_upper, yao4_upper_inverse, topo_lower, topo_upper,
 * left_union, right_union), optionally prefixed by "F:" (evaluate on the
 * neighbourhood transform of the cover) or "Rcover:" (evaluate on the cover
 * {r(x)}). Throws InvalidStructure for anything else.
 */
Set eval(const Space &s, std::string_view expr, const Set &x, const std::optional<Set> &y);

/** "is_topology(F(C))" or "is_topology(F(C)+empty)". */
bool eval_predicate(const Space &s, std::string_view expr);

} // namespace rtop::verify::raw

#endif // RTOP_RAW_FORMULAS_HPP
