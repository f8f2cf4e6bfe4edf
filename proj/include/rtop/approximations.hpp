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

#ifndef RTOP_APPROXIMATIONS_HPP
#define RTOP_APPROXIMATIONS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "rtop/core_sets.hpp"
#include "rtop/coverings.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace rtop {

/**
 * The five lower/upper approximation pairs.
 *
 * zhu and xu_zhang work on a covering, yao3 and yao4 on a binary relation,
 * topo on a topology. Nothing here converts between those structures; use
 * relation_from_covering, covering_from_relation or subbase_from_relation
 * explicitly.
 */
enum class Operator { zhu, xu_zhang, yao3, yao4, topo };

enum class Side { lower, upper };

std::string_view to_string(Operator op) noexcept;
std::string_view to_string(Side side) noexcept;
/** Accepts "zhu", "xu-zhang"/"xu_zhang", "yao3", "yao4", "topo". */
std::optional<Operator> parse_operator(std::string_view text) noexcept;
std::optional<Side> parse_side(std::string_view text) noexcept;

struct ApproxResult {
	Operator op;
	Subset input;
	Subset lower;
	Subset upper;
};

// Zhu: X_+ is the union of members inside X; X^+ adds N(x) for the points of
// X that X_+ leaves uncovered.
Subset zhu_lower(const Covering &c, const Subset &x);
Subset zhu_upper(const Covering &c, const Subset &x);

// Xu-Zhang: pointwise tests on the intersection of Md(x), which is N(x).
Subset xu_zhang_lower(const Covering &c, const Subset &x);
Subset xu_zhang_upper(const Covering &c, const Subset &x);

// Yao, set-union form: lower is the union of right neighbourhoods inside X;
// upper is the dual complement(lower(complement(X))).
Subset yao3_lower(const BinaryRelation &rel, const Subset &x);
Subset yao3_upper(const BinaryRelation &rel, const Subset &x);

// Yao, pointwise form.
Subset yao4_lower(const BinaryRelation &rel, const Subset &x);
Subset yao4_upper(const BinaryRelation &rel, const Subset &x);

// Topological: interior and closure.
Subset topo_lower(const Topology &t, const Subset &x);
Subset topo_upper(const Topology &t, const Subset &x);

/** Throws InvalidStructure when `op` does not act on a covering. */
ApproxResult approximate(Operator op, const Covering &c, const Subset &x);
/** Throws InvalidStructure when `op` does not act on a relation. */
ApproxResult approximate(Operator op, const BinaryRelation &rel, const Subset &x);
/** Throws InvalidStructure when `op` is not topo. */
ApproxResult approximate(Operator op, const Topology &t, const Subset &x);

/** G = {X | upper_yao4(X) is empty}. Exhaustive over P(U). */
SetFamily family_G(const BinaryRelation &rel);
/** H = {upper_yao4(Y) | Y in P(U)}. Exhaustive over P(U). */
SetFamily family_H(const BinaryRelation &rel);

} // namespace rtop

#endif // RTOP_APPROXIMATIONS_HPP
