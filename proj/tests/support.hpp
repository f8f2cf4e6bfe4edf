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

// Conversions between engine types and the brute-force reference, and the
// shared fixtures used across test binaries.

#ifndef RTOP_TESTS_SUPPORT_HPP
#define RTOP_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "brute.hpp"
#include "rtop/approximations.hpp"
#include "rtop/core_sets.hpp"
#include "rtop/coverings.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace support {

inline brute::Set to_brute(const rtop::Subset &s)
{
	brute::Set out;
	for (std::size_t i : s.indices())
		out.insert(static_cast<int>(i));
	return out;
}

inline brute::Family to_brute(const rtop::SetFamily &f)
{
	brute::Family out;
	for (const auto &s : f)
		out.push_back(to_brute(s));
	return brute::dedup(out);
}

inline rtop::Subset to_engine(const rtop::UniverseRef &u, const brute::Set &s)
{
	std::vector<std::size_t> idx(s.begin(), s.end());
	return rtop::Subset::from_indices(u, idx);
}

inline rtop::SetFamily family_of(const rtop::UniverseRef &u, const brute::Family &f)
{
	std::vector<rtop::Subset> members;
	for (const auto &s : f)
		members.push_back(to_engine(u, s));
	return rtop::SetFamily(u, std::move(members));
}

inline rtop::Covering covering_of(const rtop::UniverseRef &u, const brute::Family &f)
{
	return rtop::Covering(family_of(u, f));
}

inline rtop::BinaryRelation relation_of(const rtop::UniverseRef &u, const brute::Family &rights)
{
	std::vector<rtop::Subset> rows;
	for (const auto &r : rights)
		rows.push_back(to_engine(u, r));
	return rtop::BinaryRelation(u, std::move(rows));
}

inline rtop::Subset labels(const rtop::UniverseRef &u, std::vector<std::string> ls)
{
	return rtop::Subset::from_labels(u, ls);
}

/** U = {a,b,c,d}, tau = {empty, U, {d}, {c,d}}. */
struct PaperSpace {
	rtop::UniverseRef u = rtop::Universe::create({"a", "b", "c", "d"});
	rtop::Topology tau = rtop::generate_from_subbase(rtop::Subbase(
		rtop::SetFamily(u, {labels(u, {"d"}), labels(u, {"c", "d"})})));
	rtop::Covering cover = rtop::covering_from_topology(tau);
	rtop::BinaryRelation rel = rtop::relation_from_covering(cover);
};

} // namespace support

#endif // RTOP_TESTS_SUPPORT_HPP
