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

#ifndef RTOP_IO_HPP
#define RTOP_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "rtop/core_sets.hpp"
#include "rtop/coverings.hpp"
#include "rtop/infosystem.hpp"
#include "rtop/reducts.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"

namespace rtop::io {

using json = nlohmann::ordered_json;

/** Reads a whole file; throws ParseError if it cannot be opened. */
std::string read_file(const std::string &path);

/** Parses JSON text, reporting syntax errors with 1-based line and column. */
json parse_json(std::string_view text);

// Universe: {"elements": [...]} or a bare label array.
UniverseRef universe_from_json(const json &j);
json universe_to_json(const Universe &u);

// Subsets are label arrays; families are arrays of subsets.
Subset subset_from_json(const UniverseRef &u, const json &j);
json subset_to_json(const Subset &s);
SetFamily family_from_json(const UniverseRef &u, const json &j);
json family_to_json(const SetFamily &f);

/** Comma-separated labels as given on the command line; "" is the empty set. */
Subset parse_subset_argument(const UniverseRef &u, std::string_view text);

// Covering, subbase and topology documents: {"universe": [...], "sets": [...]}.
Covering covering_from_json(const json &j);
json covering_to_json(const Covering &c);
Subbase subbase_from_json(const json &j);
json subbase_to_json(const Subbase &s);
/** The sets must be the complete open family. */
Topology topology_from_json(const json &j);
json topology_to_json(const Topology &t, std::size_t max_opens = kDefaultMaxOpens);

// Relation document: {"universe": [...], "pairs": [["a","b"], ...]}, optional "name".
BinaryRelation relation_from_json(const json &j);
json relation_to_json(const BinaryRelation &rel);
/** Relation read against an existing universe (labels must match). */
BinaryRelation relation_from_json(const UniverseRef &u, const json &j);

// Information system: {"objects": [...], "attributes": [{"name": ..., "values": {obj: [v...]}}]}.
InformationSystem infosystem_from_json(const json &j);
json infosystem_to_json(const InformationSystem &is);
/**
 * Header `object,a1,a2,...`; one row per object; each cell a `|`-separated
 * value set. Blank lines are skipped. Errors carry line and column.
 */
InformationSystem infosystem_from_csv(std::string_view text);

json reduct_report_to_json(const ReductReport &r);

} // namespace rtop::io

#endif // RTOP_IO_HPP
