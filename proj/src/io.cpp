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

#include "rtop/io.hpp"

#include <fstream>
#include <sstream>

namespace rtop::io {

namespace {

void line_column(std::string_view text, std::size_t offset, std::size_t &line, std::size_t &column)
{
	line = 1;
	column = 1;
	for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
		if (text[i] == '\n') {
			++line;
			column = 1;
		} else {
			++column;
		}
	}
}

const json &require_key(const json &j, const char *key, const char *doc)
{
	if (!j.is_object())
		throw ParseError(std::string(doc) + " document must be a JSON object");
	auto it = j.find(key);
	if (it == j.end())
		throw ParseError(std::string(doc) + " document is missing \"" + key + "\"");
	return *it;
}

const json &require_array(const json &j, const std::string &what)
{
	if (!j.is_array())
		throw ParseError(what + " must be a JSON array");
	return j;
}

std::string require_string(const json &j, const std::string &what)
{
	if (!j.is_string())
		throw ParseError(what + " must be a string");
	return j.get<std::string>();
}

std::vector<std::string> string_array(const json &j, const std::string &what)
{
	require_array(j, what);
	std::vector<std::string> out;
	for (const auto &e : j)
		out.push_back(require_string(e, what + " entry"));
	return out;
}

json labels_json(const UniverseRef &u)
{
	return json(u->labels());
}

// Wraps model errors raised while interpreting a parsed document.
template <class F>
auto interpret(const char *doc, F &&f)
{
	try {
		return f();
	} catch (const ParseError &) {
		throw;
	} catch (const Error &e) {
		throw ParseError(std::string(doc) + ": " + e.what());
	}
}

} // namespace

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

json parse_json(std::string_view text)
{
	try {
		return json::parse(text.begin(), text.end());
	} catch (const json::parse_error &e) {
		std::size_t line = 0;
		std::size_t column = 0;
		line_column(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
		std::string msg = e.what();
		// strip nlohmann's "[json.exception.parse_error.101] " prefix
		if (auto pos = msg.find("] "); pos != std::string::npos)
			msg = msg.substr(pos + 2);
		throw ParseError(msg, line, column);
	}
}

UniverseRef universe_from_json(const json &j)
{
	const json &labels = j.is_object() ? require_key(j, "elements", "universe") : j;
	return interpret("universe", [&] { return Universe::create(string_array(labels, "universe elements")); });
}

json universe_to_json(const Universe &u)
{
	return json{{"elements", u.labels()}};
}

Subset subset_from_json(const UniverseRef &u, const json &j)
{
	const auto labels = string_array(j, "subset");
	return interpret("subset", [&] { return Subset::from_labels(u, labels); });
}

json subset_to_json(const Subset &s)
{
	return json(s.labels());
}

SetFamily family_from_json(const UniverseRef &u, const json &j)
{
	require_array(j, "family");
	std::vector<Subset> members;
	for (const auto &s : j)
		members.push_back(subset_from_json(u, s));
	return SetFamily(u, std::move(members));
}

json family_to_json(const SetFamily &f)
{
	json out = json::array();
	for (const auto &s : f)
		out.push_back(subset_to_json(s));
	return out;
}

Subset parse_subset_argument(const UniverseRef &u, std::string_view text)
{
	Subset out = Subset::empty(u);
	std::size_t start = 0;
	while (start <= text.size() && !text.empty()) {
		std::size_t end = text.find(',', start);
		if (end == std::string_view::npos)
			end = text.size();
		std::string_view item = text.substr(start, end - start);
		while (!item.empty() && item.front() == ' ')
			item.remove_prefix(1);
		while (!item.empty() && item.back() == ' ')
			item.remove_suffix(1);
		if (item.empty())
			throw ParseError("empty label in set argument '" + std::string(text) + "'");
		if (!u->contains(item))
			throw ParseError("unknown element '" + std::string(item) + "' in set argument");
		out.insert(u->index_of(item));
		start = end + 1;
	}
	return out;
}

namespace {

SetFamily sets_document(const json &j, const char *doc, UniverseRef &u)
{
	u = universe_from_json(require_key(j, "universe", doc));
	return family_from_json(u, require_key(j, "sets", doc));
}

} // namespace

Covering covering_from_json(const json &j)
{
	UniverseRef u;
	SetFamily sets = sets_document(j, "covering", u);
	return interpret("covering", [&] { return Covering(std::move(sets)); });
}

json covering_to_json(const Covering &c)
{
	return json{{"universe", labels_json(c.universe())}, {"sets", family_to_json(c.members())}};
}

Subbase subbase_from_json(const json &j)
{
	UniverseRef u;
	SetFamily sets = sets_document(j, "subbase", u);
	return Subbase(std::move(sets));
}

json subbase_to_json(const Subbase &s)
{
	return json{{"universe", labels_json(s.universe())}, {"sets", family_to_json(s.members())}};
}

Topology topology_from_json(const json &j)
{
	UniverseRef u;
	SetFamily sets = sets_document(j, "topology", u);
	return interpret("topology", [&] { return Topology::from_opens(sets); });
}

json topology_to_json(const Topology &t, std::size_t max_opens)
{
	return json{{"universe", labels_json(t.universe())}, {"sets", family_to_json(t.opens(max_opens))}};
}

BinaryRelation relation_from_json(const UniverseRef &u, const json &j)
{
	const json &pairs = require_array(require_key(j, "pairs", "relation"), "relation pairs");
	std::vector<std::pair<std::size_t, std::size_t>> idx;
	for (const auto &p : pairs) {
		const auto xy = string_array(p, "relation pair");
		if (xy.size() != 2)
			throw ParseError("relation pairs must have exactly two labels");
		interpret("relation", [&] {
			idx.emplace_back(u->index_of(xy[0]), u->index_of(xy[1]));
			return 0;
		});
	}
	return BinaryRelation::from_pairs(u, idx);
}

BinaryRelation relation_from_json(const json &j)
{
	return relation_from_json(universe_from_json(require_key(j, "universe", "relation")), j);
}

json relation_to_json(const BinaryRelation &rel)
{
	json pairs = json::array();
	const auto &u = rel.universe();
	for (const auto &[x, y] : rel.pairs())
		pairs.push_back(json::array({u->label(x), u->label(y)}));
	return json{{"universe", labels_json(u)}, {"pairs", std::move(pairs)}};
}

InformationSystem infosystem_from_json(const json &j)
{
	const auto objects = interpret("information system", [&] {
		return Universe::create(string_array(require_key(j, "objects", "information system"), "objects"));
	});
	const json &attrs = require_array(require_key(j, "attributes", "information system"), "attributes");
	std::vector<Attribute> attributes;
	for (const auto &a : attrs) {
		Attribute attr;
		attr.name = require_string(require_key(a, "name", "attribute"), "attribute name");
		const json &values = require_key(a, "values", "attribute");
		if (!values.is_object())
			throw ParseError("values of attribute '" + attr.name + "' must be an object keyed by object label");
		attr.values.resize(objects->size());
		std::vector<bool> given(objects->size(), false);
		for (auto it = values.begin(); it != values.end(); ++it) {
			if (!objects->contains(it.key()))
				throw ParseError("attribute '" + attr.name + "' names unknown object '" + it.key() + "'");
			const std::size_t x = objects->index_of(it.key());
			if (it.value().is_string())
				attr.values[x] = {it.value().get<std::string>()};
			else
				attr.values[x] = string_array(it.value(), "value set");
			given[x] = true;
		}
		for (std::size_t x = 0; x < given.size(); ++x)
			if (!given[x])
				throw ParseError("attribute '" + attr.name + "' has no entry for object '" +
				                 objects->label(x) + "'");
		attributes.push_back(std::move(attr));
	}
	return interpret("information system", [&] { return InformationSystem(objects, std::move(attributes)); });
}

json infosystem_to_json(const InformationSystem &is)
{
	json attrs = json::array();
	for (const auto &a : is.attributes()) {
		json values = json::object();
		for (std::size_t x = 0; x < a.values.size(); ++x)
			values[is.objects()->label(x)] = a.values[x];
		attrs.push_back(json{{"name", a.name}, {"values", std::move(values)}});
	}
	return json{{"objects", is.objects()->labels()}, {"attributes", std::move(attrs)}};
}

namespace {

std::string trim(std::string_view s)
{
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
		s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
		s.remove_suffix(1);
	return std::string(s);
}

struct Cell {
	std::string text;
	std::size_t column;
};

std::vector<Cell> split_row(std::string_view line)
{
	std::vector<Cell> cells;
	std::size_t start = 0;
	for (;;) {
		std::size_t end = line.find(',', start);
		if (end == std::string_view::npos)
			end = line.size();
		cells.push_back({trim(line.substr(start, end - start)), start + 1});
		if (end == line.size())
			break;
		start = end + 1;
	}
	return cells;
}

} // namespace

InformationSystem infosystem_from_csv(std::string_view text)
{
	std::vector<std::pair<std::size_t, std::string_view>> lines;
	std::size_t line_no = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos)
			end = text.size();
		++line_no;
		std::string_view line = text.substr(pos, end - pos);
		if (!trim(line).empty())
			lines.emplace_back(line_no, line);
		if (end == text.size())
			break;
		pos = end + 1;
	}
	if (lines.empty())
		throw ParseError("CSV information system is empty", 1, 1);

	const auto header = split_row(lines.front().second);
	const std::size_t header_line = lines.front().first;
	if (header.size() < 2)
		throw ParseError("CSV header needs an object column and at least one attribute", header_line, 1);
	std::vector<Attribute> attributes(header.size() - 1);
	for (std::size_t c = 1; c < header.size(); ++c) {
		if (header[c].text.empty())
			throw ParseError("empty attribute name in CSV header", header_line, header[c].column);
		attributes[c - 1].name = header[c].text;
	}

	std::vector<std::string> objects;
	for (std::size_t r = 1; r < lines.size(); ++r) {
		const auto [ln, line] = lines[r];
		const auto cells = split_row(line);
		if (cells.size() != header.size())
			throw ParseError("row has " + std::to_string(cells.size()) + " cells, header has " +
			                         std::to_string(header.size()),
			                 ln, 1);
		if (cells[0].text.empty())
			throw ParseError("empty object label", ln, cells[0].column);
		objects.push_back(cells[0].text);
		for (std::size_t c = 1; c < cells.size(); ++c) {
			ValueSet vs;
			std::string_view cell = cells[c].text;
			std::size_t s = 0;
			for (;;) {
				std::size_t e = cell.find('|', s);
				if (e == std::string_view::npos)
					e = cell.size();
				std::string v = trim(cell.substr(s, e - s));
				if (v.empty())
					throw ParseError("empty value in cell of attribute '" + attributes[c - 1].name + "'", ln,
					                 cells[c].column);
				vs.push_back(std::move(v));
				if (e == cell.size())
					break;
				s = e + 1;
			}
			attributes[c - 1].values.push_back(std::move(vs));
		}
	}
	if (objects.empty())
		throw ParseError("CSV information system has no object rows", header_line, 1);

	return interpret("information system", [&] {
		return InformationSystem(Universe::create(std::move(objects)), std::move(attributes));
	});
}

json reduct_report_to_json(const ReductReport &r)
{
	json nbhds = json::object();
	for (std::size_t x = 0; x < r.reference_min_nbhds.size(); ++x) {
		const auto &s = r.reference_min_nbhds[x];
		nbhds[s.universe()->label(x)] = subset_to_json(s);
	}
	return json{
		{"family", r.family},
		{"superfluous", r.superfluous},
		{"reducts", r.reducts},
		{"reference_min_nbhds", std::move(nbhds)},
		{"irredundancy", "no member of a reduct can be dropped without changing the generated topology"},
	};
}

} // namespace rtop::io
