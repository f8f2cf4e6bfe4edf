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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "process.hpp"
#include "rtop/io.hpp"
#include "rtop/verifier.hpp"

#ifndef RTOP_CLI_PATH
#error "RTOP_CLI_PATH must point at the rtop executable"
#endif

namespace fs = std::filesystem;
using rtop::io::json;

namespace {

struct Workdir {
	fs::path dir;

	Workdir()
	{
		dir = fs::temp_directory_path() / ("rtop-cli-" + std::to_string(::getpid()));
		fs::create_directories(dir);
	}
	~Workdir() { fs::remove_all(dir); }

	std::string file(const std::string &name, const std::string &content) const
	{
		const fs::path p = dir / name;
		std::ofstream(p) << content;
		return p.string();
	}
};

process::Result cli(const std::string &args, bool keep_stderr = false)
{
	return process::run(std::string("\"") + RTOP_CLI_PATH + "\" " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null"));
}

const char *kPaperRelation =
	R"({"universe":["a","b","c","d"],"pairs":[["a","a"],["a","b"],["a","c"],["a","d"],["b","a"],["b","b"],["b","c"],["b","d"],["c","c"],["c","d"],["d","d"]]})";
const char *kPaperTopology = R"({"universe":["a","b","c","d"],"sets":[[],["d"],["c","d"],["a","b","c","d"]]})";

} // namespace

TEST_CASE("cli: set-union upper approximation on the four-point relation")
{
	Workdir w;
	const auto r = cli("approx --op yao3 --side upper --relation " + w.file("r.json", kPaperRelation) + " --set a,b");
	CHECK(r.status == 0);
	CHECK(json::parse(r.out) == json({"a", "b"}));
	const auto z = cli("approx --op zhu --side upper --topology " + w.file("t.json", kPaperTopology) + " --set a,b");
	CHECK(z.status == 2);
}

TEST_CASE("cli: topology generated from a subbase")
{
	Workdir w;
	const auto r = cli("topo gen --subbase " +
	                   w.file("s.json", R"({"universe":["a","b","c","d"],"sets":[["d"],["c","d"]]})"));
	REQUIRE(r.status == 0);
	const auto j = json::parse(r.out);
	CHECK(j["sets"].size() == 4);
	CHECK(j == json::parse(kPaperTopology));

	const auto ops = cli("topo ops --topology " + w.file("t.json", r.out) + " --set a,b");
	REQUIRE(ops.status == 0);
	const auto o = json::parse(ops.out);
	CHECK(o["interior"] == json::array());
	CHECK(o["closure"] == json({"a", "b"}));
	CHECK(o["boundary"] == json({"a", "b"}));
	CHECK(o["exact"] == false);
}

TEST_CASE("cli: printed structures reparse to equal structures")
{
	Workdir w;
	const auto gen = cli("topo gen --relation " + w.file("r.json", kPaperRelation));
	REQUIRE(gen.status == 0);
	const auto again = cli("topo gen --subbase " + w.file("t.json", gen.out));
	REQUIRE(again.status == 0);
	CHECK(json::parse(again.out) == json::parse(gen.out));

	const auto tr = cli("transform --topology " + w.file("tau.json", kPaperTopology));
	REQUIRE(tr.status == 0);
	CHECK(json::parse(tr.out).dump().find(R"([["d"],["c","d"],["a","b","c","d"]])") != std::string::npos);
}

TEST_CASE("cli: malformed input exits 2 with a position")
{
	Workdir w;
	const std::string bad = w.file("bad.json", "{\n  \"universe\": [\"a\",\n  ]\n}");
	const auto r = cli("topo gen --subbase " + bad, true);
	CHECK(r.status == 2);
	CHECK(r.out.find("bad.json:3:3:") != std::string::npos);

	const auto csv = cli("infosys topo --file " + w.file("is.csv", "object,a\nx,1\ny,\n"), true);
	CHECK(csv.status == 2);
	CHECK(csv.out.find("is.csv:3:") != std::string::npos);

	CHECK(cli("approx --op yao9 --side upper --relation " + w.file("r.json", kPaperRelation) + " --set a").status == 2);
	CHECK(cli("verify --n-max 25").status == 2);
	CHECK(cli("topo gen --subbase /nonexistent/s.json").status == 2);
	CHECK(cli("").status == 2);
}

TEST_CASE("cli: information systems and reducts")
{
	Workdir w;
	const std::string is = w.file(
		"is.json",
		R"({"objects":["x","y","z"],"attributes":[{"name":"a1","values":{"x":["1"],"y":["1","2"],"z":["2"]}},{"name":"id","values":{"x":"p","y":"q","z":"r"}}]})");
	const auto t = cli("infosys topo --file " + is + " --attrs a1");
	REQUIRE(t.status == 0);
	CHECK(json::parse(t.out)["sets"].size() == 5);
	const auto s = cli("infosys subbase --file " + is + " --attrs a1");
	REQUIRE(s.status == 0);
	CHECK(json::parse(s.out)["sets"] == json::parse(R"([["x","y"],["y","z"],["x","y","z"]])"));

	const auto csv = cli("infosys relation --file " + w.file("is.csv", "object,a1\nx,1\ny,1|2\nz,2\n") + " --attrs a1");
	REQUIRE(csv.status == 0);
	CHECK(json::parse(csv.out)["pairs"].size() == 7);

	const auto red = cli("reduct --infosys " + is);
	REQUIRE(red.status == 0);
	const auto j = json::parse(red.out);
	CHECK(j["reducts"] == json::parse(R"([["id"]])"));
	CHECK(j["superfluous"] == json({"a1"}));

	const auto rels = cli("reduct --relations " + w.file("r1.json", kPaperRelation) + " " +
	                      w.file("r2.json", kPaperRelation));
	REQUIRE(rels.status == 0);
	CHECK(json::parse(rels.out)["reducts"] == json::parse(R"([["r1"],["r2"]])"));
}

TEST_CASE("cli: verify covers every claim and is reproducible")
{
	const auto r = cli("verify --claims all --paper-instances");
	REQUIRE(r.status == 0);
	std::set<std::string> claims;
	std::istringstream lines(r.out);
	for (std::string line; std::getline(lines, line);)
		claims.insert(json::parse(line)["claim"].get<std::string>());
	for (auto id : rtop::verify::kClaimIds)
		CHECK(claims.count(std::string(id)) == 1);

	const auto a = cli("verify --claims P3.2,P3.3 --trials 20 --seed 9");
	const auto b = cli("verify --claims P3.2,P3.3 --trials 20 --seed 9");
	CHECK(a.status == 0);
	CHECK(a.out == b.out);
	CHECK_FALSE(a.out.empty());

	Workdir w;
	const std::string out = (w.dir / "report.jsonl").string();
	REQUIRE(cli("verify --claims P3.2,P3.3 --trials 20 --seed 9 --out " + out).status == 0);
	std::ifstream in(out);
	std::stringstream ss;
	ss << in.rdbuf();
	CHECK(ss.str() == a.out);
}

TEST_CASE("cli: version")
{
	const auto r = cli("--version");
	CHECK(r.status == 0);
	CHECK(r.out.find("rtop 0.1.0") != std::string::npos);
}
