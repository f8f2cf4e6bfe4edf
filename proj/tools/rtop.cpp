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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtop/approximations.hpp"
#include "rtop/coverings.hpp"
#include "rtop/infosystem.hpp"
#include "rtop/io.hpp"
#include "rtop/reducts.hpp"
#include "rtop/relations.hpp"
#include "rtop/topology.hpp"
#include "rtop/verifier.hpp"

namespace {

constexpr const char *kVersion = "rtop 0.1.0";

using rtop::io::json;

// Errors in user input: exit code 2.
struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::size_t max_opens()
{
	const char *env = std::getenv("RTOP_MAX_OPENS");
	if (!env || !*env)
		return rtop::kDefaultMaxOpens;
	try {
		std::size_t used = 0;
		const unsigned long long v = std::stoull(env, &used);
		if (used != std::string(env).size() || v == 0)
			throw std::invalid_argument(env);
		return static_cast<std::size_t>(v);
	} catch (const std::exception &) {
		throw UsageError(std::string("RTOP_MAX_OPENS must be a positive integer, got '") + env + "'");
	}
}

// Runs `f` and prefixes any error with the file it came from.
template <class F>
auto from_file(const std::string &path, F &&f)
{
	try {
		return f();
	} catch (const rtop::ParseError &e) {
		std::string where = path;
		if (e.line() != 0)
			where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
		throw UsageError(where + ": " + e.what());
	} catch (const rtop::Error &e) {
		throw UsageError(path + ": " + e.what());
	} catch (const json::exception &e) {
		throw UsageError(path + ": " + e.what());
	}
}

json load_json(const std::string &path)
{
	return from_file(path, [&] { return rtop::io::parse_json(rtop::io::read_file(path)); });
}

rtop::Covering load_covering(const std::string &path)
{
	const json j = load_json(path);
	return from_file(path, [&] { return rtop::io::covering_from_json(j); });
}

rtop::BinaryRelation load_relation(const std::string &path)
{
	const json j = load_json(path);
	return from_file(path, [&] { return rtop::io::relation_from_json(j); });
}

rtop::Topology load_topology(const std::string &path)
{
	const json j = load_json(path);
	return from_file(path, [&] { return rtop::io::topology_from_json(j); });
}

rtop::Subbase load_subbase(const std::string &path)
{
	const json j = load_json(path);
	return from_file(path, [&] { return rtop::io::subbase_from_json(j); });
}

rtop::InformationSystem load_infosystem(const std::string &path)
{
	if (std::filesystem::path(path).extension() == ".csv")
		return from_file(path, [&] { return rtop::io::infosystem_from_csv(rtop::io::read_file(path)); });
	const json j = load_json(path);
	return from_file(path, [&] { return rtop::io::infosystem_from_json(j); });
}

rtop::Subset parse_set(const rtop::UniverseRef &u, const std::string &text)
{
	try {
		return rtop::io::parse_subset_argument(u, text);
	} catch (const rtop::Error &e) {
		throw UsageError(std::string("--set: ") + e.what());
	}
}

std::vector<std::string> split_commas(const std::string &text)
{
	std::vector<std::string> out;
	std::string item;
	std::istringstream ss(text);
	while (std::getline(ss, item, ','))
		if (!item.empty())
			out.push_back(item);
	return out;
}

void print(const json &j)
{
	std::cout << j.dump() << '\n';
}

// topo

struct TopoArgs {
	std::string subbase;
	std::string relation;
	std::string topology;
	std::string set;
};

int run_topo_gen(const TopoArgs &a)
{
	const std::size_t cap = max_opens();
	rtop::Topology t = !a.subbase.empty() ? rtop::generate_from_subbase(load_subbase(a.subbase))
	                                      : rtop::generate_from_subbase(rtop::subbase_from_relation(load_relation(a.relation)));
	print(rtop::io::topology_to_json(t, cap));
	return 0;
}

int run_topo_ops(const TopoArgs &a)
{
	const rtop::Topology t = load_topology(a.topology);
	const rtop::Subset x = parse_set(t.universe(), a.set);
	json out{{"set", x.labels()},
	         {"interior", rtop::interior(t, x).labels()},
	         {"closure", rtop::closure(t, x).labels()},
	         {"boundary", rtop::boundary(t, x).labels()},
	         {"exact", rtop::is_exact(t, x)}};
	print(out);
	return 0;
}

// approx

struct ApproxArgs {
	std::string op;
	std::string side;
	std::string covering;
	std::string relation;
	std::string topology;
	std::string set;
};

int run_approx(const ApproxArgs &a)
{
	const auto op = rtop::parse_operator(a.op);
	if (!op)
		throw UsageError("--op must be one of zhu, xu-zhang, yao3, yao4, topo");
	const auto side = rtop::parse_side(a.side);
	if (!side)
		throw UsageError("--side must be lower or upper");
	const int given = !a.covering.empty() + !a.relation.empty() + !a.topology.empty();
	if (given != 1)
		throw UsageError("give exactly one of --covering, --relation, --topology");

	std::optional<rtop::ApproxResult> r;
	try {
		if (!a.covering.empty()) {
			const auto c = load_covering(a.covering);
			r = rtop::approximate(*op, c, parse_set(c.universe(), a.set));
		} else if (!a.relation.empty()) {
			const auto rel = load_relation(a.relation);
			r = rtop::approximate(*op, rel, parse_set(rel.universe(), a.set));
		} else {
			const auto t = load_topology(a.topology);
			r = rtop::approximate(*op, t, parse_set(t.universe(), a.set));
		}
	} catch (const rtop::InvalidStructure &e) {
		throw UsageError(e.what());
	}
	print(json(*side == rtop::Side::lower ? r->lower.labels() : r->upper.labels()));
	return 0;
}

// infosys

struct InfosysArgs {
	std::string file;
	std::string attrs;
};

std::vector<std::string> chosen_attributes(const rtop::InformationSystem &is, const std::string &attrs)
{
	const auto known = is.attribute_names();
	auto names = attrs.empty() ? known : split_commas(attrs);
	for (const auto &n : names)
		if (std::find(known.begin(), known.end(), n) == known.end())
			throw UsageError("unknown attribute '" + n + "'");
	if (names.empty())
		throw UsageError("no attributes selected");
	return names;
}

std::string single_attribute(const rtop::InformationSystem &is, const std::string &attrs)
{
	const auto names = chosen_attributes(is, attrs);
	if (names.size() != 1)
		throw UsageError("this command needs exactly one attribute (--attrs NAME)");
	return names.front();
}

int run_infosys(const std::string &what, const InfosysArgs &a)
{
	const auto is = load_infosystem(a.file);
	if (what == "topo") {
		print(rtop::io::topology_to_json(rtop::combined_topology(is, chosen_attributes(is, a.attrs)), max_opens()));
	} else if (what == "relation") {
		print(rtop::io::relation_to_json(rtop::relation_for_attribute(is, single_attribute(is, a.attrs))));
	} else if (what == "covering") {
		print(rtop::io::covering_to_json(rtop::attribute_covering(is, single_attribute(is, a.attrs))));
	} else {
		print(rtop::io::subbase_to_json(rtop::attribute_subbase(is, single_attribute(is, a.attrs))));
	}
	return 0;
}

// reduct

struct ReductArgs {
	std::string infosys;
	std::string attrs;
	std::vector<std::string> relations;
};

int run_reduct(const ReductArgs &a)
{
	if (a.infosys.empty() == a.relations.empty())
		throw UsageError("give either --infosys or --relations");
	std::optional<rtop::RelationFamily> fam;
	std::vector<std::string> names;
	if (!a.infosys.empty()) {
		const auto is = load_infosystem(a.infosys);
		fam.emplace(rtop::RelationFamily::from_information_system(is));
		names = chosen_attributes(is, a.attrs);
	} else {
		rtop::UniverseRef u;
		std::vector<rtop::NamedRelation> rels;
		for (const auto &path : a.relations) {
			const json j = load_json(path);
			auto rel = from_file(path, [&] {
				const auto own = rtop::io::universe_from_json(j.at("universe"));
				if (!u)
					u = own;
				else if (!rtop::same_universe(u, own))
					throw rtop::InvalidStructure("universe differs from the first relation file");
				return rtop::io::relation_from_json(u, j);
			});
			std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
			                                                                : std::filesystem::path(path).stem().string();
			rels.push_back({std::move(name), std::move(rel)});
		}
		try {
			fam.emplace(u, std::move(rels));
		} catch (const rtop::Error &e) {
			throw UsageError(e.what());
		}
		names = fam->names();
	}
	print(rtop::io::reduct_report_to_json(rtop::minimal_reducts(*fam, names)));
	return 0;
}

// transform

int run_transform(const std::string &covering, const std::string &topology)
{
	if (covering.empty() == topology.empty())
		throw UsageError("give exactly one of --covering, --topology");
	const rtop::Covering c =
		!covering.empty() ? load_covering(covering) : rtop::covering_from_topology(load_topology(topology), max_opens());
	print(rtop::io::covering_to_json(rtop::neighborhood_transform(c)));
	return 0;
}

// verify

struct VerifyArgs {
	std::string claims = "all";
	std::size_t n_max = 6;
	std::optional<std::size_t> trials;
	std::uint64_t seed = 42;
	bool paper_instances = false;
	std::string out;
};

int run_verify(const VerifyArgs &a)
{
	rtop::verify::SuiteConfig config;
	config.claims = split_commas(a.claims);
	config.n_max = a.n_max;
	config.seed = a.seed;
	config.paper_instances = a.paper_instances || !a.trials;
	config.trials = a.trials ? *a.trials : (a.paper_instances ? 0 : 100);
	try {
		rtop::verify::validate(config);
	} catch (const rtop::Error &e) {
		throw UsageError(e.what());
	}

	const auto report = rtop::verify::run_suite(config);
	const std::string lines = rtop::verify::to_jsonl(report);
	if (a.out.empty()) {
		std::cout << lines;
	} else {
		std::ofstream out(a.out, std::ios::binary);
		if (!out)
			throw UsageError("cannot write '" + a.out + "'");
		out << lines;
	}
	std::cerr << rtop::verify::summary_table(report);
	return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Covering rough sets and finite topologies"};
	app.set_version_flag("--version", kVersion);
	app.require_subcommand(1);

	TopoArgs topo;
	auto *topo_cmd = app.add_subcommand("topo", "Finite topologies");
	topo_cmd->require_subcommand(1);
	auto *gen = topo_cmd->add_subcommand("gen", "Generate a topology from a subbase or a relation");
	auto *gen_sub = gen->add_option("--subbase", topo.subbase, "Subbase document")->check(CLI::ExistingFile);
	auto *gen_rel = gen->add_option("--relation", topo.relation, "Relation document; subbase {r(x)}")->check(CLI::ExistingFile);
	gen_sub->excludes(gen_rel);
	gen->require_option(1);
	auto *ops = topo_cmd->add_subcommand("ops", "Interior, closure and boundary of a set");
	ops->add_option("--topology", topo.topology, "Topology document (all open sets)")->required()->check(CLI::ExistingFile);
	ops->add_option("--set", topo.set, "Comma-separated labels")->required();

	ApproxArgs approx;
	auto *approx_cmd = app.add_subcommand("approx", "Evaluate an approximation operator");
	approx_cmd->add_option("--op", approx.op, "zhu | xu-zhang | yao3 | yao4 | topo")->required();
	approx_cmd->add_option("--side", approx.side, "lower | upper")->required();
	approx_cmd->add_option("--covering", approx.covering, "Covering document")->check(CLI::ExistingFile);
	approx_cmd->add_option("--relation", approx.relation, "Relation document")->check(CLI::ExistingFile);
	approx_cmd->add_option("--topology", approx.topology, "Topology document")->check(CLI::ExistingFile);
	approx_cmd->add_option("--set", approx.set, "Comma-separated labels")->required();

	InfosysArgs infosys;
	std::string infosys_what;
	auto *infosys_cmd = app.add_subcommand("infosys", "Structures derived from an information system");
	infosys_cmd->add_option("what", infosys_what, "topo | relation | covering | subbase")
		->required()
		->check(CLI::IsMember({"topo", "relation", "covering", "subbase"}));
	infosys_cmd->add_option("--file", infosys.file, "JSON or .csv information system")->required()->check(CLI::ExistingFile);
	infosys_cmd->add_option("--attrs", infosys.attrs, "Comma-separated attribute names (default: all)");

	ReductArgs reduct;
	auto *reduct_cmd = app.add_subcommand("reduct", "Minimal reducts of a relation family");
	reduct_cmd->add_option("--infosys", reduct.infosys, "Information system (one relation per attribute)")
		->check(CLI::ExistingFile);
	reduct_cmd->add_option("--attrs", reduct.attrs, "Restrict to these attributes");
	reduct_cmd->add_option("--relations", reduct.relations, "Relation documents")->check(CLI::ExistingFile);

	std::string tr_covering;
	std::string tr_topology;
	auto *transform_cmd = app.add_subcommand("transform", "Neighbourhood transform F(C) = {N(x)}");
	transform_cmd->add_option("--covering", tr_covering, "Covering document")->check(CLI::ExistingFile);
	transform_cmd->add_option("--topology", tr_topology, "Topology document, used as a covering")->check(CLI::ExistingFile);

	VerifyArgs verify;
	auto *verify_cmd = app.add_subcommand("verify", "Adjudicate every claim by exhaustive evaluation");
	verify_cmd->add_option("--claims", verify.claims, "all, or comma-separated claim ids / prefixes")
		->capture_default_str();
	verify_cmd->add_option("--n-max", verify.n_max, "Largest random universe")->capture_default_str();
	verify_cmd->add_option("--trials", verify.trials, "Random trials (default 100, or 0 with --paper-instances)");
	verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
	verify_cmd->add_flag("--paper-instances", verify.paper_instances, "Include the fixed worked instances");
	verify_cmd->add_option("--out", verify.out, "Write the JSON-lines report here instead of stdout");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (topo_cmd->parsed())
			return gen->parsed() ? run_topo_gen(topo) : run_topo_ops(topo);
		if (approx_cmd->parsed())
			return run_approx(approx);
		if (infosys_cmd->parsed())
			return run_infosys(infosys_what, infosys);
		if (reduct_cmd->parsed())
			return run_reduct(reduct);
		if (transform_cmd->parsed())
			return run_transform(tr_covering, tr_topology);
		if (verify_cmd->parsed())
			return run_verify(verify);
	} catch (const UsageError &e) {
		std::cerr << "rtop: " << e.what() << '\n';
		return 2;
	} catch (const rtop::CapExceeded &e) {
		std::cerr << "rtop: " << e.what() << '\n';
		return 2;
	} catch (const rtop::Error &e) {
		std::cerr << "rtop: " << e.what() << '\n';
		return 1;
	}
	return 2;
}
