/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/engine.hpp"
#include "valsat/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace valsat;

namespace {

enum Exit { kOk = 0, kInput = 1, kUnsatisfiable = 2, kBudget = 3 };

struct Session {
	std::size_t n = 1;
	std::string mode = "group";
	Budgets budgets;
	std::string out;
};

/* splits at commas outside brackets and parentheses */
std::vector<std::string> split_top(const std::string &s)
{
	std::vector<std::string> out;
	std::string cur;
	int depth = 0;
	for (char c : s) {
		if (c == '[' || c == '(')
			depth++;
		else if (c == ']' || c == ')')
			depth--;
		if (c == ',' && depth == 0) {
			out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (cur.find_first_not_of(" \t") != std::string::npos)
		out.push_back(cur);
	return out;
}

std::vector<HahnSeries> series_list(const std::vector<std::string> &args, std::size_t n)
{
	std::vector<HahnSeries> out;
	for (const auto &a : args)
		for (const auto &s : split_top(a))
			out.push_back(parse_series(s, n));
	return out;
}

std::string join(const std::vector<HahnSeries> &xs)
{
	std::string s;
	for (std::size_t i = 0; i < xs.size(); i++)
		s += (i ? ", " : "") + xs[i].to_string();
	return s;
}

void emit(const Session &cfg, const std::string &text)
{
	if (cfg.out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(cfg.out, std::ios::binary);
	if (!f || !(f << text))
		throw std::ios_base::failure("cannot write " + cfg.out);
}

std::string read_file(const std::string &path)
{
	std::ifstream f(path, std::ios::binary);
	if (!f)
		throw std::ios_base::failure("cannot read " + path);
	std::ostringstream s;
	s << f.rdbuf();
	return s.str();
}

int cmd_realize(const Session &cfg, const std::string &path)
{
	const Mode mode = parse_mode(cfg.mode);
	TypeSpec spec = parse_type_file(read_file(path), cfg.n, mode);
	try {
		auto report = realize_type(spec.type, spec.env(), mode, cfg.budgets);
		emit(cfg, report.to_string());
		return report.verified() ? kOk : kBudget;
	} catch (const NotFinitelySatisfiable &e) {
		emit(cfg, std::string("COMPLETION\nnot finitely satisfiable: ") + e.what() + "\n");
		std::cerr << "valsat: " << e.what() << "\n";
		return kUnsatisfiable;
	} catch (const BudgetExhausted &e) {
		emit(cfg, std::string("CLASSIFICATION\ninconclusive\n") + e.what() + "\n");
		std::cerr << "valsat: budget exhausted: " << e.what() << "\n";
		return kBudget;
	} catch (const PseudoLimitUnverified &e) {
		emit(cfg, std::string("CLASSIFICATION\ninconclusive\n") + e.what() + "\n");
		std::cerr << "valsat: pseudo-limit unverified: " << e.what() << "\n";
		return kBudget;
	}
}

int cmd_basis(const Session &cfg, const std::vector<std::string> &args)
{
	auto b = valuation_basis(series_list(args, cfg.n));
	emit(cfg, join(b.generators) + "\n");
	return kOk;
}

int cmd_pseudo_limit(const Session &cfg, const std::vector<std::string> &args)
{
	auto seq = series_list(args, cfg.n);
	if (seq.empty())
		throw PreconditionViolated("pseudo-limit needs a sequence");
	PseudoSequence ps(seq);
	if (seq.size() >= 3 && !check_pseudo_cauchy(ps, seq.size()))
		throw PreconditionViolated("sequence is not pseudo-Cauchy");
	emit(cfg, pseudo_limit(ps, seq.size()).to_string() + "\n");
	return kOk;
}

int cmd_eval(const Session &cfg, const std::string &formula, const std::vector<std::string> &bindings)
{
	Env env(cfg.n);
	for (const auto &b : bindings) {
		auto eq = b.find('=');
		if (eq == std::string::npos)
			throw PreconditionViolated("binding '" + b + "' is not NAME=SERIES");
		env = env.with(b.substr(0, eq), parse_series(b.substr(eq + 1), cfg.n));
	}
	emit(cfg, std::string(eval(parse_formula(formula, cfg.n), env) ? "true" : "false") + "\n");
	return kOk;
}

OracleReal parse_real(const std::string &s)
{
	return OracleReal::exact(parse_coefficient(s).to_algebraic());
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Realize computable types in Hahn series models"};
	app.require_subcommand(1);
	Session cfg;
	app.add_option("--dim", cfg.n, "exponent dimension")->check(CLI::PositiveNumber);
	app.add_option("--mode", cfg.mode, "group or field")->check(CLI::IsMember({"group", "field"}));
	app.add_option("--height", cfg.budgets.height, "height budget")->check(CLI::PositiveNumber);
	app.add_option("--denom", cfg.budgets.denominator, "exponent denominator budget")->check(CLI::PositiveNumber);
	app.add_option("--prefix", cfg.budgets.prefix, "formula prefix budget")->check(CLI::PositiveNumber);
	app.add_option("--precision", cfg.budgets.precision, "bisection steps")->check(CLI::PositiveNumber);
	app.add_option("--out", cfg.out, "write the result to FILE");

	std::string path, formula, node, real_arg;
	std::vector<std::string> list, nodes;
	std::size_t depth = 12;
	std::function<int()> run;

	auto *realize = app.add_subcommand("realize", "realize a type file and print the report");
	realize->add_option("file", path)->required();
	realize->callback([&] { run = [&] { return cmd_realize(cfg, path); }; });

	auto *qe = app.add_subcommand("qe", "eliminate quantifiers");
	qe->add_option("formula", formula)->required();
	qe->callback([&] {
		run = [&] {
			emit(cfg, doag_qe(parse_formula(formula, cfg.n)).to_string() + "\n");
			return int(kOk);
		};
	});

	auto *basis = app.add_subcommand("basis", "valuation basis of a list of series");
	basis->add_option("series", list)->required();
	basis->callback([&] { run = [&] { return cmd_basis(cfg, list); }; });

	auto *plim = app.add_subcommand("pseudo-limit", "pseudo-limit of a pseudo-Cauchy prefix");
	plim->add_option("series", list)->required();
	plim->callback([&] { run = [&] { return cmd_pseudo_limit(cfg, list); }; });

	auto *ev = app.add_subcommand("eval", "truth of a formula under NAME=SERIES bindings");
	ev->add_option("formula", formula)->required();
	ev->add_option("bindings", list);
	ev->callback([&] { run = [&] { return cmd_eval(cfg, formula, list); }; });

	auto *tree = app.add_subcommand("tree", "binary tree coding");
	tree->require_subcommand(1);
	auto *interval = tree->add_subcommand("interval", "dyadic interval of a node");
	interval->add_option("node", node)->required();
	interval->callback([&] {
		run = [&] {
			emit(cfg, node_interval(BinString::parse(node)).to_string() + "\n");
			return int(kOk);
		};
	});
	auto *path_cmd = tree->add_subcommand("path", "nodes of the full tree along a real in [0, 1)");
	path_cmd->add_option("real", real_arg)->required();
	path_cmd->add_option("--depth", depth);
	path_cmd->callback([&] {
		run = [&] {
			std::string s;
			for (const auto &b : path_from_real(TreeOracle::full(), parse_real(real_arg), depth))
				s += (b.length() ? b.to_string() : "\"\"") + "\n";
			emit(cfg, s);
			return int(kOk);
		};
	});
	auto *search = tree->add_subcommand("search", "leftmost path through the tree generated by nodes");
	search->add_option("nodes", nodes);
	search->add_option("--depth", depth);
	search->callback([&] {
		run = [&] {
			std::vector<BinString> ns;
			for (const auto &s : nodes) {
				auto b = BinString::parse(s == "\"\"" ? "" : s);
				for (std::size_t k = 0; k <= b.length(); k++)
					ns.push_back(b.prefix(k));
			}
			auto p = find_path_bounded(TreeOracle::from_nodes(ns), depth);
			emit(cfg, (p ? (p->length() ? p->to_string() : "\"\"") : std::string("none")) + "\n");
			return int(kOk);
		};
	});

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? kOk : kInput;
	}
	try {
		return run();
	} catch (const Error &e) {
		std::cerr << "valsat: " << e.what() << "\n";
		return kInput;
	} catch (const std::ios_base::failure &e) {
		std::cerr << "valsat: " << e.what() << "\n";
		return kInput;
	}
}
