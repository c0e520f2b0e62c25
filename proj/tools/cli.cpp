//
// Copyright (c) 2026 The hexeval authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include "cli.hpp"

#include <hexeval/builtins.hpp>
#include <hexeval/error.hpp>
#include <hexeval/grounder.hpp>
#include <hexeval/parser.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace hexeval::cli {

SolverConfig CliConfig::solver_config() const {
	SolverConfig sc;
	sc.partial_eval   = partial_eval;
	sc.eval_frequency = eval_frequency;
	sc.minimization   = minimize;
	sc.flp            = flp;
	sc.max_models     = models;
	sc.optimize       = opt;
	return sc;
}

namespace {

std::string read_inputs(const CliConfig& config, std::istream& in) {
	std::ostringstream text;
	if (config.inputs.empty()) {
		text << in.rdbuf();
		return text.str();
	}
	for (const std::string& path : config.inputs) {
		std::ifstream file(path, std::ios::binary);
		if (!file) { throw Error("cannot read '" + path + "'"); }
		text << file.rdbuf() << '\n';
	}
	return text.str();
}

using AtomTexts = std::vector<std::string>;

AtomTexts texts_of(const GroundProgram& gp, const AnswerSet& as) {
	AtomTexts atoms;
	for (AtomId a : as) { atoms.push_back(gp.table.text(a)); }
	std::sort(atoms.begin(), atoms.end());
	return atoms;
}

// Answer sets are printed in lexicographic order of their sorted atoms, which
// makes the output independent of the search order.
std::vector<AtomTexts> sorted_answers(const GroundProgram& gp, const std::vector<AnswerSet>& sets) {
	std::vector<AtomTexts> out;
	for (const AnswerSet& as : sets) { out.push_back(texts_of(gp, as)); }
	std::sort(out.begin(), out.end());
	return out;
}

void print_answer(std::ostream& out, std::size_t n, const AtomTexts& atoms) {
	out << "Answer " << n << ": {";
	for (std::size_t i = 0; i != atoms.size(); ++i) { out << (i ? ", " : "") << atoms[i]; }
	out << "}\n";
}

void print_cost(std::ostream& out, const CostVector& cost) {
	out << "Cost:";
	if (cost.empty()) { out << " 0@0"; }
	for (auto [level, weight] : cost) { out << ' ' << weight << '@' << level; }
	out << '\n';
}

} // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
	try {
		if (config.eval_frequency == 0) { throw Error("--eval-frequency must be positive"); }
		PluginRegistry registry = builtins::registry();
		ParseOptions   popts;
		popts.signatures        = registry.signatures();
		popts.allow_disjunction = config.allow_disjunction;
		Program program = parse_program(read_inputs(config, in), popts);

		GroundingConfig gc;
		gc.max_invention = config.max_invention;
		GroundProgram gp = ground_program(program, registry, gc);
		if (config.dump_ground) { dump(out, gp); }

		Solver      solver(gp, registry, config.solver_config());
		SolverStats stats;
		std::size_t found = 0;
		if (config.opt) {
			OptimizeResult res = solver.optimize();
			for (const AtomTexts& as : sorted_answers(gp, res.optimal)) {
				print_answer(out, ++found, as);
				print_cost(out, res.cost);
			}
			if (res.satisfiable) { out << "OPTIMUM FOUND\n"; }
			stats = res.stats;
		}
		else {
			SolveResult res = solver.solve();
			for (const AtomTexts& as : sorted_answers(gp, res.answer_sets)) { print_answer(out, ++found, as); }
			stats = res.stats;
		}
		if (found == 0) { out << "UNSATISFIABLE\n"; }
		if (config.stats) { print_stats(out, stats); }
		out.flush();
		return found ? exit_satisfiable : exit_unsatisfiable;
	}
	catch (const InventionBudgetError& e) {
		err << "error: " << e.what() << '\n';
		return exit_budget;
	}
	catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	}
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
	CLI::App  app{"Evaluates HEX programs with the built-in external atoms.", "hexeval"};
	CliConfig config;

	const std::map<std::string, bool>         on_off{{"on", true}, {"off", false}};
	const std::map<std::string, Minimization> minimize{{"off", Minimization::Off}, {"deletion", Minimization::Deletion}, {"qxp", Minimization::QuickXplain}};
	const std::map<std::string, FlpMode>      flp{{"explicit", FlpMode::Explicit}, {"skip-auto", FlpMode::SkipAuto}, {"off", FlpMode::Off}};

	app.add_option("inputs", config.inputs, "Program files (stdin if none)");
	app.add_option("--models,-n", config.models, "Number of answer sets to compute (0 = all)");
	app.add_option("--partial-eval", config.partial_eval, "Evaluate externals under partial assignments (on|off)")
		->transform(CLI::CheckedTransformer(on_off));
	app.add_option("--eval-frequency", config.eval_frequency, "Evaluate externals at every N-th decision")
		->check(CLI::PositiveNumber);
	app.add_option("--minimize", config.minimize, "Nogood minimization (off|deletion|qxp)")
		->transform(CLI::CheckedTransformer(minimize));
	app.add_option("--flp", config.flp, "Minimality check (explicit|skip-auto|off)")
		->transform(CLI::CheckedTransformer(flp));
	app.add_option("--max-invention", config.max_invention, "Maximum number of invented terms");
	app.add_flag("--opt", config.opt, "Compute optimal answer sets w.r.t. weak constraints");
	app.add_flag("--stats", config.stats, "Print solver statistics");
	app.add_flag("--dump-ground", config.dump_ground, "Print the ground guessing program");
	app.add_flag("--allow-disjunction", config.allow_disjunction, "Accept disjunctive rule heads");

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	}
	catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	}
	return run(config, in, out, err);
}

} // namespace hexeval::cli
