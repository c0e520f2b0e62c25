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
#include "support.hpp"
#include "cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace hexeval;
using namespace hexeval::test;

namespace {

struct Output {
	int         code = 0;
	std::string out, err;
};

Output run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
	args.insert(args.begin(), "hexeval");
	std::vector<const char*> argv;
	for (const std::string& a : args) { argv.push_back(a.c_str()); }
	std::istringstream in(stdin_text);
	std::ostringstream out, err;
	Output             o;
	o.code = cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
	o.out  = out.str();
	o.err  = err.str();
	return o;
}

std::vector<std::string> flags_of(const std::string& text) {
	std::vector<std::string> out;
	auto                     at = text.find("% flags:");
	if (at == std::string::npos) { return out; }
	std::istringstream line(text.substr(at + 8, text.find('\n', at) - at - 8));
	for (std::string f; line >> f;) { out.push_back(f); }
	return out;
}

// Answer lines rendered from a reference result, in CLI format.
std::string render(const Answers& answers) {
	std::string s;
	for (std::size_t i = 0; i != answers.size(); ++i) {
		s += "Answer " + std::to_string(i + 1) + ": {";
		for (std::size_t k = 0; k != answers[i].size(); ++k) { s += (k ? ", " : "") + answers[i][k]; }
		s += "}\n";
	}
	return s;
}

std::string answer_lines(const std::string& out) {
	std::istringstream in(out);
	std::string        s;
	for (std::string line; std::getline(in, line);) {
		if (line.rfind("Answer ", 0) == 0) { s += line + "\n"; }
	}
	return s;
}

const char* const concat_text = "firstname(pat). lastname(doe). fullname(F) :- &concat[A,B](F), firstname(A), lastname(B).";

} // namespace

TEST_CASE("basic runs") {
	Output o = run_cli({}, concat_text);
	CHECK(o.code == cli::exit_satisfiable);
	CHECK(o.out == "Answer 1: {firstname(pat), fullname(patdoe), lastname(doe)}\n");
	CHECK(o.err.empty());

	Output u = run_cli({}, "a. :- a.");
	CHECK(u.code == cli::exit_unsatisfiable);
	CHECK(u.out == "UNSATISFIABLE\n");

	Output two = run_cli({"--models", "1"}, "a :- not b. b :- not a.");
	CHECK(two.code == cli::exit_satisfiable);
	CHECK(std::count(two.out.begin(), two.out.end(), '\n') == 1);

	Output opt = run_cli({"--opt"}, "a :- not b. b :- not a. :~ a. [2@1] :~ b. [1@1]");
	CHECK(opt.out == "Answer 1: {b}\nCost: 1@1\nOPTIMUM FOUND\n");
	Output zero = run_cli({"--opt"}, "a.");
	CHECK(zero.out == "Answer 1: {a}\nCost: 0@0\nOPTIMUM FOUND\n");
	Output opt_unsat = run_cli({"--opt"}, "a. :- a. :~ a. [1@1]");
	CHECK(opt_unsat.code == cli::exit_unsatisfiable);
	CHECK(opt_unsat.out == "UNSATISFIABLE\n");
}

TEST_CASE("auxiliary output") {
	Output dumped = run_cli({"--dump-ground"}, concat_text);
	CHECK(dumped.out.find("fullname(patdoe) :- e_concat[pat,doe](patdoe), firstname(pat), lastname(doe).\n") != std::string::npos);
	CHECK(dumped.out.find("e_concat[pat,doe](patdoe) | ne_concat[pat,doe](patdoe).\n") != std::string::npos);

	Output stats = run_cli({"--stats"}, concat_text);
	CHECK(stats.out.find("Models       : 1") != std::string::npos);
	CHECK(stats.out.find("FLP skipped  : 1") != std::string::npos);

	Output help = run_cli({"--help"});
	CHECK(help.code == 0);
	CHECK(help.out.find("--partial-eval") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
	Output parse = run_cli({}, "p(a");
	CHECK(parse.code == cli::exit_usage);
	CHECK(parse.err.find("error: 1:") == 0);
	CHECK(parse.out.empty());

	Output unsafe = run_cli({}, "p(X) :- not q(X).");
	CHECK(unsafe.code == cli::exit_usage);
	CHECK(unsafe.err.find("X") != std::string::npos);

	CHECK(run_cli({}, "a | b.").code == cli::exit_usage);
	CHECK(run_cli({"--allow-disjunction"}, "a | b.").code == cli::exit_satisfiable);
	CHECK(run_cli({}, "p :- &nosuch[a].").code == cli::exit_usage);
	CHECK(run_cli({"--minimize", "fast"}, "a.").code == cli::exit_usage);
	CHECK(run_cli({"--flp", "sometimes"}, "a.").code == cli::exit_usage);
	CHECK(run_cli({"--partial-eval", "yes"}, "a.").code == cli::exit_usage);
	CHECK(run_cli({"--eval-frequency", "0"}, "a.").code == cli::exit_usage);
	CHECK(run_cli({"--bogus"}, "a.").code == cli::exit_usage);
	CHECK(run_cli({"/nonexistent/file.hex"}).code == cli::exit_usage);

	Output budget = run_cli({"--max-invention", "5"}, "w(a). w(Y) :- w(X), &concat[X,a](Y).");
	CHECK(budget.code == cli::exit_budget);
	CHECK(budget.err.find("concat") != std::string::npos);
	CHECK(budget.out.empty());
	CHECK(run_cli({}, "n(a). m(Y) :- n(X), &concat[X,a](Y).").code == cli::exit_satisfiable);
}

TEST_CASE("several input files are concatenated") {
	auto files = corpus_programs();
	auto first = std::find_if(files.begin(), files.end(), [](const auto& p) { return p.filename() == "facts.hex"; });
	REQUIRE(first != files.end());
	Output one  = run_cli({first->string()});
	Output both = run_cli({first->string(), first->string()});
	CHECK(one.out == both.out);
	CHECK(one.code == cli::exit_satisfiable);
}

TEST_CASE("corpus goldens") {
	auto files = corpus_programs();
	REQUIRE(files.size() >= 20);
	for (const auto& path : files) {
		std::string text  = read_file(path);
		auto        flags = flags_of(text);
		auto        args  = flags;
		args.push_back(path.string());
		Output o = run_cli(args);
		INFO(path.filename().string());
		auto expected_path = path;
		expected_path.replace_extension(".expected");
		std::string expected = read_file(expected_path);
		CHECK(o.out == expected);
		CHECK(o.err.empty());
		bool unsat = expected == "UNSATISFIABLE\n";
		CHECK(o.code == (unsat ? cli::exit_unsatisfiable : cli::exit_satisfiable));

		// the reference semantics yields the same answer sets
		bool                  opt = std::find(flags.begin(), flags.end(), "--opt") != flags.end();
		const PluginRegistry  reg = builtins::registry();
		ReferenceResult       ref = brute_force_answer_sets(parse(text, reg, true), reg, 22);
		Answers               sorted = ref.answer_sets;
		std::sort(sorted.begin(), sorted.end());
		CHECK(answer_lines(o.out) == render(opt ? reference_optima(ref) : sorted));

		// every flag combination prints the same
		for (const SolverConfig& c : flag_matrix()) {
			std::vector<std::string> extra{
				"--partial-eval", c.partial_eval ? "on" : "off",
				"--eval-frequency", std::to_string(c.eval_frequency),
				"--minimize", c.minimization == Minimization::Off ? "off" : c.minimization == Minimization::Deletion ? "deletion" : "qxp",
				"--flp", c.flp == FlpMode::Explicit ? "explicit" : "skip-auto",
			};
			extra.insert(extra.end(), args.begin(), args.end());
			CHECK_MESSAGE(run_cli(extra).out == expected, describe(c));
		}
	}
}

TEST_CASE("output is deterministic") {
	std::mt19937 rng(90);
	for (int i = 0; i != 60; ++i) {
		std::string text = random_program(rng, i % 2 == 0);
		std::string opt  = i % 2 == 0 ? "--opt" : "--stats";
		Output      a    = run_cli({opt}, text);
		Output      b    = run_cli({opt}, text);
		CHECK(a.out == b.out);
		CHECK(a.code == b.code);
	}
}
