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

#include <hexeval/error.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hexeval::test {

Program parse(const std::string& text, const PluginRegistry& registry, bool allow_disjunction) {
	ParseOptions opts;
	opts.signatures        = registry.signatures();
	opts.allow_disjunction = allow_disjunction;
	return parse_program(text, opts);
}

Answers to_texts(const GroundProgram& gp, const std::vector<AnswerSet>& sets) {
	Answers out;
	for (const AnswerSet& as : sets) {
		AtomTexts t;
		for (AtomId a : as) { t.push_back(gp.table.text(a)); }
		std::sort(t.begin(), t.end());
		out.push_back(std::move(t));
	}
	std::sort(out.begin(), out.end());
	return out;
}

Run solve_text(const std::string& text, const SolverConfig& config, const PluginRegistry& registry) {
	Run r;
	r.gp = ground_program(parse(text, registry, true), registry);
	Solver      solver(r.gp, registry, config);
	SolveResult res = solver.solve();
	r.answers      = to_texts(r.gp, res.answer_sets);
	r.stats        = res.stats;
	r.flp_required = solver.flp_check_required();
	return r;
}

OptRun optimize_text(const std::string& text, const SolverConfig& config, const PluginRegistry& registry) {
	GroundProgram  gp  = ground_program(parse(text, registry, true), registry);
	OptimizeResult res = Solver(gp, registry, config).optimize();
	return OptRun{res.satisfiable, res.cost, to_texts(gp, res.optimal)};
}

namespace {

const char* const constants[] = {"a", "b", "c"};
const char* const unary[]     = {"p", "q", "r"};

// p is mostly a domain of facts; q, r and s are mostly defined by rules.
struct Gen {
	std::mt19937& rng;
	int           num_constants;

	int  pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
	bool chance(double p) { return std::bernoulli_distribution(p)(rng); }

	std::string constant() { return constants[pick(num_constants)]; }
	std::string term(bool allow_var) { return allow_var && chance(0.7) ? "X" : constant(); }
	std::string predicate() { return unary[pick(3)]; }

	std::string head() {
		int k = pick(20);
		if (k < 3) { return "s"; }
		if (k < 5) { return "p(" + term(true) + ")"; }
		return std::string(k < 13 ? "q" : "r") + "(" + term(true) + ")";
	}

	std::string ordinary(bool allow_var) {
		if (chance(0.1)) { return "s"; }
		return predicate() + "(" + term(allow_var) + ")";
	}

	std::string external(bool allow_var) {
		switch (pick(4)) {
			case 0:  return "&id[" + std::string(chance(0.3) ? "s" : predicate()) + "]";
			case 1:  return "&diff[" + predicate() + "," + predicate() + "](" + term(allow_var) + ")";
			case 2:  return "&atLeast[" + predicate() + "," + std::to_string(pick(3)) + "]";
			default: return "&first[" + predicate() + "," + predicate() + "](" + term(allow_var) + ")";
		}
	}

	std::string literal(bool allow_var) {
		bool        ext  = chance(0.35);
		std::string atom = ext ? external(allow_var) : ordinary(allow_var);
		return (chance(ext ? 0.25 : 0.5) ? "not " : "") + atom;
	}

	// A positive literal binding X, so that the remaining literals may use it freely.
	std::string binder() {
		if (chance(0.3)) { return std::string(chance(0.6) ? "&diff[" : "&first[") + "p," + predicate() + "](X)"; }
		return std::string(chance(0.7) ? "p" : predicate()) + "(X)";
	}

	std::string body(int extra) {
		std::vector<std::string> lits;
		bool                     bound = chance(0.8);
		if (bound) { lits.push_back(binder()); }
		int len = extra + pick(3);
		for (int i = 0; i != len; ++i) { lits.push_back(literal(bound)); }
		if (lits.empty()) { lits.push_back(literal(false)); }
		std::string out;
		for (std::size_t i = 0; i != lits.size(); ++i) { out += (i ? ", " : "") + lits[i]; }
		return out;
	}

	std::string fact() { return (chance(0.8) ? "p" : predicate()) + "(" + constant() + ")."; }

	// q(X) or r(X) guessed against the other one, by default negation or by diff
	std::string guess() {
		bool        first = chance(0.5);
		std::string self = first ? "q" : "r", other = first ? "r" : "q";
		std::string cond = chance(0.5) ? "not " + other + "(X)" : "&diff[p," + other + "](X)";
		return self + "(X) :- p(X), " + cond + ".";
	}

	std::string statement() {
		int k = pick(20);
		if (k < 2) { return fact(); }
		if (k < 7) { return guess(); }
		std::string h = k < 9 ? "" : head() + " ";
		return h + ":- " + body(0) + ".";
	}
};

bool is_safe(const std::string& text, const PluginRegistry& registry) {
	try {
		parse(text, registry);
		return true;
	}
	catch (const SafetyError&) {
		return false;
	}
}

} // namespace

std::string random_program(std::mt19937& rng, bool with_weak) {
	static const PluginRegistry registry = builtins::registry();
	Gen         g{rng, 2 + static_cast<int>(rng() % 2)};
	std::string out;
	// a domain of facts first, then up to six statements in total
	int facts = 1 + g.pick(2);
	for (int i = 0; i != facts; ++i) { out += g.fact() + "\n"; }
	int n = 2 + g.pick(5 - facts);
	for (int i = 0; i != n; ++i) {
		std::string s;
		do { s = g.statement(); } while (!is_safe(s, registry));
		out += s + "\n";
	}
	if (with_weak) {
		int w = 1 + g.pick(2);
		for (int i = 0; i != w; ++i) {
			std::string s;
			do {
				s = ":~ " + g.body(0) + ". [" + std::to_string(g.pick(4)) + "@" + std::to_string(1 + g.pick(2)) + "]";
			} while (!is_safe(s, registry));
			out += s + "\n";
		}
	}
	return out;
}

CostVector nonzero(const CostVector& c) {
	CostVector out;
	for (auto [l, w] : c) {
		if (w != 0) { out.emplace_back(l, w); }
	}
	return out;
}

Answers reference_optima(const ReferenceResult& ref, CostVector* best) {
	Answers    out;
	CostVector min;
	for (std::size_t i = 0; i != ref.answer_sets.size(); ++i) {
		int cmp = out.empty() ? -1 : compare_costs(ref.costs[i], min);
		if (cmp < 0) {
			out.clear();
			min = ref.costs[i];
		}
		if (cmp <= 0) { out.push_back(ref.answer_sets[i]); }
	}
	std::sort(out.begin(), out.end());
	if (best) { *best = min; }
	return out;
}

std::vector<SolverConfig> flag_matrix() {
	std::vector<SolverConfig> out;
	for (bool pe : {true, false}) {
		for (Minimization m : {Minimization::Off, Minimization::Deletion, Minimization::QuickXplain}) {
			for (FlpMode f : {FlpMode::Explicit, FlpMode::SkipAuto}) {
				for (std::size_t freq : {1u, 4u}) {
					SolverConfig c;
					c.partial_eval   = pe;
					c.minimization   = m;
					c.flp            = f;
					c.eval_frequency = freq;
					out.push_back(c);
				}
			}
		}
	}
	return out;
}

std::string describe(const SolverConfig& c) {
	std::ostringstream os;
	static const char* const min[] = {"off", "deletion", "qxp"};
	static const char* const flp[] = {"explicit", "skip-auto", "off"};
	os << "partial-eval=" << (c.partial_eval ? "on" : "off") << " minimize=" << min[static_cast<int>(c.minimization)]
	   << " flp=" << flp[static_cast<int>(c.flp)] << " eval-frequency=" << c.eval_frequency;
	return os.str();
}

std::vector<std::filesystem::path> corpus_programs() {
	std::vector<std::filesystem::path> out;
	for (const auto& e : std::filesystem::directory_iterator(HEXEVAL_CORPUS_DIR)) {
		if (e.path().extension() == ".hex") { out.push_back(e.path()); }
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::string read_file(const std::filesystem::path& p) {
	std::ifstream      in(p, std::ios::binary);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

std::string setminus_program(int n) {
	std::string out;
	for (int i = 1; i <= n; ++i) { out += "dom(e" + std::to_string(i) + ").\n"; }
	out += "sel(X) :- dom(X), &diff[dom, nsel](X).\n"
	       "nsel(X) :- dom(X), &diff[dom, sel](X).\n";
	return out;
}

std::string diff_chain_program(int n) {
	// c0/d0 split dom by two diff atoms; each of the remaining n - 2 diff atoms
	// derives the next link from the previous one.
	std::string out = "dom(a). dom(b).\n"
	                  "c0(X) :- dom(X), &diff[dom, d0](X).\n"
	                  "d0(X) :- dom(X), &diff[dom, c0](X).\n";
	for (int i = 1; i <= n - 2; ++i) {
		std::string c = "c" + std::to_string(i), prev = "c" + std::to_string(i - 1);
		out += c + "(X) :- dom(X), &diff[" + prev + ", d0](X).\n";
	}
	return out;
}

} // namespace hexeval::test
