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
#include <hexeval/error.hpp>
#include <hexeval/solver.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace hexeval {

SolverStats& SolverStats::operator+=(const SolverStats& o) {
	decisions               += o.decisions;
	conflicts               += o.conflicts;
	external_calls          += o.external_calls;
	external_nogoods        += o.external_nogoods;
	candidates_checked      += o.candidates_checked;
	candidates_incompatible += o.candidates_incompatible;
	flp_checks_run          += o.flp_checks_run;
	flp_checks_skipped      += o.flp_checks_skipped;
	flp_rejected            += o.flp_rejected;
	models                  += o.models;
	return *this;
}

void print_stats(std::ostream& os, const SolverStats& s) {
	os << "Models       : " << s.models << '\n'
	   << "Decisions    : " << s.decisions << '\n'
	   << "Conflicts    : " << s.conflicts << '\n'
	   << "Ext. calls   : " << s.external_calls << '\n'
	   << "Ext. nogoods : " << s.external_nogoods << '\n'
	   << "Candidates   : " << s.candidates_checked << '\n'
	   << "Incompatible : " << s.candidates_incompatible << '\n'
	   << "FLP run      : " << s.flp_checks_run << '\n'
	   << "FLP skipped  : " << s.flp_checks_skipped << '\n'
	   << "FLP rejected : " << s.flp_rejected << '\n';
}

// -----------------------------------------------------------------------------
// Encoding
// -----------------------------------------------------------------------------
namespace {

class Encoder {
public:
	explicit Encoder(const GroundProgram& gp) : gp_(gp) { enc_.num_vars = gp.table.size(); }

	Encoding run() {
		const std::size_t n = gp_.table.size();
		std::vector<std::vector<Lit>> support(n + 1);
		std::vector<bool>             unconditional(n + 1, false);
		for (const GroundRule& r : gp_.rules) {
			if (r.body.empty()) {
				Nogood ng;
				for (AtomId h : r.head) {
					ng.push_back(neg(h));
					unconditional[h] = true;
				}
				enc_.nogoods.push_back(std::move(ng));
				enc_.rule_body.push_back(Lit{});
				continue;
			}
			Lit beta = body_literal(r.body);
			enc_.rule_body.push_back(beta);
			Nogood ng{beta};
			for (AtomId h : r.head) {
				ng.push_back(neg(h));
				support[h].push_back(~beta);
			}
			enc_.nogoods.push_back(std::move(ng));
		}
		for (const GuessPair& g : gp_.guesses) {
			enc_.nogoods.push_back({neg(g.positive), neg(g.negative)});
			enc_.nogoods.push_back({pos(g.positive), pos(g.negative)});
		}
		for (AtomId a = 1; a <= n; ++a) {
			if (gp_.table.kind(a) != AtomKind::Ordinary || unconditional[a]) { continue; }
			Nogood ng{pos(a)};
			ng.insert(ng.end(), support[a].begin(), support[a].end());
			enc_.nogoods.push_back(std::move(ng));
		}
		for (const GroundWeak& w : gp_.weak) {
			if (w.body.empty()) {
				if (!always_) {
					always_ = fresh();
					enc_.nogoods.push_back({neg(always_)});
				}
				enc_.weak_body.push_back(pos(always_));
			}
			else {
				enc_.weak_body.push_back(body_literal(w.body));
			}
		}
		return std::move(enc_);
	}

private:
	AtomId fresh() { return static_cast<AtomId>(++enc_.num_vars); }

	Lit body_literal(std::vector<Lit> body) {
		std::sort(body.begin(), body.end());
		body.erase(std::unique(body.begin(), body.end()), body.end());
		if (body.size() == 1) { return body[0]; }
		auto it = bodies_.find(body);
		if (it != bodies_.end()) { return pos(it->second); }
		AtomId beta = fresh();
		bodies_.emplace(body, beta);
		Nogood all{neg(beta)};
		for (const Lit& l : body) {
			enc_.nogoods.push_back({pos(beta), ~l});
			all.push_back(l);
		}
		enc_.nogoods.push_back(std::move(all));
		return pos(beta);
	}

	const GroundProgram&                  gp_;
	Encoding                              enc_;
	std::map<std::vector<Lit>, AtomId>    bodies_;
	AtomId                                always_ = 0;
};

PartialInterpretation inputs_of(const ExternalInstance& inst, const TruthFn& truth) {
	PartialInterpretation pi;
	for (AtomId a : inst.relevant_input_atoms) { pi.set(a, truth(a)); }
	return pi;
}

Nogood learn(const OracleEvaluator& eval, const ExternalInstance& inst, const PartialInterpretation& pi, Verdict v, Minimization mode) {
	Nogood ng = learn_partial_nogood(inst, pi, v);
	if (mode == Minimization::Off) { return ng; }
	return minimize_nogood(mode, ng, inst.replacement, make_oracle_validator(eval, inst));
}

Truth literal_truth(Truth atom, bool sign) {
	if (atom == Truth::Unassigned) { return atom; }
	return (atom == Truth::True) == sign ? Truth::True : Truth::False;
}

} // namespace

Encoding encode_static_nogoods(const GroundProgram& gp) { return Encoder(gp).run(); }

std::vector<Nogood> external_propagation_hook(const GroundProgram& gp, const OracleEvaluator& eval, const TruthFn& assignment, Minimization mode) {
	std::vector<Nogood> out;
	for (const ExternalInstance& inst : gp.externals) {
		PartialInterpretation pi = inputs_of(inst, assignment);
		Verdict               v  = eval.evaluate(inst, pi);
		if (v != Verdict::Unknown) { out.push_back(learn(eval, inst, pi, v, mode)); }
	}
	return out;
}

std::vector<Nogood> verify_candidate(const GroundProgram& gp, const OracleEvaluator& eval, const TruthFn& candidate, Minimization mode) {
	std::vector<Nogood> out;
	for (const ExternalInstance& inst : gp.externals) {
		PartialInterpretation pi = inputs_of(inst, candidate);
		Verdict               v  = eval.evaluate(inst, pi);
		if (v == Verdict::Unknown) { throw PluginError("&" + inst.plugin + " returned unknown on a complete input"); }
		if ((v == Verdict::True) != (candidate(inst.replacement) == Truth::True)) { out.push_back(learn(eval, inst, pi, v, mode)); }
	}
	return out;
}

namespace {
CostVector empty_cost(const GroundProgram& gp) {
	std::map<std::int64_t, std::int64_t, std::greater<>> levels;
	for (const GroundWeak& w : gp.weak) { levels[w.level] = 0; }
	return CostVector(levels.begin(), levels.end());
}

void add_cost(CostVector& cost, std::int64_t level, std::int64_t weight) {
	for (auto& [l, w] : cost) {
		if (l == level) { w += weight; }
	}
}
} // namespace

CostVector cost_of(const GroundProgram& gp, const OracleEvaluator& eval, const AnswerSet& answer) {
	TruthFn truth = [&](AtomId a) { return std::binary_search(answer.begin(), answer.end(), a) ? Truth::True : Truth::False; };
	CostVector cost = empty_cost(gp);
	for (const GroundWeak& w : gp.weak) {
		bool holds = std::all_of(w.body.begin(), w.body.end(), [&](const Lit& l) {
			Truth v;
			if (const ExternalInstance* inst = gp.external_of(l.atom)) { v = eval.evaluate(*inst, truth) == Verdict::True ? Truth::True : Truth::False; }
			else                                                       { v = truth(l.atom); }
			return literal_truth(v, l.sign) == Truth::True;
		});
		if (holds) { add_cost(cost, w.level, w.weight); }
	}
	return cost;
}

// -----------------------------------------------------------------------------
// Search
// -----------------------------------------------------------------------------

struct Solver::Search {
	enum class Bound : std::uint8_t { None, Below, AtMost };
	struct Model {
		AnswerSet  atoms;
		CostVector cost;
	};
	using Handler = std::function<bool(const Model&)>;

	Search(Solver& s)
		: solver(s)
		, gp(s.gp_)
		, config(s.config_)
		, engine(s.encoding_.num_vars, s.config_.heuristic)
		, eval(s.gp_, s.registry_) {
		ok = true;
		for (const Nogood& ng : s.encoding_.nogoods) {
			if (!(ok = engine.integrate(ng))) { return; }
		}
		for (const Nogood& ng : s.preloaded_) {
			if (!(ok = engine.integrate(ng))) { return; }
		}
		for (const Nogood& ng : s.learned_) {
			if (!(ok = engine.integrate(ng, true))) { return; }
		}
	}

	TruthFn truth() const {
		return [this](AtomId a) { return engine.value(a); };
	}

	// false iff the search space is exhausted
	bool add(const Nogood& ng) { return ok = ok && engine.integrate(ng, true); }

	bool add_external(Nogood ng) {
		normalize(ng);
		if (solver.learned_.insert(ng).second) { ++stats.external_nogoods; }
		return add(ng);
	}

	// Partial evaluation; returns true if something was learned.
	bool external_hook() {
		bool learned = false;
		for (const ExternalInstance& inst : gp.externals) {
			Truth e = engine.value(inst.replacement);
			PartialInterpretation pi = inputs_of(inst, truth());
			Verdict               v  = eval.evaluate(inst, pi);
			if (v == Verdict::Unknown) { continue; }
			if (e != Truth::Unassigned && (e == Truth::True) == (v == Verdict::True)) { continue; }
			learned = true;
			if (!add_external(learn(eval, inst, pi, v, config.minimization))) { return true; }
		}
		return learned;
	}

	CostVector cost_lower_bound(Nogood& reason) const {
		CostVector cost = empty_cost(gp);
		const auto& bodies = solver.encoding_.weak_body;
		for (std::size_t i = 0; i != bodies.size(); ++i) {
			if (!engine.is_true(bodies[i])) { continue; }
			reason.push_back(bodies[i]);
			add_cost(cost, gp.weak[i].level, gp.weak[i].weight);
		}
		return cost;
	}

	// true iff the current assignment was pruned by the cost bound
	bool prune_by_bound() {
		if (bound == Bound::None) { return false; }
		Nogood     reason;
		CostVector lb  = cost_lower_bound(reason);
		int        cmp = compare_costs(lb, bound_cost);
		if ((bound == Bound::Below && cmp >= 0) || (bound == Bound::AtMost && cmp > 0)) {
			add(reason);
			return true;
		}
		return false;
	}

	Nogood blocking_nogood() const {
		Nogood ng;
		for (AtomId a = 1; a <= gp.table.size(); ++a) { ng.push_back(Lit{a, engine.value(a) == Truth::True}); }
		return ng;
	}

	// Compatibility and minimality of the complete assignment; adds nogoods on failure.
	bool accept_candidate() {
		++stats.candidates_checked;
		std::vector<Nogood> bad = verify_candidate(gp, eval, truth(), config.minimization);
		if (!bad.empty()) {
			++stats.candidates_incompatible;
			for (Nogood& ng : bad) {
				if (!add_external(std::move(ng))) { break; }
			}
			return false;
		}
		bool check = config.flp == FlpMode::Explicit || (config.flp == FlpMode::SkipAuto && solver.flp_required_);
		if (!check) {
			if (config.flp == FlpMode::SkipAuto) { ++stats.flp_checks_skipped; }
			return true;
		}
		++stats.flp_checks_run;
		ReductProgram reduct = flp_reduct(gp, eval, truth());
		if (is_minimal_model(gp, reduct, eval, answer())) { return true; }
		++stats.flp_rejected;
		add(blocking_nogood());
		return false;
	}

	AnswerSet answer() const {
		AnswerSet out;
		for (AtomId a = 1; a <= gp.table.size(); ++a) {
			if (gp.table.kind(a) == AtomKind::Ordinary && engine.value(a) == Truth::True) { out.push_back(a); }
		}
		return out;
	}

	void run(const Handler& on_model) {
		std::uint64_t evaluated_at = ~std::uint64_t{0};
		while (ok) {
			if (auto conflict = engine.propagate()) {
				ok = engine.resolve(*conflict);
				continue;
			}
			if (prune_by_bound()) { continue; }
			if (!engine.complete()) {
				if (config.partial_eval && !gp.externals.empty() && engine.decisions() % config.eval_frequency == 0 && engine.changes() != evaluated_at) {
					evaluated_at = engine.changes();
					if (external_hook()) { continue; }
				}
				engine.decide();
				continue;
			}
			if (!accept_candidate()) { continue; }
			Model m;
			m.atoms = answer();
			Nogood unused;
			m.cost = cost_lower_bound(unused);
			++stats.models;
			bool more = on_model(m);
			if (!more) { break; }
			add(blocking_nogood());
		}
		stats.decisions      = engine.decisions();
		stats.conflicts      = engine.conflicts();
		stats.external_calls = eval.calls();
	}

	Solver&               solver;
	const GroundProgram&  gp;
	const SolverConfig&   config;
	SearchEngine          engine;
	OracleEvaluator       eval;
	SolverStats           stats;
	bool                  ok = true;
	Bound                 bound = Bound::None;
	CostVector            bound_cost;
};

Solver::Solver(const GroundProgram& gp, const PluginRegistry& registry, SolverConfig config)
	: gp_(gp)
	, registry_(registry)
	, config_(config)
	, encoding_(encode_static_nogoods(gp))
	, flp_required_(needs_flp_check(build_dependency_graph(gp, registry))) {
	if (config_.eval_frequency == 0) { throw std::invalid_argument("eval_frequency must be positive"); }
}

Solver::~Solver() = default;

void Solver::preload(Nogood ng) { preloaded_.push_back(std::move(ng)); }

std::vector<Nogood> Solver::learned_external_nogoods() const { return {learned_.begin(), learned_.end()}; }

SolveResult Solver::solve(const ModelHandler& on_model) {
	SolveResult res;
	Search      s(*this);
	s.run([&](const Search::Model& m) {
		res.answer_sets.push_back(m.atoms);
		bool more = !on_model || on_model(m.atoms);
		return more && (config_.max_models == 0 || res.answer_sets.size() < config_.max_models);
	});
	res.stats = s.stats;
	return res;
}

OptimizeResult Solver::optimize(const ModelHandler& on_improvement) {
	OptimizeResult res;
	{
		// tighten the bound until no strictly better model exists
		Search s(*this);
		s.run([&](const Search::Model& m) {
			res.satisfiable = true;
			res.cost        = m.cost;
			res.improvements.emplace_back(m.atoms, m.cost);
			s.bound      = Search::Bound::Below;
			s.bound_cost = m.cost;
			return !on_improvement || on_improvement(m.atoms);
		});
		res.stats += s.stats;
	}
	if (!res.satisfiable) { return res; }
	Search s(*this);
	s.bound      = Search::Bound::AtMost;
	s.bound_cost = res.cost;
	s.run([&](const Search::Model& m) {
		res.optimal.push_back(m.atoms);
		return config_.max_models == 0 || res.optimal.size() < config_.max_models;
	});
	res.stats += s.stats;
	return res;
}

SolveResult solve(const GroundProgram& gp, const PluginRegistry& registry, const SolverConfig& config) {
	return Solver(gp, registry, config).solve();
}

OptimizeResult optimize(const GroundProgram& gp, const PluginRegistry& registry, const SolverConfig& config) {
	return Solver(gp, registry, config).optimize();
}

} // namespace hexeval
