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
#ifndef HEXEVAL_SOLVER_HPP_INCLUDED
#define HEXEVAL_SOLVER_HPP_INCLUDED

#include <hexeval/engine.hpp>
#include <hexeval/external.hpp>
#include <hexeval/flp.hpp>
#include <hexeval/ground_program.hpp>
#include <hexeval/plugin.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <set>
#include <vector>

namespace hexeval {

enum class FlpMode : std::uint8_t {
	Explicit, //!< check every compatible candidate
	SkipAuto, //!< check only if the dependency graph requires it
	Off,      //!< never check (unsound for cyclic programs)
};

struct SolverConfig {
	bool                    partial_eval   = true;
	//! Externals are evaluated under partial assignments before every
	//! eval_frequency-th decision (partial_eval only).
	std::size_t             eval_frequency = 1;
	Minimization            minimization   = Minimization::Deletion;
	FlpMode                 flp            = FlpMode::SkipAuto;
	std::size_t             max_models     = 0; // 0 = all
	bool                    optimize       = false;
	SearchEngine::Heuristic heuristic      = SearchEngine::Heuristic::Activity;
};

struct SolverStats {
	std::uint64_t decisions               = 0;
	std::uint64_t conflicts               = 0;
	std::uint64_t external_calls          = 0;
	std::uint64_t external_nogoods        = 0;
	std::uint64_t candidates_checked      = 0;
	std::uint64_t candidates_incompatible = 0;
	std::uint64_t flp_checks_run          = 0;
	std::uint64_t flp_checks_skipped      = 0;
	std::uint64_t flp_rejected            = 0;
	std::uint64_t models                  = 0;

	SolverStats& operator+=(const SolverStats& o);
};

void print_stats(std::ostream& os, const SolverStats& s);

//! Sorted ordinary atoms that are true; replacement and auxiliary atoms are stripped.
using AnswerSet = std::vector<AtomId>;

//! Static nogoods of the guessing program.
/*!
 * Variables 1..table.size() are the atoms of the ground program; body
 * variables for rules with two or more body literals follow.
 */
struct Encoding {
	std::size_t         num_vars = 0;
	std::vector<Nogood> nogoods;
	std::vector<Lit>    rule_body;  // per rule: literal equivalent to its body (unused for facts)
	std::vector<Lit>    weak_body;  // per weak constraint
};

Encoding encode_static_nogoods(const GroundProgram& gp);

//! Oracle nogoods for all instances whose verdict is known under the partial
//! assignment, minimized per mode.
std::vector<Nogood> external_propagation_hook(const GroundProgram& gp, const OracleEvaluator& eval, const TruthFn& assignment, Minimization mode);

//! Two-valued compatibility check of a complete candidate: empty iff every
//! replacement atom agrees with its oracle; otherwise one nogood per mismatch.
std::vector<Nogood> verify_candidate(const GroundProgram& gp, const OracleEvaluator& eval, const TruthFn& candidate, Minimization mode);

//! Cost per level (descending) of the weak constraints satisfied by an answer set.
CostVector cost_of(const GroundProgram& gp, const OracleEvaluator& eval, const AnswerSet& answer);

struct SolveResult {
	std::vector<AnswerSet> answer_sets;
	SolverStats            stats;
};

struct OptimizeResult {
	bool                   satisfiable = false;
	CostVector             cost;
	std::vector<AnswerSet> optimal;      // all optimal answer sets (up to max_models)
	std::vector<std::pair<AnswerSet, CostVector>> improvements; // models found while tightening
	SolverStats            stats;
};

//! Answer-set search over a ground HEX program.
/*!
 * One instance is single-threaded; several instances may share the same
 * immutable GroundProgram and registry.
 */
class Solver {
public:
	using ModelHandler = std::function<bool(const AnswerSet&)>; // return false to stop

	Solver(const GroundProgram& gp, const PluginRegistry& registry, SolverConfig config = {});
	~Solver();

	//! Adds a nogood before solving (e.g. previously learned ones).
	void preload(Nogood ng);

	SolveResult    solve(const ModelHandler& on_model = {});
	OptimizeResult optimize(const ModelHandler& on_improvement = {});

	//! External nogoods learned so far (deduplicated).
	std::vector<Nogood> learned_external_nogoods() const;
	bool                flp_check_required() const { return flp_required_; }

private:
	struct Search;

	const GroundProgram&  gp_;
	const PluginRegistry& registry_;
	SolverConfig          config_;
	Encoding              encoding_;
	bool                  flp_required_;
	std::vector<Nogood>   preloaded_;
	std::set<Nogood>      learned_;
};

SolveResult    solve(const GroundProgram& gp, const PluginRegistry& registry, const SolverConfig& config = {});
OptimizeResult optimize(const GroundProgram& gp, const PluginRegistry& registry, const SolverConfig& config = {});

} // namespace hexeval
#endif
