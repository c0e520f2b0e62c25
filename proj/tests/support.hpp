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
#ifndef HEXEVAL_TESTS_SUPPORT_HPP_INCLUDED
#define HEXEVAL_TESTS_SUPPORT_HPP_INCLUDED

#include <hexeval/builtins.hpp>
#include <hexeval/grounder.hpp>
#include <hexeval/parser.hpp>
#include <hexeval/solver.hpp>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace hexeval::test {

using AtomTexts = std::vector<std::string>;
using Answers   = std::vector<AtomTexts>; // sorted, each sorted

Program parse(const std::string& text, const PluginRegistry& registry, bool allow_disjunction = false);
Answers to_texts(const GroundProgram& gp, const std::vector<AnswerSet>& sets);

struct Run {
	GroundProgram gp;
	Answers       answers;
	SolverStats   stats;
	bool          flp_required = false;
};
Run solve_text(const std::string& text, const SolverConfig& config = {}, const PluginRegistry& registry = builtins::registry());

struct OptRun {
	bool       satisfiable = false;
	CostVector cost;
	Answers    optimal;
};
OptRun optimize_text(const std::string& text, const SolverConfig& config = {}, const PluginRegistry& registry = builtins::registry());

//! Small random HEX program over {a,b,c}, predicates p/1, q/1, r/1, s/0 and
//! the builtins id, diff, atLeast and first. Always safe.
std::string random_program(std::mt19937& rng, bool with_weak);

//! Optimal answer sets of a reference result (cost minimal by compare_costs).
Answers    reference_optima(const ReferenceResult& ref, CostVector* best = nullptr);
//! Cost vector with zero entries removed, for level-set-independent comparison.
CostVector nonzero(const CostVector& c);

//! All flag combinations of the invariance matrix.
std::vector<SolverConfig> flag_matrix();
std::string               describe(const SolverConfig& c);

std::vector<std::filesystem::path> corpus_programs();
std::string                        read_file(const std::filesystem::path& p);

//! Programs of the setminus family over n domain elements.
std::string setminus_program(int n);
//! Chain of n interdependent diff externals.
std::string diff_chain_program(int n);

} // namespace hexeval::test
#endif
