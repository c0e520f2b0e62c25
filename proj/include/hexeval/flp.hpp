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
#ifndef HEXEVAL_FLP_HPP_INCLUDED
#define HEXEVAL_FLP_HPP_INCLUDED

#include <hexeval/ast.hpp>
#include <hexeval/external.hpp>
#include <hexeval/ground_program.hpp>
#include <hexeval/plugin.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hexeval {

//! Atom/external dependencies of a ground program.
/*!
 * Nodes 1..num_atoms are atoms; node num_atoms + 1 + i is external instance i.
 * Edges: positive ordinary body atom -> head, relevant input atom -> instance,
 * instance -> head of every rule using it (in either polarity).
 */
struct DependencyGraph {
	std::size_t                           num_atoms = 0;
	std::size_t                           num_externals = 0;
	std::vector<std::vector<std::size_t>> successors; // indexed by node
	bool                                  disjunctive = false;

	std::size_t external_node(std::size_t i) const { return num_atoms + 1 + i; }
	bool        has_edge(std::size_t from, std::size_t to) const;
};

DependencyGraph build_dependency_graph(const GroundProgram& gp, const PluginRegistry& registry);

//! True iff compatible candidates may fail FLP minimality: the graph has a
//! cycle or the program has disjunctive heads.
bool needs_flp_check(const DependencyGraph& graph);

//! Rules (indices into GroundProgram::rules) whose body holds under a candidate.
struct ReductProgram {
	std::vector<std::size_t> rules;
};

//! External literals are judged by oracle evaluation, not by the guesses.
ReductProgram flp_reduct(const GroundProgram& gp, const OracleEvaluator& eval, const TruthFn& candidate);

//! True iff no proper subset of the candidate's true atoms satisfies the reduct.
/*!
 * \param true_atoms sorted ordinary atoms true in the candidate.
 */
bool is_minimal_model(const GroundProgram& gp, const ReductProgram& reduct, const OracleEvaluator& eval, const std::vector<AtomId>& true_atoms);

using CostVector = std::vector<std::pair<std::int64_t, std::int64_t>>; // (level, weight), descending level

//! Reference semantics by exhaustive enumeration.
struct ReferenceResult {
	std::vector<std::vector<std::string>> answer_sets; // sorted atom texts, sorted
	std::vector<CostVector>               costs;       // aligned with answer_sets
	std::size_t                           num_atoms = 0;
};

//! Naive instantiation over the computed domain, then every interpretation of
//! the rule head atoms is checked for being a model and a minimal model of its
//! own FLP-reduct.
/*!
 * \throws GroundingError if more than max_atoms head atoms arise.
 */
ReferenceResult brute_force_answer_sets(const Program& program, const PluginRegistry& registry, std::size_t max_atoms);

//! Lexicographic comparison by descending level; missing levels count as 0.
int compare_costs(const CostVector& lhs, const CostVector& rhs);

} // namespace hexeval
#endif
