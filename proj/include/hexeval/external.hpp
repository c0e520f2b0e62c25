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
#ifndef HEXEVAL_EXTERNAL_HPP_INCLUDED
#define HEXEVAL_EXTERNAL_HPP_INCLUDED

#include <hexeval/ground_program.hpp>
#include <hexeval/plugin.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hexeval {

//! Values of (some of) the relevant input atoms of one external instance.
/*!
 * Atoms not mentioned are unassigned.
 */
class PartialInterpretation {
public:
	PartialInterpretation() = default;
	PartialInterpretation(std::initializer_list<std::pair<AtomId, Truth>> values);

	void  set(AtomId atom, Truth value);
	Truth value(AtomId atom) const;
	const std::vector<std::pair<AtomId, Truth>>& values() const { return values_; }
private:
	std::vector<std::pair<AtomId, Truth>> values_; // sorted by atom
};

//! A set of signed atoms that must not all hold; kept sorted by atom.
using Nogood = std::vector<Lit>;

//! Sorts, removes duplicates; returns false if some atom occurs with both signs.
bool normalize(Nogood& ng);

using TruthFn = std::function<Truth(AtomId)>;

//! Evaluates oracles of ground external instances and counts the calls.
class OracleEvaluator {
public:
	OracleEvaluator(const GroundProgram& gp, const PluginRegistry& registry)
		: gp_(&gp)
		, registry_(&registry) {}

	//! Evaluates instance under the given input values.
	/*!
	 * Atoms of positions tagged irrelevant are passed as unassigned.
	 * \throws PluginError naming the instance if the plugin fails.
	 */
	Verdict evaluate(const ExternalInstance& inst, const TruthFn& truth) const;
	Verdict evaluate(const ExternalInstance& inst, const PartialInterpretation& partial) const;

	const GroundProgram&  program() const { return *gp_; }
	const PluginRegistry& registry() const { return *registry_; }
	std::uint64_t         calls() const { return calls_; }
private:
	const GroundProgram*  gp_;
	const PluginRegistry* registry_;
	mutable std::uint64_t calls_ = 0;
};

//! Complete-input nogood: all relevant input literals plus the replacement atom
//! signed opposite to the verdict.
Nogood default_learn_nogood(const ExternalInstance& inst, const PartialInterpretation& complete, Verdict verdict);
//! Like default_learn_nogood but only over the assigned relevant inputs.
Nogood learn_partial_nogood(const ExternalInstance& inst, const PartialInterpretation& partial, Verdict verdict);

//! Answers whether a candidate nogood still certifies the oracle violation.
using NogoodValidator = std::function<bool(std::span<const Lit>)>;

//! Validator that fixes exactly the input literals of the candidate, leaves the
//! other relevant inputs unassigned, and requires a verdict contradicting the
//! replacement literal.
NogoodValidator make_oracle_validator(const OracleEvaluator& eval, const ExternalInstance& inst);

enum class Minimization : std::uint8_t { Off, Deletion, QuickXplain };

//! Deletion-based minimization: drops input literals in ascending atom order
//! while the validator still accepts.
/*!
 * \param replacement the replacement atom; its literal is always kept.
 * \throws std::invalid_argument if nogood itself is not valid.
 */
Nogood minimize_nogood_deletion(const Nogood& nogood, AtomId replacement, const NogoodValidator& valid);
//! QuickXplain-style divide-and-conquer minimization.
Nogood minimize_nogood_quickxplain(const Nogood& nogood, AtomId replacement, const NogoodValidator& valid);
Nogood minimize_nogood(Minimization mode, const Nogood& nogood, AtomId replacement, const NogoodValidator& valid);

} // namespace hexeval
#endif
