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
#include <hexeval/external.hpp>

#include <algorithm>
#include <stdexcept>

namespace hexeval {

PartialInterpretation::PartialInterpretation(std::initializer_list<std::pair<AtomId, Truth>> values) {
	for (auto [a, v] : values) { set(a, v); }
}

void PartialInterpretation::set(AtomId atom, Truth value) {
	auto it = std::lower_bound(values_.begin(), values_.end(), atom, [](const auto& e, AtomId a) { return e.first < a; });
	if (it != values_.end() && it->first == atom) {
		if (value == Truth::Unassigned) { values_.erase(it); }
		else                            { it->second = value; }
	}
	else if (value != Truth::Unassigned) {
		values_.insert(it, {atom, value});
	}
}

Truth PartialInterpretation::value(AtomId atom) const {
	auto it = std::lower_bound(values_.begin(), values_.end(), atom, [](const auto& e, AtomId a) { return e.first < a; });
	return it != values_.end() && it->first == atom ? it->second : Truth::Unassigned;
}

bool normalize(Nogood& ng) {
	std::sort(ng.begin(), ng.end());
	ng.erase(std::unique(ng.begin(), ng.end()), ng.end());
	for (std::size_t i = 1; i < ng.size(); ++i) {
		if (ng[i].atom == ng[i - 1].atom) { return false; }
	}
	return true;
}

Verdict OracleEvaluator::evaluate(const ExternalInstance& inst, const TruthFn& truth) const {
	const PluginDescriptor& plugin = registry_->at(inst.plugin);
	std::vector<InputValue> inputs(inst.inputs.size());
	for (std::size_t p = 0; p != inst.inputs.size(); ++p) {
		InputValue& v = inputs[p];
		v.kind        = plugin.input_kinds[p];
		v.term        = inst.inputs[p];
		if (v.kind != InputKind::Predicate) { continue; }
		bool ignored = plugin.dependency(p) == Dependency::Irrelevant;
		for (AtomId a : inst.position_atoms[p]) {
			v.extension.add(gp_->table[a].args, ignored ? Truth::Unassigned : truth(a));
		}
	}
	++calls_;
	try {
		return plugin.oracle(OracleQuery{inputs, inst.outputs});
	}
	catch (const std::exception& e) {
		throw PluginError("evaluation of " + gp_->table.text(inst.replacement).substr(2) + " failed: " + e.what());
	}
}

Verdict OracleEvaluator::evaluate(const ExternalInstance& inst, const PartialInterpretation& partial) const {
	return evaluate(inst, [&partial](AtomId a) { return partial.value(a); });
}

namespace {
Lit replacement_literal(const ExternalInstance& inst, Verdict verdict) {
	if (verdict == Verdict::Unknown) { throw std::invalid_argument("cannot learn from an unknown verdict"); }
	// forbid the guess that disagrees with the verdict
	return Lit{inst.replacement, verdict == Verdict::False};
}
} // namespace

Nogood default_learn_nogood(const ExternalInstance& inst, const PartialInterpretation& complete, Verdict verdict) {
	for (AtomId a : inst.relevant_input_atoms) {
		if (complete.value(a) == Truth::Unassigned) {
			throw std::invalid_argument("default_learn_nogood requires a complete input interpretation");
		}
	}
	return learn_partial_nogood(inst, complete, verdict);
}

Nogood learn_partial_nogood(const ExternalInstance& inst, const PartialInterpretation& partial, Verdict verdict) {
	Nogood ng;
	for (AtomId a : inst.relevant_input_atoms) {
		Truth v = partial.value(a);
		if (v != Truth::Unassigned) { ng.push_back(Lit{a, v == Truth::True}); }
	}
	ng.push_back(replacement_literal(inst, verdict));
	normalize(ng);
	return ng;
}

NogoodValidator make_oracle_validator(const OracleEvaluator& eval, const ExternalInstance& inst) {
	return [&eval, &inst](std::span<const Lit> candidate) {
		PartialInterpretation fixed;
		const Lit*            rep = nullptr;
		for (const Lit& l : candidate) {
			if (l.atom == inst.replacement) { rep = &l; }
			else                            { fixed.set(l.atom, l.sign ? Truth::True : Truth::False); }
		}
		if (!rep) { return false; }
		Verdict v = eval.evaluate(inst, fixed);
		return rep->sign ? v == Verdict::False : v == Verdict::True;
	};
}

namespace {

void split_replacement(const Nogood& nogood, AtomId replacement, Nogood& inputs, Nogood& rep) {
	for (const Lit& l : nogood) {
		(l.atom == replacement ? rep : inputs).push_back(l);
	}
	if (rep.size() != 1) { throw std::invalid_argument("nogood must contain the replacement literal exactly once"); }
}

Nogood joined(const Nogood& a, const Nogood& b) {
	Nogood out(a);
	out.insert(out.end(), b.begin(), b.end());
	std::sort(out.begin(), out.end());
	return out;
}

class QuickXplain {
public:
	explicit QuickXplain(const NogoodValidator& valid) : valid_(valid) {}

	// Minimal subset of candidates that, together with background, is valid.
	Nogood run(const Nogood& background, bool grew, const Nogood& candidates) {
		if (grew && valid_(background)) { return {}; }
		if (candidates.size() == 1) { return candidates; }
		auto   mid = candidates.begin() + static_cast<std::ptrdiff_t>(candidates.size() / 2);
		Nogood lower(candidates.begin(), mid), upper(mid, candidates.end());
		Nogood d2 = run(joined(background, lower), !lower.empty(), upper);
		Nogood d1 = run(joined(background, d2), !d2.empty(), lower);
		return joined(d1, d2);
	}
private:
	const NogoodValidator& valid_;
};

} // namespace

Nogood minimize_nogood_deletion(const Nogood& nogood, AtomId replacement, const NogoodValidator& valid) {
	Nogood inputs, rep;
	split_replacement(nogood, replacement, inputs, rep);
	if (!valid(nogood)) { throw std::invalid_argument("nogood to minimize is not valid"); }
	std::sort(inputs.begin(), inputs.end());
	Nogood current = joined(inputs, rep);
	for (const Lit& l : inputs) {
		Nogood trial;
		std::copy_if(current.begin(), current.end(), std::back_inserter(trial), [&](const Lit& x) { return x != l; });
		if (valid(trial)) { current = std::move(trial); }
	}
	return current;
}

Nogood minimize_nogood_quickxplain(const Nogood& nogood, AtomId replacement, const NogoodValidator& valid) {
	Nogood inputs, rep;
	split_replacement(nogood, replacement, inputs, rep);
	if (!valid(nogood)) { throw std::invalid_argument("nogood to minimize is not valid"); }
	if (inputs.empty() || valid(rep)) { return rep; }
	std::sort(inputs.begin(), inputs.end());
	return joined(QuickXplain(valid).run(rep, false, inputs), rep);
}

Nogood minimize_nogood(Minimization mode, const Nogood& nogood, AtomId replacement, const NogoodValidator& valid) {
	switch (mode) {
		case Minimization::Off:         return nogood;
		case Minimization::Deletion:    return minimize_nogood_deletion(nogood, replacement, valid);
		case Minimization::QuickXplain: return minimize_nogood_quickxplain(nogood, replacement, valid);
	}
	return nogood;
}

} // namespace hexeval
