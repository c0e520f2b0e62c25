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
#include <hexeval/grounder.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace hexeval {

namespace {

using Binding = std::map<std::string, Term>;

Term substitute(const Term& t, const Binding& b) {
	if (t.is_variable()) {
		auto it = b.find(t.name());
		return it != b.end() ? it->second : t;
	}
	if (!t.is_compound()) { return t; }
	std::vector<Term> args;
	args.reserve(t.args().size());
	for (const Term& a : t.args()) { args.push_back(substitute(a, b)); }
	return Term::compound(t.name(), std::move(args));
}

Tuple substitute(const std::vector<Term>& ts, const Binding& b) {
	Tuple out;
	out.reserve(ts.size());
	for (const Term& t : ts) { out.push_back(substitute(t, b)); }
	return out;
}

bool unify(const Term& pattern, const Term& ground, Binding& b) {
	switch (pattern.kind()) {
		case Term::Kind::Variable: {
			auto [it, fresh] = b.emplace(pattern.name(), ground);
			return fresh || it->second == ground;
		}
		case Term::Kind::Compound:
			if (!ground.is_compound() || ground.name() != pattern.name() || ground.args().size() != pattern.args().size()) { return false; }
			for (std::size_t i = 0; i != pattern.args().size(); ++i) {
				if (!unify(pattern.args()[i], ground.args()[i], b)) { return false; }
			}
			return true;
		default:
			return pattern == ground;
	}
}

bool unify(const std::vector<Term>& pattern, const Tuple& ground, Binding& b) {
	if (pattern.size() != ground.size()) { return false; }
	for (std::size_t i = 0; i != pattern.size(); ++i) {
		if (!unify(pattern[i], ground[i], b)) { return false; }
	}
	return true;
}

std::vector<std::string> variables_of(const ExternalAtom& ext) {
	std::vector<std::string> vars;
	for (const ExternalInput& in : ext.inputs) {
		if (in.kind == InputKind::Constant) { in.value.collect_variables(vars); }
	}
	return vars;
}

// Evaluation order of the positive body literals: repeatedly the first literal
// (in textual order) whose inputs are bound. Safety guarantees completeness.
std::vector<std::size_t> join_order(const std::vector<Literal>& body) {
	std::vector<std::size_t> order;
	std::vector<bool>        done(body.size(), false);
	std::vector<std::string> bound;
	auto is_bound = [&](const std::string& v) { return std::find(bound.begin(), bound.end(), v) != bound.end(); };
	for (bool progress = true; progress;) {
		progress = false;
		for (std::size_t i = 0; i != body.size(); ++i) {
			const Literal& l = body[i];
			if (done[i] || l.negated) { continue; }
			if (l.is_external()) {
				auto in = variables_of(l.external());
				if (!std::all_of(in.begin(), in.end(), is_bound)) { continue; }
				for (const Term& t : l.external().outputs) { t.collect_variables(bound); }
			}
			else {
				for (const Term& t : l.ordinary().args) { t.collect_variables(bound); }
			}
			done[i] = true;
			order.push_back(i);
			progress = true;
			break;
		}
	}
	return order;
}

std::string replacement_text(const std::string& prefix, const std::string& name, const std::vector<Term>& inputs, const Tuple& outputs) {
	std::string s = prefix + name + "[" + to_string(inputs) + "]";
	if (!outputs.empty()) { s += "(" + to_string(outputs) + ")"; }
	return s;
}

class Instantiator {
public:
	Instantiator(const Program& program, const PluginRegistry& registry, std::size_t budget)
		: program_(resolve(program, registry))
		, registry_(registry)
		, budget_(budget) {
		for (const Rule& r : program_.rules) {
			rule_orders_.push_back(join_order(r.body));
			for (const OrdinaryAtom& h : r.head) { add_textual(h.args); }
			add_textual(r.body);
		}
		for (const WeakConstraint& w : program_.weak_constraints) {
			weak_orders_.push_back(join_order(w.body));
			add_textual(w.body);
		}
	}

	void saturate() {
		for (bool changed = true; changed;) {
			changed = false;
			for (std::size_t i = 0; i != program_.rules.size(); ++i) {
				const Rule& r = program_.rules[i];
				if (r.head.empty()) { continue; }
				std::vector<std::pair<const OrdinaryAtom*, Tuple>> fresh;
				join(r.body, rule_orders_[i], [&](const Binding& b) {
					for (const OrdinaryAtom& h : r.head) { fresh.emplace_back(&h, substitute(h.args, b)); }
				});
				for (auto& [h, args] : fresh) {
					if (derivable_keys_.insert(atom_text(h->predicate, args)).second) {
						for (const Term& t : args) { add_term(t, h->predicate); }
						derivable_[h->predicate].push_back(std::move(args));
						changed = true;
					}
				}
			}
		}
	}

	DomainReport domain() const {
		DomainReport rep;
		rep.domain.assign(domain_.begin(), domain_.end());
		rep.invented = invented_;
		return rep;
	}

	GroundProgram emit() {
		GroundProgram gp;
		std::unordered_set<std::string> seen_rules;
		for (std::size_t i = 0; i != program_.rules.size(); ++i) {
			const Rule& r = program_.rules[i];
			join(r.body, rule_orders_[i], [&](const Binding& b) {
				GroundRule g;
				for (const OrdinaryAtom& h : r.head) {
					AtomId id = gp.table.intern(h.predicate, substitute(h.args, b));
					if (std::find(g.head.begin(), g.head.end(), id) == g.head.end()) { g.head.push_back(id); }
				}
				g.body = ground_body(gp, r.body, b);
				if (seen_rules.insert(to_string(gp, g)).second) {
					if (g.body.empty() && g.head.size() == 1) { gp.facts.push_back(g.head.front()); }
					gp.rules.push_back(std::move(g));
				}
			});
		}
		for (std::size_t i = 0; i != program_.weak_constraints.size(); ++i) {
			const WeakConstraint& w = program_.weak_constraints[i];
			join(w.body, weak_orders_[i], [&](const Binding& b) {
				gp.weak.push_back(GroundWeak{ground_body(gp, w.body, b), w.weight, w.level});
			});
		}
		std::sort(gp.facts.begin(), gp.facts.end());
		gp.facts.erase(std::unique(gp.facts.begin(), gp.facts.end()), gp.facts.end());
		for (ExternalInstance& inst : gp.externals) {
			const PluginDescriptor& d = registry_.at(inst.plugin);
			inst.position_atoms.assign(inst.inputs.size(), {});
			for (std::size_t p = 0; p != inst.inputs.size(); ++p) {
				if (d.input_kinds[p] != InputKind::Predicate) { continue; }
				inst.position_atoms[p] = gp.table.atoms_of(inst.inputs[p].name());
				if (d.dependency(p) == Dependency::Irrelevant) { continue; }
				inst.relevant_input_atoms.insert(inst.relevant_input_atoms.end(), inst.position_atoms[p].begin(), inst.position_atoms[p].end());
			}
			std::sort(inst.relevant_input_atoms.begin(), inst.relevant_input_atoms.end());
			inst.relevant_input_atoms.erase(std::unique(inst.relevant_input_atoms.begin(), inst.relevant_input_atoms.end()), inst.relevant_input_atoms.end());
		}
		return gp;
	}

private:
	// Normalizes external input kinds against the registry and checks arities.
	static Program resolve(Program program, const PluginRegistry& registry) {
		auto fix = [&](std::vector<Literal>& body) {
			for (Literal& l : body) {
				if (!l.is_external()) { continue; }
				auto&                   ext = std::get<ExternalAtom>(l.atom);
				const PluginDescriptor* d   = registry.find(ext.name);
				if (!d) { throw GroundingError("unknown external predicate '&" + ext.name + "'"); }
				if (ext.inputs.size() != d->input_kinds.size() || ext.outputs.size() != d->output_arity) {
					throw GroundingError("arity mismatch for '&" + ext.name + "': expected " + std::to_string(d->input_kinds.size()) +
					                     " inputs and " + std::to_string(d->output_arity) + " outputs in " + to_string(ext));
				}
				for (std::size_t i = 0; i != ext.inputs.size(); ++i) {
					ExternalInput& in = ext.inputs[i];
					if (d->input_kinds[i] == InputKind::Predicate) {
						if (in.value.kind() != Term::Kind::Symbol) {
							throw GroundingError("input " + std::to_string(i + 1) + " of '&" + ext.name + "' must be a predicate name in " + to_string(ext));
						}
						in.kind = InputKind::Predicate;
					}
					else {
						in.kind = InputKind::Constant;
					}
				}
			}
		};
		for (Rule& r : program.rules) { fix(r.body); }
		for (WeakConstraint& w : program.weak_constraints) { fix(w.body); }
		return program;
	}

	void add_textual(const std::vector<Term>& ts) {
		for (const Term& t : ts) {
			if (t.is_ground()) { add_textual(t); }
			else if (t.is_compound()) { add_textual(t.args()); }
		}
	}
	void add_textual(const Term& t) {
		textual_.insert(t);
		domain_.insert(t);
		if (t.is_compound()) { add_textual(t.args()); }
	}
	void add_textual(const std::vector<Literal>& body) {
		for (const Literal& l : body) {
			if (!l.is_external()) {
				add_textual(l.ordinary().args);
				continue;
			}
			for (const ExternalInput& in : l.external().inputs) {
				if (in.kind == InputKind::Constant) { add_textual(std::vector<Term>{in.value}); }
			}
			add_textual(l.external().outputs);
		}
	}

	void add_term(const Term& t, const std::string& source) {
		if (!domain_.insert(t).second) { return; }
		if (!textual_.contains(t)) {
			invented_.push_back(t);
			if (invented_.size() > budget_) { throw InventionBudgetError(source, budget_); }
		}
		for (const Term& a : t.args()) { add_term(a, source); }
	}

	std::vector<InputValue> input_values(const ExternalAtom& ext, const Binding& b) const {
		std::vector<InputValue> values;
		values.reserve(ext.inputs.size());
		for (const ExternalInput& in : ext.inputs) {
			InputValue v;
			v.kind = in.kind;
			v.term = substitute(in.value, b);
			if (in.kind == InputKind::Predicate) {
				if (auto it = derivable_.find(in.value.name()); it != derivable_.end()) {
					for (const Tuple& args : it->second) { v.extension.add(args, Truth::True); }
				}
			}
			else if (!v.term.is_ground()) {
				throw GroundingError("non-ground input in " + to_string(ext));
			}
			values.push_back(std::move(v));
		}
		return values;
	}

	using Callback = std::function<void(const Binding&)>;

	void join(const std::vector<Literal>& body, const std::vector<std::size_t>& order, const Callback& cb) {
		join(body, order, 0, Binding{}, cb);
	}

	void join(const std::vector<Literal>& body, const std::vector<std::size_t>& order, std::size_t k, const Binding& b, const Callback& cb) {
		if (k == order.size()) {
			cb(b);
			return;
		}
		const Literal& lit = body[order[k]];
		if (!lit.is_external()) {
			const OrdinaryAtom& a  = lit.ordinary();
			auto                it = derivable_.find(a.predicate);
			if (it == derivable_.end()) { return; }
			// derivable_ only grows between joins, never during one
			for (const Tuple& args : it->second) {
				Binding next = b;
				if (unify(a.args, args, next)) { join(body, order, k + 1, next, cb); }
			}
			return;
		}
		const ExternalAtom&     ext    = lit.external();
		const PluginDescriptor& plugin = registry_.at(ext.name);
		std::vector<InputValue> inputs = input_values(ext, b);
		std::vector<Tuple>      tuples;
		try {
			tuples = plugin.enumerator(inputs);
		}
		catch (const InventionBudgetError&) {
			throw;
		}
		catch (const std::exception& e) {
			throw PluginError("&" + ext.name + ": " + e.what());
		}
		std::sort(tuples.begin(), tuples.end());
		tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
		for (const Tuple& out : tuples) {
			if (out.size() != plugin.output_arity) {
				throw PluginError("&" + ext.name + " enumerated a tuple of arity " + std::to_string(out.size()));
			}
			for (const Term& t : out) { add_term(t, ext.name); }
			Binding next = b;
			if (unify(ext.outputs, out, next)) { join(body, order, k + 1, next, cb); }
		}
	}

	std::vector<Lit> ground_body(GroundProgram& gp, const std::vector<Literal>& body, const Binding& b) {
		std::vector<Lit> out;
		for (const Literal& l : body) {
			AtomId id;
			if (l.is_external()) { id = instance(gp, l.external(), b); }
			else                 { id = gp.table.intern(l.ordinary().predicate, substitute(l.ordinary().args, b)); }
			Lit g{id, !l.negated};
			if (std::find(out.begin(), out.end(), g) == out.end()) { out.push_back(g); }
		}
		return out;
	}

	AtomId instance(GroundProgram& gp, const ExternalAtom& ext, const Binding& b) {
		std::vector<Term> inputs;
		for (const ExternalInput& in : ext.inputs) { inputs.push_back(substitute(in.value, b)); }
		Tuple       outputs = substitute(ext.outputs, b);
		std::string text    = replacement_text("e_", ext.name, inputs, outputs);
		if (AtomId id = gp.table.find(text)) { return id; }
		std::size_t      index = gp.externals.size();
		ExternalInstance inst;
		inst.plugin               = ext.name;
		inst.replacement          = gp.table.intern_replacement(text, AtomKind::ReplacementPositive, index);
		inst.negative_replacement = gp.table.intern_replacement(replacement_text("ne_", ext.name, inputs, outputs), AtomKind::ReplacementNegative, index);
		inst.inputs               = std::move(inputs);
		inst.outputs              = std::move(outputs);
		gp.guesses.push_back(GuessPair{inst.replacement, inst.negative_replacement});
		gp.externals.push_back(std::move(inst));
		return gp.externals.back().replacement;
	}

	Program                                   program_;
	const PluginRegistry&                     registry_;
	std::size_t                               budget_;
	std::vector<std::vector<std::size_t>>     rule_orders_;
	std::vector<std::vector<std::size_t>>     weak_orders_;
	std::map<std::string, std::vector<Tuple>> derivable_;
	std::unordered_set<std::string>           derivable_keys_;
	std::set<Term>                            textual_;
	std::set<Term>                            domain_;
	std::vector<Term>                         invented_;
};

} // namespace

DomainReport compute_domain(const Program& program, const PluginRegistry& registry, std::size_t max_invention) {
	Instantiator inst(program, registry, max_invention);
	inst.saturate();
	return inst.domain();
}

GroundProgram ground_program(const Program& program, const PluginRegistry& registry, const GroundingConfig& config) {
	Instantiator inst(program, registry, config.max_invention);
	inst.saturate();
	return inst.emit();
}

} // namespace hexeval
