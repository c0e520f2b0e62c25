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
#include <hexeval/flp.hpp>
#include <hexeval/grounder.hpp>

#include <algorithm>
#include <map>
#include <set>

// Literal implementation of the answer-set definition, used as test oracle.
// It shares only the domain computation with the grounder.

namespace hexeval {

namespace {

struct RefExternal {
	const PluginDescriptor* plugin = nullptr;
	std::vector<Term>       inputs;
	Tuple                   outputs;
};

struct RefLiteral {
	bool        negated  = false;
	int         atom     = -1;     // index into head atoms, -1 if never derivable
	int         external = -1;     // index into externals
};

struct RefRule {
	std::vector<int>        head;
	std::vector<RefLiteral> body;
};

struct RefWeak {
	std::vector<RefLiteral> body;
	std::int64_t            weight;
	std::int64_t            level;
};

Term apply(const Term& t, const std::map<std::string, Term>& b) {
	if (t.is_variable()) { return b.at(t.name()); }
	if (!t.is_compound()) { return t; }
	std::vector<Term> args;
	for (const Term& a : t.args()) { args.push_back(apply(a, b)); }
	return Term::compound(t.name(), std::move(args));
}

class Reference {
public:
	Reference(const Program& program, const PluginRegistry& registry, std::size_t max_atoms)
		: program_(program)
		, registry_(registry) {
		domain_ = compute_domain(program, registry, GroundingConfig{}.max_invention).domain;
		// head atoms first, so that body atoms can be resolved against them
		for (const Rule& r : program.rules) {
			for_each_substitution(r.head, r.body, [&](const std::map<std::string, Term>& b) {
				for (const OrdinaryAtom& h : r.head) { head_atom(h.predicate, apply_all(h.args, b)); }
			});
		}
		if (atoms_.size() > max_atoms) {
			throw GroundingError("reference enumeration limited to " + std::to_string(max_atoms) + " atoms, program has " + std::to_string(atoms_.size()));
		}
		for (const Rule& r : program.rules) {
			for_each_substitution(r.head, r.body, [&](const std::map<std::string, Term>& b) {
				RefRule g;
				for (const OrdinaryAtom& h : r.head) { g.head.push_back(index_.at(atom_text(h.predicate, apply_all(h.args, b)))); }
				g.body = ground_body(r.body, b);
				rules_.push_back(std::move(g));
			});
		}
		for (const WeakConstraint& w : program.weak_constraints) {
			for_each_substitution({}, w.body, [&](const std::map<std::string, Term>& b) {
				weak_.push_back(RefWeak{ground_body(w.body, b), w.weight, w.level});
			});
		}
		for (const WeakConstraint& w : program.weak_constraints) { levels_.insert(w.level); }
	}

	ReferenceResult run() const {
		ReferenceResult res;
		res.num_atoms = atoms_.size();
		const std::uint64_t full = std::uint64_t{1} << atoms_.size();
		std::vector<std::pair<std::vector<std::string>, CostVector>> found;
		for (std::uint64_t m = 0; m != full; ++m) {
			if (!is_model(m, m) || !is_minimal(m)) { continue; }
			std::vector<std::string> names;
			for (std::size_t i = 0; i != atoms_.size(); ++i) {
				if (m >> i & 1) { names.push_back(texts_[i]); }
			}
			std::sort(names.begin(), names.end());
			found.emplace_back(std::move(names), cost(m));
		}
		std::sort(found.begin(), found.end());
		for (auto& [as, c] : found) {
			res.answer_sets.push_back(std::move(as));
			res.costs.push_back(std::move(c));
		}
		return res;
	}

private:
	template <class F>
	void for_each_substitution(const std::vector<OrdinaryAtom>& head, const std::vector<Literal>& body, F&& f) {
		std::vector<std::string> vars;
		for (const OrdinaryAtom& h : head) {
			for (const Term& t : h.args) { t.collect_variables(vars); }
		}
		for (const Literal& l : body) {
			if (l.is_external()) {
				for (const ExternalInput& in : l.external().inputs) { in.value.collect_variables(vars); }
				for (const Term& t : l.external().outputs) { t.collect_variables(vars); }
			}
			else {
				for (const Term& t : l.ordinary().args) { t.collect_variables(vars); }
			}
		}
		if (domain_.empty() && !vars.empty()) { return; }
		std::vector<std::size_t> digit(vars.size(), 0);
		for (;;) {
			std::map<std::string, Term> b;
			for (std::size_t i = 0; i != vars.size(); ++i) { b[vars[i]] = domain_[digit[i]]; }
			f(b);
			std::size_t k = 0;
			while (k != digit.size() && ++digit[k] == domain_.size()) { digit[k++] = 0; }
			if (k == digit.size()) { break; }
		}
	}

	static Tuple apply_all(const std::vector<Term>& ts, const std::map<std::string, Term>& b) {
		Tuple out;
		for (const Term& t : ts) { out.push_back(apply(t, b)); }
		return out;
	}

	void head_atom(const std::string& pred, Tuple args) {
		std::string text = atom_text(pred, args);
		if (index_.count(text)) { return; }
		index_.emplace(text, static_cast<int>(atoms_.size()));
		texts_.push_back(text);
		by_predicate_[pred].push_back(static_cast<int>(atoms_.size()));
		atoms_.push_back(std::move(args));
	}

	std::vector<RefLiteral> ground_body(const std::vector<Literal>& body, const std::map<std::string, Term>& b) {
		std::vector<RefLiteral> out;
		for (const Literal& l : body) {
			RefLiteral g;
			g.negated = l.negated;
			if (l.is_external()) {
				const ExternalAtom& ext = l.external();
				RefExternal         e;
				e.plugin = &registry_.at(ext.name);
				for (const ExternalInput& in : ext.inputs) { e.inputs.push_back(apply(in.value, b)); }
				e.outputs = apply_all(ext.outputs, b);
				g.external = static_cast<int>(externals_.size());
				externals_.push_back(std::move(e));
			}
			else {
				auto it = index_.find(atom_text(l.ordinary().predicate, apply_all(l.ordinary().args, b)));
				g.atom  = it != index_.end() ? it->second : -1;
			}
			out.push_back(g);
		}
		return out;
	}

	bool external_true(const RefExternal& e, std::uint64_t m) const {
		std::vector<InputValue> inputs(e.inputs.size());
		for (std::size_t p = 0; p != e.inputs.size(); ++p) {
			inputs[p].kind = e.plugin->input_kinds[p];
			inputs[p].term = e.inputs[p];
			if (inputs[p].kind != InputKind::Predicate) { continue; }
			auto it = by_predicate_.find(e.inputs[p].name());
			if (it == by_predicate_.end()) { continue; }
			for (int a : it->second) { inputs[p].extension.add(atoms_[static_cast<std::size_t>(a)], (m >> a & 1) ? Truth::True : Truth::False); }
		}
		Verdict v = e.plugin->oracle(OracleQuery{inputs, e.outputs});
		if (v == Verdict::Unknown) { throw PluginError("&" + e.plugin->name + " returned unknown on complete input"); }
		return v == Verdict::True;
	}

	bool body_true(const std::vector<RefLiteral>& body, std::uint64_t m) const {
		for (const RefLiteral& l : body) {
			bool v = l.external >= 0 ? external_true(externals_[static_cast<std::size_t>(l.external)], m)
			                         : (l.atom >= 0 && (m >> l.atom & 1));
			if (v == l.negated) { return false; }
		}
		return true;
	}

	bool head_true(const RefRule& r, std::uint64_t m) const {
		return std::any_of(r.head.begin(), r.head.end(), [m](int a) { return (m >> a & 1) != 0; });
	}

	// Does m satisfy every rule whose body holds under reduct_of?
	bool is_model(std::uint64_t m, std::uint64_t reduct_of) const {
		for (const RefRule& r : rules_) {
			if (reduct_of != m && !body_true(r.body, reduct_of)) { continue; }
			if (body_true(r.body, m) && !head_true(r, m)) { return false; }
		}
		return true;
	}

	bool is_minimal(std::uint64_t m) const {
		// every proper subset of m, checked against the FLP-reduct of m
		for (std::uint64_t s = (m - 1) & m;; s = (s - 1) & m) {
			if (s != m && is_model(s, m)) { return false; }
			if (s == 0) { break; }
		}
		return true;
	}

	CostVector cost(std::uint64_t m) const {
		std::map<std::int64_t, std::int64_t, std::greater<>> sums;
		for (std::int64_t l : levels_) { sums[l] = 0; }
		for (const RefWeak& w : weak_) {
			if (body_true(w.body, m)) { sums[w.level] += w.weight; }
		}
		return CostVector(sums.begin(), sums.end());
	}

	const Program&                          program_;
	const PluginRegistry&                   registry_;
	std::vector<Term>                       domain_;
	std::vector<Tuple>                      atoms_;
	std::vector<std::string>                texts_;
	std::map<std::string, int>              index_;
	std::map<std::string, std::vector<int>> by_predicate_;
	std::vector<RefExternal>                externals_;
	std::vector<RefRule>                    rules_;
	std::vector<RefWeak>                    weak_;
	std::set<std::int64_t>                  levels_;
};

} // namespace

ReferenceResult brute_force_answer_sets(const Program& program, const PluginRegistry& registry, std::size_t max_atoms) {
	if (max_atoms > 30) { max_atoms = 30; }
	return Reference(program, registry, max_atoms).run();
}

} // namespace hexeval
