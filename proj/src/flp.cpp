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
#include <hexeval/flp.hpp>

#include <algorithm>
#include <map>

namespace hexeval {

bool DependencyGraph::has_edge(std::size_t from, std::size_t to) const {
	const auto& s = successors[from];
	return std::find(s.begin(), s.end(), to) != s.end();
}

DependencyGraph build_dependency_graph(const GroundProgram& gp, const PluginRegistry& registry) {
	DependencyGraph g;
	g.num_atoms     = gp.table.size();
	g.num_externals = gp.externals.size();
	g.successors.assign(g.num_atoms + g.num_externals + 1, {});
	auto edge = [&](std::size_t from, std::size_t to) {
		auto& s = g.successors[from];
		if (std::find(s.begin(), s.end(), to) == s.end()) { s.push_back(to); }
	};
	for (std::size_t i = 0; i != gp.externals.size(); ++i) {
		const ExternalInstance& inst   = gp.externals[i];
		const PluginDescriptor& plugin = registry.at(inst.plugin);
		for (std::size_t p = 0; p != inst.position_atoms.size(); ++p) {
			if (plugin.dependency(p) == Dependency::Irrelevant) { continue; }
			for (AtomId a : inst.position_atoms[p]) { edge(a, g.external_node(i)); }
		}
	}
	for (const GroundRule& r : gp.rules) {
		if (r.head.size() > 1) { g.disjunctive = true; }
		for (const Lit& l : r.body) {
			const ExternalInstance* inst = gp.external_of(l.atom);
			for (AtomId h : r.head) {
				if (inst) { edge(g.external_node(static_cast<std::size_t>(inst - gp.externals.data())), h); }
				else if (l.sign) { edge(l.atom, h); }
			}
		}
	}
	for (auto& s : g.successors) { std::sort(s.begin(), s.end()); }
	return g;
}

bool needs_flp_check(const DependencyGraph& graph) {
	if (graph.disjunctive) { return true; }
	enum : std::uint8_t { White, Grey, Black };
	std::vector<std::uint8_t>                          color(graph.successors.size(), White);
	std::vector<std::pair<std::size_t, std::size_t>>   stack;
	for (std::size_t root = 1; root < graph.successors.size(); ++root) {
		if (color[root] != White) { continue; }
		color[root] = Grey;
		stack.emplace_back(root, 0);
		while (!stack.empty()) {
			auto& [node, next] = stack.back();
			if (next == graph.successors[node].size()) {
				color[node] = Black;
				stack.pop_back();
				continue;
			}
			std::size_t succ = graph.successors[node][next++];
			if (color[succ] == Grey) { return true; }
			if (color[succ] == White) {
				color[succ] = Grey;
				stack.emplace_back(succ, 0);
			}
		}
	}
	return false;
}

namespace {

Truth lit_value(Truth atom, bool sign) {
	if (atom == Truth::Unassigned) { return atom; }
	return (atom == Truth::True) == sign ? Truth::True : Truth::False;
}

Truth from_verdict(Verdict v) {
	switch (v) {
		case Verdict::True:  return Truth::True;
		case Verdict::False: return Truth::False;
		default:             return Truth::Unassigned;
	}
}

} // namespace

ReductProgram flp_reduct(const GroundProgram& gp, const OracleEvaluator& eval, const TruthFn& candidate) {
	ReductProgram reduct;
	for (std::size_t i = 0; i != gp.rules.size(); ++i) {
		bool holds = true;
		for (const Lit& l : gp.rules[i].body) {
			Truth atom;
			if (const ExternalInstance* inst = gp.external_of(l.atom)) {
				atom = from_verdict(eval.evaluate(*inst, candidate));
			}
			else {
				atom = candidate(l.atom);
			}
			if (lit_value(atom, l.sign) != Truth::True) {
				holds = false;
				break;
			}
		}
		if (holds) { reduct.rules.push_back(i); }
	}
	return reduct;
}

namespace {

// Backtracking search for a model of the reduct strictly inside the candidate.
// Atoms outside the candidate are false, facts are true, the remaining true
// atoms of the candidate are the search variables.
class SmallerModelSearch {
public:
	SmallerModelSearch(const GroundProgram& gp, const ReductProgram& reduct, const OracleEvaluator& eval, const std::vector<AtomId>& true_atoms)
		: gp_(gp)
		, reduct_(reduct)
		, eval_(eval)
		, slot_(gp.table.size() + 1, -1)
		, in_candidate_(gp.table.size() + 1, false) {
		for (AtomId a : true_atoms) {
			in_candidate_[a] = true;
			if (!std::binary_search(gp.facts.begin(), gp.facts.end(), a)) {
				slot_[a] = static_cast<int>(vars_.size());
				vars_.push_back(a);
			}
		}
	}

	bool found() {
		std::vector<Truth> state(vars_.size(), Truth::Unassigned);
		return search(state);
	}

private:
	Truth atom_value(const std::vector<Truth>& state, AtomId a) const {
		if (!in_candidate_[a]) { return Truth::False; }
		return slot_[a] < 0 ? Truth::True : state[static_cast<std::size_t>(slot_[a])];
	}

	Truth literal_value(const std::vector<Truth>& state, const Lit& l) const {
		if (const ExternalInstance* inst = gp_.external_of(l.atom)) {
			Verdict v = eval_.evaluate(*inst, [&](AtomId a) { return atom_value(state, a); });
			return lit_value(from_verdict(v), l.sign);
		}
		return lit_value(atom_value(state, l.atom), l.sign);
	}

	// Unit propagation over the reduct; false on conflict.
	bool propagate(std::vector<Truth>& state) const {
		for (bool changed = true; changed;) {
			changed = false;
			for (std::size_t ri : reduct_.rules) {
				const GroundRule& r = gp_.rules[ri];
				Truth             body = Truth::True;
				const Lit*        open_body = nullptr;
				int               open_count = 0;
				for (const Lit& l : r.body) {
					Truth v = literal_value(state, l);
					if (v == Truth::False) {
						body = Truth::False;
						break;
					}
					if (v == Truth::Unassigned) {
						body = Truth::Unassigned;
						++open_count;
						open_body = gp_.external_of(l.atom) ? nullptr : &l;
					}
				}
				if (body == Truth::False) { continue; }
				bool   head_true = false;
				AtomId open_head = 0;
				int    open_heads = 0;
				for (AtomId h : r.head) {
					Truth v = atom_value(state, h);
					if (v == Truth::True) { head_true = true; break; }
					if (v == Truth::Unassigned) { open_head = h; ++open_heads; }
				}
				if (head_true) { continue; }
				if (body == Truth::True) {
					if (open_heads == 0) { return false; }
					if (open_heads == 1) {
						state[static_cast<std::size_t>(slot_[open_head])] = Truth::True;
						changed = true;
					}
				}
				else if (open_heads == 0 && open_count == 1 && open_body && open_body->sign && slot_[open_body->atom] >= 0) {
					state[static_cast<std::size_t>(slot_[open_body->atom])] = Truth::False;
					changed = true;
				}
			}
		}
		return true;
	}

	bool search(std::vector<Truth>& state) const {
		if (!propagate(state)) { return false; }
		auto open = std::find(state.begin(), state.end(), Truth::Unassigned);
		if (open == state.end()) {
			// the candidate itself is not a proper subset
			return std::find(state.begin(), state.end(), Truth::False) != state.end();
		}
		for (Truth choice : {Truth::False, Truth::True}) {
			std::vector<Truth> next = state;
			next[static_cast<std::size_t>(open - state.begin())] = choice;
			if (search(next)) { return true; }
		}
		return false;
	}

	const GroundProgram&   gp_;
	const ReductProgram&   reduct_;
	const OracleEvaluator& eval_;
	std::vector<int>       slot_;
	std::vector<bool>      in_candidate_;
	std::vector<AtomId>    vars_;
};

} // namespace

bool is_minimal_model(const GroundProgram& gp, const ReductProgram& reduct, const OracleEvaluator& eval, const std::vector<AtomId>& true_atoms) {
	return !SmallerModelSearch(gp, reduct, eval, true_atoms).found();
}

int compare_costs(const CostVector& lhs, const CostVector& rhs) {
	std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>, std::greater<>> levels;
	for (auto [l, w] : lhs) { levels[l].first += w; }
	for (auto [l, w] : rhs) { levels[l].second += w; }
	for (auto& [level, ws] : levels) {
		if (ws.first != ws.second) { return ws.first < ws.second ? -1 : 1; }
	}
	return 0;
}

} // namespace hexeval
