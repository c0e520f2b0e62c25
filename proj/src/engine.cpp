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
#include <hexeval/engine.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hexeval {

namespace {
constexpr double activity_decay = 0.95;
constexpr double activity_limit = 1e100;
} // namespace

SearchEngine::SearchEngine(std::size_t num_atoms, Heuristic heuristic)
	: heuristic_(heuristic)
	, values_(num_atoms + 1, Truth::Unassigned)
	, levels_(num_atoms + 1, 0)
	, reasons_(num_atoms + 1, no_reason)
	, activity_(num_atoms + 1, 0.0)
	, watches_(2 * (num_atoms + 1))
	, seen_(num_atoms + 1, 0) {}

AtomId SearchEngine::add_atom() {
	values_.push_back(Truth::Unassigned);
	levels_.push_back(0);
	reasons_.push_back(no_reason);
	activity_.push_back(0.0);
	seen_.push_back(0);
	watches_.resize(2 * values_.size());
	return static_cast<AtomId>(num_atoms());
}

void SearchEngine::assign(Lit l, std::int32_t reason) {
	assert(values_[l.atom] == Truth::Unassigned);
	values_[l.atom]  = l.sign ? Truth::True : Truth::False;
	levels_[l.atom]  = level();
	reasons_[l.atom] = reason;
	trail_.push_back(l);
	++changes_;
}

void SearchEngine::watch(std::uint32_t idx) {
	const Nogood& ng = nogoods_[idx];
	watches_[code(ng[0])].push_back(idx);
	watches_[code(ng[1])].push_back(idx);
}

void SearchEngine::backjump(int target) {
	if (target >= level()) { return; }
	std::size_t keep = trail_lim_[static_cast<std::size_t>(target)];
	while (trail_.size() > keep) {
		AtomId a    = trail_.back().atom;
		values_[a]  = Truth::Unassigned;
		reasons_[a] = no_reason;
		trail_.pop_back();
	}
	trail_lim_.resize(static_cast<std::size_t>(target));
	qhead_ = std::min(qhead_, trail_.size());
	++changes_;
}

SearchEngine::AddResult SearchEngine::add_nogood(Nogood ng, bool) {
	if (!normalize(ng)) { return {}; } // contains a and not a: never violated
	if (inconsistent_) { return {AddStatus::Unsat, 0}; }
	if (ng.empty()) {
		inconsistent_ = true;
		return {AddStatus::Unsat, 0};
	}
	for (const Lit& l : ng) {
		if (l.atom == 0 || l.atom > num_atoms()) { throw std::out_of_range("nogood refers to unknown atom"); }
	}
	// non-true literals first (unassigned before false), each group by decreasing level
	auto rank = [this](const Lit& l) { return is_true(l) ? 2 : (is_false(l) ? 1 : 0); };
	std::stable_sort(ng.begin(), ng.end(), [&](const Lit& x, const Lit& y) {
		int rx = rank(x), ry = rank(y);
		if (rx != ry) { return rx < ry; }
		return levels_[x.atom] > levels_[y.atom];
	});
	auto idx = static_cast<std::uint32_t>(nogoods_.size());
	nogoods_.push_back(ng);
	const Nogood& n = nogoods_.back();

	if (n.size() == 1) {
		Lit l = n[0];
		if (values_[l.atom] != Truth::Unassigned && levels_[l.atom] == 0) {
			if (is_true(l)) {
				inconsistent_ = true;
				return {AddStatus::Unsat, 0};
			}
			return {};
		}
		backjump(0);
		assign(~l, static_cast<std::int32_t>(idx));
		return {};
	}
	watch(idx);

	std::size_t open = static_cast<std::size_t>(std::count_if(n.begin(), n.end(), [&](const Lit& l) { return !is_true(l); }));
	if (open >= 2) { return {}; }
	if (open == 1) {
		Lit x         = n[0];
		int max_level = levels_[n[1].atom];
		if (values_[x.atom] == Truth::Unassigned || levels_[x.atom] > max_level) {
			backjump(max_level);
			assign(~x, static_cast<std::int32_t>(idx));
		}
		return {};
	}
	int top = levels_[n[0].atom];
	if (top == 0) {
		inconsistent_ = true;
		return {AddStatus::Unsat, 0};
	}
	if (levels_[n[1].atom] < top) {
		backjump(levels_[n[1].atom]);
		assign(~n[0], static_cast<std::int32_t>(idx));
		return {};
	}
	backjump(top);
	return {AddStatus::Conflict, idx};
}

bool SearchEngine::integrate(Nogood ng, bool learned) {
	AddResult r = add_nogood(std::move(ng), learned);
	if (r.status == AddStatus::Unsat) { return false; }
	if (r.status == AddStatus::Conflict) { return resolve(r.nogood); }
	return true;
}

std::optional<std::uint32_t> SearchEngine::propagate() {
	while (qhead_ < trail_.size()) {
		Lit   p  = trail_[qhead_++];
		auto& ws = watches_[code(p)];
		std::size_t i = 0, j = 0;
		while (i < ws.size()) {
			std::uint32_t ci = ws[i++];
			Nogood&       ng = nogoods_[ci];
			if (ng[0] == p) { std::swap(ng[0], ng[1]); }
			if (is_false(ng[0])) {
				ws[j++] = ci;
				continue;
			}
			bool moved = false;
			for (std::size_t k = 2; k < ng.size(); ++k) {
				if (!is_true(ng[k])) {
					std::swap(ng[1], ng[k]);
					watches_[code(ng[1])].push_back(ci);
					moved = true;
					break;
				}
			}
			if (moved) { continue; }
			ws[j++] = ci;
			if (is_true(ng[0])) {
				while (i < ws.size()) { ws[j++] = ws[i++]; }
				ws.resize(j);
				qhead_ = trail_.size();
				return ci;
			}
			assign(~ng[0], static_cast<std::int32_t>(ci));
		}
		ws.resize(j);
	}
	return std::nullopt;
}

Lit SearchEngine::decide() {
	AtomId best = 0;
	for (AtomId a = 1; a <= num_atoms(); ++a) {
		if (values_[a] != Truth::Unassigned) { continue; }
		if (heuristic_ == Heuristic::LowestIdFalse) {
			best = a;
			break;
		}
		if (best == 0 || activity_[a] > activity_[best]) { best = a; }
	}
	if (best == 0) { throw std::logic_error("decide called on a complete assignment"); }
	Lit l{best, false};
	assume(l);
	return l;
}

void SearchEngine::assume(Lit l) {
	if (values_[l.atom] != Truth::Unassigned) { throw std::logic_error("assume on an assigned atom"); }
	trail_lim_.push_back(trail_.size());
	++decisions_;
	assign(l, no_reason);
}

void SearchEngine::bump(AtomId a) {
	if ((activity_[a] += bump_inc_) > activity_limit) {
		for (double& x : activity_) { x *= 1 / activity_limit; }
		bump_inc_ *= 1 / activity_limit;
	}
}

SearchEngine::Analysis SearchEngine::analyze(std::uint32_t conflict) {
	Analysis res;
	if (level() == 0) {
		res.unsat = true;
		return res;
	}
	const int current = level();
	int       pending = 0;
	Lit       uip{};
	bool      resolving = false;
	auto      index     = static_cast<std::ptrdiff_t>(trail_.size()) - 1;
	const Nogood* reason = &nogoods_[conflict];
	std::vector<AtomId> marked;
	for (;;) {
		for (const Lit& q : *reason) {
			if (resolving && q == ~uip) { continue; }
			AtomId v = q.atom;
			if (seen_[v] || levels_[v] == 0) { continue; }
			seen_[v] = 1;
			marked.push_back(v);
			bump(v);
			if (levels_[v] == current) { ++pending; }
			else                       { res.learned.push_back(q); }
		}
		while (!seen_[trail_[static_cast<std::size_t>(index)].atom]) { --index; }
		uip = trail_[static_cast<std::size_t>(index--)];
		seen_[uip.atom] = 0;
		if (--pending == 0) { break; }
		reason    = &nogoods_[static_cast<std::size_t>(reasons_[uip.atom])];
		resolving = true;
	}
	res.learned.push_back(uip);
	for (AtomId v : marked) { seen_[v] = 0; }
	for (const Lit& l : res.learned) {
		if (l != uip) { res.backjump_level = std::max(res.backjump_level, levels_[l.atom]); }
	}
	bump_inc_ /= activity_decay;
	normalize(res.learned);
	return res;
}

bool SearchEngine::resolve(std::uint32_t conflict) {
	++conflicts_;
	Analysis a = analyze(conflict);
	if (a.unsat) {
		inconsistent_ = true;
		return false;
	}
	backjump(a.backjump_level);
	return add_nogood(std::move(a.learned), true).status == AddStatus::Ok;
}

} // namespace hexeval
