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
#ifndef HEXEVAL_ENGINE_HPP_INCLUDED
#define HEXEVAL_ENGINE_HPP_INCLUDED

#include <hexeval/external.hpp>
#include <hexeval/ground_program.hpp>
#include <hexeval/plugin.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hexeval {

//! Conflict-driven nogood learning core over signed atoms.
/*!
 * Holds the three-valued trail-based assignment and the nogood store with
 * two watched literals per nogood. A nogood is violated iff all of its
 * literals are true.
 */
class SearchEngine {
public:
	enum class Heuristic : std::uint8_t {
		LowestIdFalse, //!< first unassigned atom, assigned false
		Activity,      //!< highest conflict activity, ties to lowest id, assigned false
	};
	enum class AddStatus : std::uint8_t { Ok, Conflict, Unsat };
	struct AddResult {
		AddStatus     status = AddStatus::Ok;
		std::uint32_t nogood = 0; // the violated nogood on Conflict
	};
	struct Analysis {
		Nogood learned;
		int    backjump_level = 0;
		bool   unsat          = false;
	};
	static constexpr std::int32_t no_reason = -1;

	explicit SearchEngine(std::size_t num_atoms = 0, Heuristic heuristic = Heuristic::Activity);

	AtomId      add_atom();
	std::size_t num_atoms() const { return values_.size() - 1; }

	//! Adds a nogood at any point of the search.
	/*!
	 * Backjumps as needed so that a unit nogood propagates at the right
	 * level; returns Conflict (after backjumping to the conflict level) if
	 * the nogood is violated by literals from two or more atoms of that level.
	 */
	AddResult add_nogood(Nogood ng, bool learned = false);
	//! add_nogood followed by conflict resolution; false iff unsatisfiable.
	bool      integrate(Nogood ng, bool learned = false);

	//! Unit propagation to fixpoint; returns a violated nogood on conflict.
	std::optional<std::uint32_t> propagate();
	//! Picks an unassigned atom per heuristic and opens a new decision level.
	Lit      decide();
	//! Opens a new decision level making l true.
	void     assume(Lit l);
	//! First-UIP analysis of a conflict at the current level.
	Analysis analyze(std::uint32_t conflict);
	//! analyze + backjump + assert the learned nogood; false iff unsatisfiable.
	bool     resolve(std::uint32_t conflict);
	void     backjump(int level);

	Truth value(AtomId a) const { return values_[a]; }
	bool  is_true(Lit l) const { return values_[l.atom] == (l.sign ? Truth::True : Truth::False); }
	bool  is_false(Lit l) const { return values_[l.atom] == (l.sign ? Truth::False : Truth::True); }
	int   level() const { return static_cast<int>(trail_lim_.size()); }
	int   level_of(AtomId a) const { return levels_[a]; }
	std::int32_t reason_of(AtomId a) const { return reasons_[a]; }
	bool  complete() const { return trail_.size() == num_atoms(); }
	bool  inconsistent() const { return inconsistent_; }

	const std::vector<Lit>& trail() const { return trail_; }
	const Nogood&           nogood(std::uint32_t i) const { return nogoods_[i]; }
	std::size_t             num_nogoods() const { return nogoods_.size(); }
	double                  activity(AtomId a) const { return activity_[a]; }
	//! Incremented on every assignment change.
	std::uint64_t           changes() const { return changes_; }
	std::uint64_t           conflicts() const { return conflicts_; }
	std::uint64_t           decisions() const { return decisions_; }

private:
	static std::size_t code(Lit l) { return 2 * static_cast<std::size_t>(l.atom) + (l.sign ? 1 : 0); }
	void assign(Lit l, std::int32_t reason);
	void watch(std::uint32_t idx);
	void bump(AtomId a);

	Heuristic                               heuristic_;
	std::vector<Truth>                      values_;
	std::vector<int>                        levels_;
	std::vector<std::int32_t>               reasons_;
	std::vector<double>                     activity_;
	std::vector<Lit>                        trail_;
	std::vector<std::size_t>                trail_lim_;
	std::size_t                             qhead_ = 0;
	std::vector<Nogood>                     nogoods_;
	std::vector<std::vector<std::uint32_t>> watches_;
	std::vector<char>                       seen_;
	double                                  bump_inc_ = 1.0;
	bool                                    inconsistent_ = false;
	std::uint64_t                           changes_ = 0;
	std::uint64_t                           conflicts_ = 0;
	std::uint64_t                           decisions_ = 0;
};

} // namespace hexeval
#endif
