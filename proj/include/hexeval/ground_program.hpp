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
#ifndef HEXEVAL_GROUND_PROGRAM_HPP_INCLUDED
#define HEXEVAL_GROUND_PROGRAM_HPP_INCLUDED

#include <hexeval/term.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hexeval {

using AtomId = std::uint32_t;

//! Signed atom: holds iff the atom's truth value equals sign.
/*!
 * In rule bodies a negative sign is default negation.
 */
struct Lit {
	AtomId atom = 0;
	bool   sign = true;

	Lit operator~() const { return Lit{atom, !sign}; }
	friend bool operator==(const Lit&, const Lit&) = default;
	friend auto operator<=>(const Lit&, const Lit&) = default;
};

inline Lit pos(AtomId a) { return Lit{a, true}; }
inline Lit neg(AtomId a) { return Lit{a, false}; }

enum class AtomKind : std::uint8_t { Ordinary, ReplacementPositive, ReplacementNegative };

//! Bidirectional ground-atom-text <-> id map; ids are dense starting at 1.
class AtomTable {
public:
	struct Entry {
		std::string text;
		AtomKind    kind = AtomKind::Ordinary;
		std::string predicate; // ordinary atoms only
		Tuple       args;      // ordinary atoms only
		std::size_t external = 0; // replacement atoms: index into GroundProgram::externals
	};

	AtomTable() : entries_(1) {}

	//! Returns the id of an ordinary atom, creating it on first use.
	AtomId intern(const std::string& predicate, const Tuple& args);
	//! Text-keyed variant; text must be the canonical ground atom text.
	AtomId intern(std::string_view text);
	AtomId intern_replacement(std::string text, AtomKind kind, std::size_t external);

	AtomId       find(std::string_view text) const;        // 0 if absent
	std::size_t  size() const { return entries_.size() - 1; }
	const Entry& operator[](AtomId id) const { return entries_[id]; }
	AtomKind     kind(AtomId id) const { return entries_[id].kind; }
	const std::string& text(AtomId id) const { return entries_[id].text; }
	//! Ordinary atoms of a predicate in creation order.
	const std::vector<AtomId>& atoms_of(const std::string& predicate) const;
private:
	std::vector<Entry>                                   entries_;
	std::unordered_map<std::string, AtomId>              index_;
	std::unordered_map<std::string, std::vector<AtomId>> by_predicate_;
};

std::string atom_text(const std::string& predicate, const Tuple& args);

//! A ground external atom &g[inputs](outputs) and its guess pair.
struct ExternalInstance {
	std::string                      plugin;
	std::vector<Term>                inputs;   // per position: constant or predicate name symbol
	Tuple                            outputs;
	AtomId                           replacement = 0;          // e-atom
	AtomId                           negative_replacement = 0; // ne-atom
	//! Per input position: ordinary atoms of the input predicate (empty for constants).
	std::vector<std::vector<AtomId>> position_atoms;
	//! Sorted union of position_atoms over positions not tagged irrelevant.
	std::vector<AtomId>              relevant_input_atoms;
};

struct GroundRule {
	std::vector<AtomId> head;
	std::vector<Lit>    body;
};

struct GroundWeak {
	std::vector<Lit> body;
	std::int64_t     weight = 0;
	std::int64_t     level  = 0;
};

struct GuessPair {
	AtomId positive = 0;
	AtomId negative = 0;
};

struct GroundProgram {
	std::vector<GroundRule>       rules;
	std::vector<GuessPair>        guesses;   // guesses[i] belongs to externals[i]
	std::vector<ExternalInstance> externals;
	std::vector<GroundWeak>       weak;
	AtomTable                     table;
	std::vector<AtomId>           facts;     // sorted

	//! Index of the external instance replaced by atom, if any.
	const ExternalInstance* external_of(AtomId atom) const;
	bool                    is_auxiliary(AtomId atom) const { return table.kind(atom) != AtomKind::Ordinary; }
};

//! Text dump; replacement atoms print as e_<name>[<inputs>](<outputs>).
void        dump(std::ostream& os, const GroundProgram& gp);
std::string to_string(const GroundProgram& gp, const GroundRule& r);

} // namespace hexeval
#endif
