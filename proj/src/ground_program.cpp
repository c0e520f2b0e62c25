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
#include <hexeval/ground_program.hpp>

#include <ostream>

namespace hexeval {

std::string atom_text(const std::string& predicate, const Tuple& args) {
	if (args.empty()) { return predicate; }
	return predicate + "(" + to_string(args) + ")";
}

AtomId AtomTable::intern(const std::string& predicate, const Tuple& args) {
	std::string text = atom_text(predicate, args);
	if (AtomId id = find(text)) { return id; }
	auto id = static_cast<AtomId>(entries_.size());
	entries_.push_back(Entry{text, AtomKind::Ordinary, predicate, args, 0});
	index_.emplace(std::move(text), id);
	by_predicate_[predicate].push_back(id);
	return id;
}

AtomId AtomTable::intern(std::string_view text) {
	if (AtomId id = find(text)) { return id; }
	std::string key(text);
	std::string pred = key.substr(0, key.find('('));
	auto        id   = static_cast<AtomId>(entries_.size());
	entries_.push_back(Entry{key, AtomKind::Ordinary, pred, {}, 0});
	index_.emplace(std::move(key), id);
	by_predicate_[pred].push_back(id);
	return id;
}

AtomId AtomTable::intern_replacement(std::string text, AtomKind kind, std::size_t external) {
	if (AtomId id = find(text)) { return id; }
	auto id = static_cast<AtomId>(entries_.size());
	entries_.push_back(Entry{text, kind, {}, {}, external});
	index_.emplace(std::move(text), id);
	return id;
}

AtomId AtomTable::find(std::string_view text) const {
	auto it = index_.find(std::string(text));
	return it != index_.end() ? it->second : 0;
}

const std::vector<AtomId>& AtomTable::atoms_of(const std::string& predicate) const {
	static const std::vector<AtomId> none;
	auto it = by_predicate_.find(predicate);
	return it != by_predicate_.end() ? it->second : none;
}

const ExternalInstance* GroundProgram::external_of(AtomId atom) const {
	if (atom == 0 || atom > table.size() || table.kind(atom) == AtomKind::Ordinary) { return nullptr; }
	return &externals[table[atom].external];
}

namespace {
std::string lit_text(const GroundProgram& gp, Lit l) {
	return (l.sign ? "" : "not ") + gp.table.text(l.atom);
}
std::string body_text(const GroundProgram& gp, const std::vector<Lit>& body) {
	std::string out;
	for (std::size_t i = 0; i != body.size(); ++i) {
		if (i) { out += ", "; }
		out += lit_text(gp, body[i]);
	}
	return out;
}
} // namespace

std::string to_string(const GroundProgram& gp, const GroundRule& r) {
	std::string out;
	for (std::size_t i = 0; i != r.head.size(); ++i) {
		if (i) { out += " | "; }
		out += gp.table.text(r.head[i]);
	}
	if (!r.body.empty()) { out += (r.head.empty() ? ":- " : " :- ") + body_text(gp, r.body); }
	else if (r.head.empty()) { out += ":-"; }
	return out + ".";
}

void dump(std::ostream& os, const GroundProgram& gp) {
	for (const GroundRule& r : gp.rules) { os << to_string(gp, r) << '\n'; }
	for (const GuessPair& g : gp.guesses) {
		os << gp.table.text(g.positive) << " | " << gp.table.text(g.negative) << ".\n";
	}
	for (const GroundWeak& w : gp.weak) {
		os << ":~ " << body_text(gp, w.body) << ". [" << w.weight << '@' << w.level << "]\n";
	}
}

} // namespace hexeval
