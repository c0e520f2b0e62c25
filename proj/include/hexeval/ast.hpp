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
#ifndef HEXEVAL_AST_HPP_INCLUDED
#define HEXEVAL_AST_HPP_INCLUDED

#include <hexeval/term.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hexeval {

struct OrdinaryAtom {
	std::string       predicate;
	std::vector<Term> args;
	friend bool operator==(const OrdinaryAtom&, const OrdinaryAtom&) = default;
};

enum class InputKind : std::uint8_t { Predicate, Constant };

//! One input position of an external atom.
/*!
 * For predicate inputs, value is a symbol holding the predicate name.
 */
struct ExternalInput {
	InputKind kind = InputKind::Constant;
	Term      value;
	friend bool operator==(const ExternalInput&, const ExternalInput&) = default;
};

struct ExternalAtom {
	std::string                name;    // without the leading '&'
	std::vector<ExternalInput> inputs;
	std::vector<Term>          outputs;
	friend bool operator==(const ExternalAtom&, const ExternalAtom&) = default;
};

struct Literal {
	std::variant<OrdinaryAtom, ExternalAtom> atom;
	bool                                     negated = false;

	bool                is_external() const { return std::holds_alternative<ExternalAtom>(atom); }
	const OrdinaryAtom& ordinary() const { return std::get<OrdinaryAtom>(atom); }
	const ExternalAtom& external() const { return std::get<ExternalAtom>(atom); }
	friend bool operator==(const Literal&, const Literal&) = default;
};

//! Head size 0 is a constraint, 1 a normal rule, more a disjunctive rule.
struct Rule {
	std::vector<OrdinaryAtom> head;
	std::vector<Literal>      body;
	friend bool operator==(const Rule&, const Rule&) = default;
};

struct WeakConstraint {
	std::vector<Literal> body;
	std::int64_t         weight = 1;
	std::int64_t         level  = 0;
	friend bool operator==(const WeakConstraint&, const WeakConstraint&) = default;
};

struct Program {
	std::vector<Rule>           rules;
	std::vector<WeakConstraint> weak_constraints;
	friend bool operator==(const Program&, const Program&) = default;
};

//! Resolves the declared input kinds of an external predicate, if known.
using SignatureLookup = std::function<std::optional<std::vector<InputKind>>(std::string_view)>;

//! Variables of a rule body (and head) that are not bound by the safety closure.
/*!
 * A variable is safe if it occurs in a positive ordinary body atom, or in the
 * output list of a positive external atom whose constant inputs only mention
 * safe variables. The closure is computed to a fixpoint.
 */
std::vector<std::string> check_safety(const Rule& rule);
std::vector<std::string> check_safety(const WeakConstraint& weak);

std::string to_string(const OrdinaryAtom& a);
std::string to_string(const ExternalAtom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const WeakConstraint& w);
//! Normal form; parse_program(to_string(p)) == p.
std::string to_string(const Program& p);

} // namespace hexeval
#endif
