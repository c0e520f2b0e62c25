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
#include "support.hpp"

#include <hexeval/error.hpp>

#include <doctest.h>

#include <algorithm>

using namespace hexeval;
using namespace hexeval::test;

namespace {

std::vector<TokenType> types(std::string_view text) {
	std::vector<TokenType> out;
	for (const Token& t : tokenize(text)) { out.push_back(t.type); }
	return out;
}

const PluginRegistry& registry() {
	static const PluginRegistry r = builtins::registry();
	return r;
}

std::vector<std::string> unsafe_vars(const std::string& text) {
	try {
		parse(text, registry());
	}
	catch (const SafetyError& e) {
		return e.variables();
	}
	return {};
}

} // namespace

TEST_CASE("tokenize") {
	using T = TokenType;
	CHECK(types("p(a).") == std::vector<T>{T::Identifier, T::LParen, T::Identifier, T::RParen, T::Dot});
	CHECK(tokenize("").empty());
	CHECK(tokenize("  % only a comment\n").empty());

	auto toks = tokenize("fullname(Full) :- &concat[F,L](Full).");
	auto amp  = std::find_if(toks.begin(), toks.end(), [](const Token& t) { return t.type == T::Amp; });
	REQUIRE(amp != toks.end());
	REQUIRE(std::next(amp, 2) < toks.end());
	CHECK(std::next(amp)->type == T::Identifier);
	CHECK(std::next(amp)->text == "concat");
	CHECK(std::next(amp, 2)->type == T::LBracket);
	CHECK(toks[0].type == T::Identifier);
	CHECK(toks[2].type == T::Variable);
	CHECK(toks[4].type == T::If);

	CHECK(types(":~ a | b, not c. [1@2]") == std::vector<T>{T::WeakIf, T::Identifier, T::Bar, T::Identifier, T::Comma, T::Not, T::Identifier, T::Dot,
	                                                        T::LBracket, T::Integer, T::At, T::Integer, T::RBracket});
	CHECK(types("notice") == std::vector<T>{T::Identifier});

	auto str = tokenize("\"a \\\"b\\\"\"");
	REQUIRE(str.size() == 1);
	CHECK(str[0].type == T::String);
	CHECK(str[0].text == "a \"b\"");

	auto pos = tokenize("p.\n  q(X).");
	CHECK(pos[2].line == 2);
	CHECK(pos[2].column == 3);
}

TEST_CASE("tokenize errors carry positions") {
	try {
		tokenize("p.\nq $ r.");
		FAIL("expected a lexical error");
	}
	catch (const ParseError& e) {
		CHECK(e.line() == 2);
		CHECK(e.column() == 3);
	}
	CHECK_THROWS_AS(tokenize("p(\"abc"), ParseError);
	CHECK_THROWS_AS(tokenize("p(_x)."), ParseError);
}

TEST_CASE("parse concat program") {
	Program p = parse("firstname(pat). lastname(doe). fullname(Full) :- &concat[F,L](Full), firstname(F), lastname(L).", registry());
	REQUIRE(p.rules.size() == 3);
	CHECK(p.rules[0].body.empty());
	CHECK(p.rules[1].body.empty());
	const Rule& r = p.rules[2];
	REQUIRE(r.head.size() == 1);
	CHECK(r.head[0].predicate == "fullname");
	REQUIRE(r.body.size() == 3);
	REQUIRE(r.body[0].is_external());
	const ExternalAtom& ext = r.body[0].external();
	CHECK(ext.name == "concat");
	REQUIRE(ext.inputs.size() == 2);
	CHECK(ext.inputs[0].kind == InputKind::Constant);
	CHECK(ext.inputs[0].value == Term::variable("F"));
	CHECK(ext.inputs[1].kind == InputKind::Constant);
	CHECK(ext.inputs[1].value == Term::variable("L"));
	CHECK(ext.outputs == std::vector<Term>{Term::variable("Full")});
	CHECK(p.weak_constraints.empty());
}

TEST_CASE("parse edge cases") {
	CHECK(parse("", registry()) == Program{});
	CHECK(parse("% nothing\n", registry()) == Program{});

	Program c = parse(":- a. :- .", registry());
	REQUIRE(c.rules.size() == 2);
	CHECK(c.rules[0].head.empty());
	CHECK(c.rules[1].body.empty());

	Program w = parse(":~ a, not b. [3@2]\n:~ c. [4]", registry());
	REQUIRE(w.weak_constraints.size() == 2);
	CHECK(w.weak_constraints[0].weight == 3);
	CHECK(w.weak_constraints[0].level == 2);
	CHECK(w.weak_constraints[0].body[1].negated);
	CHECK(w.weak_constraints[1].level == 0);

	Program n = parse("p :- not &id[q]. q.", registry());
	CHECK(n.rules[0].body[0].negated);
	CHECK(n.rules[0].body[0].is_external());

	Program t = parse("p(f(a, g(1)), \"s\", 3).", registry());
	REQUIRE(t.rules[0].head[0].args.size() == 3);
	CHECK(t.rules[0].head[0].args[0] == Term::compound("f", {Term::symbol("a"), Term::compound("g", {Term::integer(1)})}));
	CHECK(t.rules[0].head[0].args[1] == Term::string("s"));
	CHECK(t.rules[0].head[0].args[2] == Term::integer(3));
}

TEST_CASE("disjunctive heads need the feature gate") {
	CHECK_THROWS_AS(parse("a | b.", registry()), ParseError);
	Program p = parse("a | b :- c. c.", registry(), true);
	CHECK(p.rules[0].head.size() == 2);
}

TEST_CASE("input kinds follow the plugin signature") {
	Program p = parse("s(X) :- &diff[dom, nsel](X). t(Z) :- &concat[a, b](Z). u :- &unknown[pred, K], k(K).", registry());
	const auto& diff = p.rules[0].body[0].external();
	CHECK(diff.inputs[0].kind == InputKind::Predicate);
	CHECK(diff.inputs[1].kind == InputKind::Predicate);
	const auto& concat = p.rules[1].body[0].external();
	CHECK(concat.inputs[0].kind == InputKind::Constant);
	CHECK(concat.inputs[0].value == Term::symbol("a"));
	const auto& unknown = p.rules[2].body[0].external();
	CHECK(unknown.inputs[0].kind == InputKind::Predicate);
	CHECK(unknown.inputs[1].kind == InputKind::Constant);

	CHECK_THROWS_AS(parse("s(X) :- &diff[dom, 3](X).", registry()), ParseError);
}

TEST_CASE("predicate arity must be consistent") {
	CHECK_THROWS_AS(parse("p(a). p(a,b).", registry()), ParseError);
	CHECK_THROWS_AS(parse("p. q :- p(a).", registry()), ParseError);
}

TEST_CASE("safety") {
	CHECK(unsafe_vars("r(X) :- q(Y).") == std::vector<std::string>{"X"});
	CHECK(unsafe_vars("fullname(Full) :- &concat[F,L](Full), firstname(F), lastname(L).").empty());
	CHECK(unsafe_vars("p(X) :- not q(X).") == std::vector<std::string>{"X"});
	auto y = unsafe_vars("r(Y) :- &concat[Y,Y](Z).");
	CHECK(std::find(y.begin(), y.end(), "Y") != y.end());
	CHECK(unsafe_vars("sel(X) :- &diff[dom, nsel](X).").empty());
	CHECK(unsafe_vars("p(Z) :- &concat[X,Y](Z), &concat[a,b](X), q(Y).").empty());
	CHECK(unsafe_vars(":~ p(X), q(Y). [1@1]").empty());
	CHECK(unsafe_vars(":~ p(X), not q(Y). [1@1]") == std::vector<std::string>{"Y"});

	try {
		parse("r(X) :- q(Y).", registry());
	}
	catch (const SafetyError& e) {
		CHECK(std::string(e.what()).find("X") != std::string::npos);
		CHECK(std::string(e.what()).find("r(X) :- q(Y).") != std::string::npos);
	}
}

TEST_CASE("safety closure is monotone under added positive atoms") {
	std::mt19937 rng(3);
	const char*  extra[] = {"q(X)", "r(Y)", "p(a)", "p(Z)"};
	for (int i = 0; i != 300; ++i) {
		std::string text = random_program(rng, true);
		Program     p    = parse(text, registry());
		for (Rule r : p.rules) {
			REQUIRE(check_safety(r).empty());
			for (const char* e : extra) {
				Rule bigger = r;
				bigger.body.push_back(parse(std::string("h :- ") + e + ".", registry()).rules[0].body[0]);
				CHECK(check_safety(bigger).empty());
			}
		}
	}
}

TEST_CASE("round trip through the printer") {
	std::vector<std::string> texts;
	std::mt19937             rng(11);
	for (int i = 0; i != 500; ++i) { texts.push_back(random_program(rng, i % 2 == 0)); }
	for (const auto& path : corpus_programs()) { texts.push_back(read_file(path)); }
	texts.push_back("p(\"quote \\\" and \\\\ back\", f(g(1), 2)). q :- p(X, Y), not &id[p]. :- . :~ . [0@0]");
	for (const std::string& text : texts) {
		Program     first   = parse(text, registry(), true);
		std::string printed = to_string(first);
		Program     second  = parse(printed, registry(), true);
		CHECK_MESSAGE(first == second, text);
		CHECK(to_string(second) == printed);
	}
}

TEST_CASE("parse errors lie within the input") {
	const char* bad[] = {
		"p(a", "p(a) :- ", "p :- q r.", ":~ a. [1@", "&id[p].", "p(a)) .", "p :- &id[p.", ":~ a. [x@1]", "p :- not.", "a | .", "\n\n  p(", "p(a)\n",
	};
	for (const char* text : bad) {
		std::string s = text;
		try {
			parse(s, registry(), true);
			FAIL_CHECK("accepted: " << s);
		}
		catch (const ParseError& e) {
			std::size_t lines = static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) + 1;
			CHECK(e.line() >= 1);
			CHECK(e.line() <= lines);
			std::size_t start = 0;
			for (std::size_t l = 1; l < e.line(); ++l) { start = s.find('\n', start) + 1; }
			std::size_t end = s.find('\n', start);
			std::size_t len = (end == std::string::npos ? s.size() : end) - start;
			CHECK(e.column() >= 1);
			CHECK_MESSAGE(e.column() <= len + 1, s);
		}
	}
}
