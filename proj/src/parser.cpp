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
#include <hexeval/parser.hpp>

#include <charconv>
#include <map>

namespace hexeval {

namespace {

class Parser {
public:
	Parser(std::string_view text, const ParseOptions& opts)
		: tokens_(tokenize(text))
		, opts_(opts)
		, end_line_(1)
		, end_col_(1) {
		for (char c : text) {
			if (c == '\n') { ++end_line_; end_col_ = 1; }
			else           { ++end_col_; }
		}
	}

	Program run() {
		Program prog;
		while (!at_end()) {
			if (check(TokenType::WeakIf)) { prog.weak_constraints.push_back(weak_constraint()); }
			else                          { prog.rules.push_back(rule()); }
		}
		return prog;
	}

private:
	bool at_end() const { return pos_ >= tokens_.size(); }
	bool check(TokenType t) const { return !at_end() && tokens_[pos_].type == t; }
	bool accept(TokenType t) {
		if (!check(t)) { return false; }
		++pos_;
		return true;
	}
	[[noreturn]] void fail(const std::string& msg) const {
		if (at_end()) { throw ParseError(msg + " at end of input", end_line_, end_col_); }
		const Token& tok = tokens_[pos_];
		throw ParseError(msg + ", found " + to_string(tok.type) + (tok.text.empty() ? "" : " '" + tok.text + "'"), tok.line, tok.column);
	}
	const Token& expect(TokenType t) {
		if (!check(t)) { fail(std::string("expected ") + to_string(t)); }
		return tokens_[pos_++];
	}

	Rule rule() {
		Rule r;
		const Token& first = tokens_[pos_];
		if (!check(TokenType::If)) {
			r.head.push_back(ordinary_atom());
			while (accept(TokenType::Bar)) { r.head.push_back(ordinary_atom()); }
			if (r.head.size() > 1 && !opts_.allow_disjunction) {
				throw ParseError("disjunctive rule heads are not enabled", first.line, first.column);
			}
		}
		if (accept(TokenType::If)) { r.body = body(); }
		expect(TokenType::Dot);
		if (auto unsafe = check_safety(r); !unsafe.empty()) { throw SafetyError(to_string(r), std::move(unsafe)); }
		return r;
	}

	WeakConstraint weak_constraint() {
		expect(TokenType::WeakIf);
		WeakConstraint w;
		w.body = body();
		expect(TokenType::Dot);
		expect(TokenType::LBracket);
		w.weight = integer();
		if (accept(TokenType::At)) { w.level = integer(); }
		expect(TokenType::RBracket);
		if (auto unsafe = check_safety(w); !unsafe.empty()) { throw SafetyError(to_string(w), std::move(unsafe)); }
		return w;
	}

	std::int64_t integer() {
		const Token& tok   = expect(TokenType::Integer);
		std::int64_t value = 0;
		auto [p, ec]       = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
		if (ec != std::errc{}) { throw ParseError("integer out of range '" + tok.text + "'", tok.line, tok.column); }
		return value;
	}

	std::vector<Literal> body() {
		std::vector<Literal> lits;
		if (check(TokenType::Dot)) { return lits; }
		do { lits.push_back(literal()); } while (accept(TokenType::Comma));
		return lits;
	}

	Literal literal() {
		Literal lit;
		lit.negated = accept(TokenType::Not);
		if (check(TokenType::Amp)) { lit.atom = external_atom(); }
		else                       { lit.atom = ordinary_atom(); }
		return lit;
	}

	OrdinaryAtom ordinary_atom() {
		const Token& name = tokens_[pos_];
		expect(TokenType::Identifier);
		OrdinaryAtom atom{name.text, {}};
		if (accept(TokenType::LParen)) { atom.args = term_list(TokenType::RParen); }
		note_arity(atom.predicate, atom.args.size(), name);
		return atom;
	}

	ExternalAtom external_atom() {
		expect(TokenType::Amp);
		const Token& name = expect(TokenType::Identifier);
		ExternalAtom atom;
		atom.name = name.text;
		std::optional<std::vector<InputKind>> sig;
		if (opts_.signatures) { sig = opts_.signatures(atom.name); }
		if (accept(TokenType::LBracket)) {
			if (!check(TokenType::RBracket)) {
				do {
					const Token& at = pos_ < tokens_.size() ? tokens_[pos_] : name;
					Term         t  = term();
					std::size_t  i  = atom.inputs.size();
					InputKind    k  = InputKind::Constant;
					if (t.kind() == Term::Kind::Symbol) {
						k = (!sig || (i < sig->size() && (*sig)[i] == InputKind::Predicate)) ? InputKind::Predicate : InputKind::Constant;
					}
					else if (sig && i < sig->size() && (*sig)[i] == InputKind::Predicate) {
						throw ParseError("input " + std::to_string(i + 1) + " of &" + atom.name + " must be a predicate name", at.line, at.column);
					}
					atom.inputs.push_back(ExternalInput{k, std::move(t)});
				} while (accept(TokenType::Comma));
			}
			expect(TokenType::RBracket);
		}
		if (accept(TokenType::LParen)) { atom.outputs = term_list(TokenType::RParen); }
		return atom;
	}

	std::vector<Term> term_list(TokenType close) {
		std::vector<Term> terms;
		do { terms.push_back(term()); } while (accept(TokenType::Comma));
		expect(close);
		return terms;
	}

	Term term() {
		if (at_end()) { fail("expected term"); }
		const Token& tok = tokens_[pos_];
		switch (tok.type) {
			case TokenType::Variable: ++pos_; return Term::variable(tok.text);
			case TokenType::String:   ++pos_; return Term::string(tok.text);
			case TokenType::Integer:  return Term::integer(integer());
			case TokenType::Identifier:
				++pos_;
				if (accept(TokenType::LParen)) { return Term::compound(tok.text, term_list(TokenType::RParen)); }
				return Term::symbol(tok.text);
			default:
				fail("expected term");
		}
	}

	void note_arity(const std::string& pred, std::size_t arity, const Token& at) {
		auto [it, fresh] = arities_.emplace(pred, arity);
		if (!fresh && it->second != arity) {
			throw ParseError("predicate '" + pred + "' used with arity " + std::to_string(arity) + " and " + std::to_string(it->second), at.line, at.column);
		}
	}

	std::vector<Token>                 tokens_;
	const ParseOptions&                opts_;
	std::size_t                        pos_ = 0;
	std::size_t                        end_line_;
	std::size_t                        end_col_;
	std::map<std::string, std::size_t> arities_;
};

} // namespace

Program parse_program(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

} // namespace hexeval
