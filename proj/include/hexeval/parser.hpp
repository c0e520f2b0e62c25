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
#ifndef HEXEVAL_PARSER_HPP_INCLUDED
#define HEXEVAL_PARSER_HPP_INCLUDED

#include <hexeval/ast.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hexeval {

enum class TokenType : std::uint8_t {
	Identifier, // lowercase identifier
	Variable,   // uppercase identifier
	Integer,
	String,     // text holds the unescaped content
	If,         // :-
	WeakIf,     // :~
	Dot,
	Comma,
	LParen,
	RParen,
	LBracket,
	RBracket,
	Amp,
	Bar,
	Not,
	At,
};

struct Token {
	TokenType   type;
	std::string text;
	std::size_t line   = 1;
	std::size_t column = 1;
};

const char* to_string(TokenType t);

//! Splits text into tokens; '%' starts a comment running to the end of the line.
/*!
 * \throws ParseError on an illegal character or an unterminated string.
 */
std::vector<Token> tokenize(std::string_view text);

struct ParseOptions {
	//! Input kind lookup for external predicates. Unknown externals treat
	//! lowercase identifier inputs as predicate names.
	SignatureLookup signatures;
	//! Rules with more than one head atom are rejected unless set.
	bool allow_disjunction = false;
};

//! Parses a program and checks safety and predicate arities.
/*!
 * \throws ParseError on syntax errors, SafetyError on unsafe rules.
 */
Program parse_program(std::string_view text, const ParseOptions& opts = {});

} // namespace hexeval
#endif
