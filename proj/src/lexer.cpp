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

#include <cctype>

namespace hexeval {

const char* to_string(TokenType t) {
	switch (t) {
		case TokenType::Identifier: return "identifier";
		case TokenType::Variable:   return "variable";
		case TokenType::Integer:    return "integer";
		case TokenType::String:     return "string";
		case TokenType::If:         return "':-'";
		case TokenType::WeakIf:     return "':~'";
		case TokenType::Dot:        return "'.'";
		case TokenType::Comma:      return "','";
		case TokenType::LParen:     return "'('";
		case TokenType::RParen:     return "')'";
		case TokenType::LBracket:   return "'['";
		case TokenType::RBracket:   return "']'";
		case TokenType::Amp:        return "'&'";
		case TokenType::Bar:        return "'|'";
		case TokenType::Not:        return "'not'";
		case TokenType::At:         return "'@'";
	}
	return "?";
}

namespace {

class Lexer {
public:
	explicit Lexer(std::string_view text) : text_(text) {}

	std::vector<Token> run() {
		std::vector<Token> out;
		while (skip_space()) {
			std::size_t line = line_, col = col_;
			char        c    = peek();
			auto        push = [&](TokenType t, std::string s) { out.push_back(Token{t, std::move(s), line, col}); };
			if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
				std::string word = take_word();
				if (word == "not")                                           { push(TokenType::Not, word); }
				else if (std::isupper(static_cast<unsigned char>(word[0]))) { push(TokenType::Variable, word); }
				else if (std::islower(static_cast<unsigned char>(word[0]))) { push(TokenType::Identifier, word); }
				else { throw ParseError("illegal identifier '" + word + "'", line, col); }
			}
			else if (std::isdigit(static_cast<unsigned char>(c))) {
				std::string num;
				while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) { num += advance(); }
				push(TokenType::Integer, num);
			}
			else if (c == '"') {
				push(TokenType::String, take_string(line, col));
			}
			else if (c == ':') {
				advance();
				if (pos_ < text_.size() && peek() == '-')      { advance(); push(TokenType::If, ":-"); }
				else if (pos_ < text_.size() && peek() == '~') { advance(); push(TokenType::WeakIf, ":~"); }
				else { throw ParseError("illegal character ':'", line, col); }
			}
			else {
				TokenType t;
				switch (c) {
					case '.': t = TokenType::Dot; break;
					case ',': t = TokenType::Comma; break;
					case '(': t = TokenType::LParen; break;
					case ')': t = TokenType::RParen; break;
					case '[': t = TokenType::LBracket; break;
					case ']': t = TokenType::RBracket; break;
					case '&': t = TokenType::Amp; break;
					case '|': t = TokenType::Bar; break;
					case '@': t = TokenType::At; break;
					default:
						throw ParseError(std::string("illegal character '") + c + "'", line, col);
				}
				advance();
				push(t, std::string(1, c));
			}
		}
		return out;
	}

private:
	char peek() const { return text_[pos_]; }
	char advance() {
		char c = text_[pos_++];
		if (c == '\n') { ++line_; col_ = 1; }
		else           { ++col_; }
		return c;
	}
	// Skips whitespace and comments; returns false at end of input.
	bool skip_space() {
		while (pos_ < text_.size()) {
			char c = peek();
			if (c == '%') {
				while (pos_ < text_.size() && peek() != '\n') { advance(); }
			}
			else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			}
			else {
				return true;
			}
		}
		return false;
	}
	std::string take_word() {
		std::string w;
		while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) { w += advance(); }
		return w;
	}
	std::string take_string(std::size_t line, std::size_t col) {
		advance(); // opening quote
		std::string s;
		for (;;) {
			if (pos_ >= text_.size() || peek() == '\n') { throw ParseError("unterminated string", line, col); }
			char c = advance();
			if (c == '"') { return s; }
			if (c == '\\') {
				if (pos_ >= text_.size()) { throw ParseError("unterminated string", line, col); }
				char e = advance();
				s += (e == 'n') ? '\n' : e;
			}
			else {
				s += c;
			}
		}
	}

	std::string_view text_;
	std::size_t      pos_  = 0;
	std::size_t      line_ = 1;
	std::size_t      col_  = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

} // namespace hexeval
