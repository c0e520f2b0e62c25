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
#ifndef HEXEVAL_TERM_HPP_INCLUDED
#define HEXEVAL_TERM_HPP_INCLUDED

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hexeval {

//! A term of the input language.
/*!
 * Symbols are lowercase identifiers, strings are quoted constants, variables
 * start with an uppercase letter and compound terms carry a functor plus at
 * least one argument.
 */
class Term {
public:
	enum class Kind : std::uint8_t { Integer, Symbol, String, Compound, Variable };

	Term() = default;

	static Term symbol(std::string name);
	static Term string(std::string content);
	static Term integer(std::int64_t value);
	static Term variable(std::string name);
	static Term compound(std::string functor, std::vector<Term> args);
	//! Symbol if text is a valid lowercase identifier, quoted string otherwise.
	static Term text_constant(std::string text);

	Kind               kind()  const { return kind_; }
	bool               is_variable() const { return kind_ == Kind::Variable; }
	bool               is_compound() const { return kind_ == Kind::Compound; }
	bool               is_ground() const;
	//! Symbol name, string content, variable name or functor.
	const std::string& name()  const { return name_; }
	std::int64_t       value() const { return value_; }
	const std::vector<Term>& args() const { return args_; }

	void collect_variables(std::vector<std::string>& out) const;

	friend bool operator==(const Term&, const Term&) = default;
	friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs);
private:
	Kind              kind_  = Kind::Symbol;
	std::string       name_;
	std::int64_t      value_ = 0;
	std::vector<Term> args_;
};

using Tuple = std::vector<Term>;

bool is_identifier(std::string_view text);
bool is_variable_name(std::string_view text);

std::string   to_string(const Term& t);
std::string   to_string(const Tuple& args);   // "a,b,c"
std::ostream& operator<<(std::ostream& os, const Term& t);

} // namespace hexeval
#endif
