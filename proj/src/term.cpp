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
#include <hexeval/term.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hexeval {

Term Term::symbol(std::string name) {
	Term t;
	t.kind_ = Kind::Symbol;
	t.name_ = std::move(name);
	return t;
}

Term Term::string(std::string content) {
	Term t;
	t.kind_ = Kind::String;
	t.name_ = std::move(content);
	return t;
}

Term Term::integer(std::int64_t value) {
	Term t;
	t.kind_  = Kind::Integer;
	t.value_ = value;
	return t;
}

Term Term::variable(std::string name) {
	if (!is_variable_name(name)) { throw std::invalid_argument("invalid variable name '" + name + "'"); }
	Term t;
	t.kind_ = Kind::Variable;
	t.name_ = std::move(name);
	return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
	if (args.empty()) { throw std::invalid_argument("compound term '" + functor + "' needs at least one argument"); }
	Term t;
	t.kind_ = Kind::Compound;
	t.name_ = std::move(functor);
	t.args_ = std::move(args);
	return t;
}

Term Term::text_constant(std::string text) {
	return is_identifier(text) ? symbol(std::move(text)) : string(std::move(text));
}

bool Term::is_ground() const {
	if (kind_ == Kind::Variable) { return false; }
	return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

void Term::collect_variables(std::vector<std::string>& out) const {
	if (kind_ == Kind::Variable) {
		if (std::find(out.begin(), out.end(), name_) == out.end()) { out.push_back(name_); }
		return;
	}
	for (const Term& a : args_) { a.collect_variables(out); }
}

std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
	if (auto c = lhs.kind_ <=> rhs.kind_; c != 0) { return c; }
	if (lhs.kind_ == Term::Kind::Integer) { return lhs.value_ <=> rhs.value_; }
	if (auto c = lhs.name_ <=> rhs.name_; c != 0) { return c; }
	return std::lexicographical_compare_three_way(lhs.args_.begin(), lhs.args_.end(), rhs.args_.begin(), rhs.args_.end());
}

bool is_identifier(std::string_view text) {
	if (text.empty() || !std::islower(static_cast<unsigned char>(text.front()))) { return false; }
	return std::all_of(text.begin(), text.end(), [](char c) {
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
	});
}

bool is_variable_name(std::string_view text) {
	if (text.empty() || !std::isupper(static_cast<unsigned char>(text.front()))) { return false; }
	return std::all_of(text.begin(), text.end(), [](char c) {
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
	});
}

namespace {
void append_quoted(std::string& out, const std::string& s) {
	out += '"';
	for (char c : s) {
		switch (c) {
			case '"':  out += "\\\""; break;
			case '\\': out += "\\\\"; break;
			case '\n': out += "\\n";  break;
			default:   out += c;
		}
	}
	out += '"';
}

void append(std::string& out, const Term& t) {
	switch (t.kind()) {
		case Term::Kind::Integer:  out += std::to_string(t.value()); break;
		case Term::Kind::Symbol:
		case Term::Kind::Variable: out += t.name(); break;
		case Term::Kind::String:   append_quoted(out, t.name()); break;
		case Term::Kind::Compound:
			out += t.name();
			out += '(';
			for (std::size_t i = 0; i != t.args().size(); ++i) {
				if (i) { out += ','; }
				append(out, t.args()[i]);
			}
			out += ')';
			break;
	}
}
} // namespace

std::string to_string(const Term& t) {
	std::string out;
	append(out, t);
	return out;
}

std::string to_string(const Tuple& args) {
	std::string out;
	for (std::size_t i = 0; i != args.size(); ++i) {
		if (i) { out += ','; }
		append(out, args[i]);
	}
	return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

} // namespace hexeval
