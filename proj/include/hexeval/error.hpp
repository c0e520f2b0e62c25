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
#ifndef HEXEVAL_ERROR_HPP_INCLUDED
#define HEXEVAL_ERROR_HPP_INCLUDED

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexeval {

//! Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

//! Lexical or syntactic error. Line and column are 1-based.
class ParseError : public Error {
public:
	ParseError(const std::string& msg, std::size_t line, std::size_t column)
		: Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg)
		, line_(line)
		, column_(column) {}
	std::size_t line()   const { return line_; }
	std::size_t column() const { return column_; }
private:
	std::size_t line_;
	std::size_t column_;
};

//! A rule or weak constraint contains variables not bound by its positive body.
class SafetyError : public Error {
public:
	SafetyError(std::string rule, std::vector<std::string> vars);
	const std::string&              rule()      const { return rule_; }
	const std::vector<std::string>& variables() const { return vars_; }
private:
	std::string              rule_;
	std::vector<std::string> vars_;
};

//! Plugin lookup/registration failures and errors raised inside oracles.
class PluginError : public Error {
public:
	using Error::Error;
};

//! Malformed input to grounding (unknown external, arity mismatch, ...).
class GroundingError : public Error {
public:
	using Error::Error;
};

//! Value invention produced more new terms than allowed.
class InventionBudgetError : public GroundingError {
public:
	InventionBudgetError(std::string source, std::size_t budget)
		: GroundingError("value invention budget of " + std::to_string(budget) + " exceeded by '" + source + "'")
		, source_(std::move(source)) {}
	//! Name of the external predicate (or rule head predicate) that produced the excess term.
	const std::string& source() const { return source_; }
private:
	std::string source_;
};

inline SafetyError::SafetyError(std::string rule, std::vector<std::string> vars)
	: Error([&] {
		std::string msg = "unsafe variable";
		if (vars.size() > 1) { msg += "s"; }
		for (std::size_t i = 0; i != vars.size(); ++i) { msg += (i ? ", " : " ") + vars[i]; }
		return msg + " in: " + rule;
	}())
	, rule_(std::move(rule))
	, vars_(std::move(vars)) {}

} // namespace hexeval
#endif
