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
#include <hexeval/builtins.hpp>
#include <hexeval/error.hpp>

#include <stdexcept>

namespace hexeval::builtins {

namespace {

Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }

const std::string& text_of(const Term& t, const char* plugin) {
	if (t.kind() != Term::Kind::Symbol && t.kind() != Term::Kind::String) {
		throw PluginError(std::string(plugin) + ": expected a string or symbol constant, got " + to_string(t));
	}
	return t.name();
}

std::vector<Term> list_or_throw(const Term& t, const char* plugin) {
	auto elems = list_elements(t);
	if (!elems) { throw PluginError(std::string(plugin) + ": malformed list " + to_string(t)); }
	return *elems;
}

// Unary atoms of a predicate extension, as output tuples.
std::vector<Tuple> members(const Extension& ext) {
	std::vector<Tuple> out;
	for (const Extension::Entry& e : ext.entries()) {
		if (e.args.size() == 1) { out.push_back(Tuple{e.args[0]}); }
	}
	return out;
}

Verdict nonempty(const Extension& ext) {
	if (ext.count(Truth::True) > 0)       { return Verdict::True; }
	if (ext.count(Truth::Unassigned) > 0) { return Verdict::Unknown; }
	return Verdict::False;
}

std::vector<Tuple> unit_tuple(std::span<const InputValue>) { return {Tuple{}}; }

} // namespace

Term make_list(std::span<const Term> elements) {
	Term list = Term::symbol("nil");
	for (auto it = elements.rbegin(); it != elements.rend(); ++it) { list = Term::compound("cons", {*it, list}); }
	return list;
}

std::optional<std::vector<Term>> list_elements(const Term& t) {
	std::vector<Term> out;
	const Term*       cur = &t;
	while (cur->is_compound()) {
		if (cur->name() != "cons" || cur->args().size() != 2) { return std::nullopt; }
		out.push_back(cur->args()[0]);
		cur = &cur->args()[1];
	}
	if (cur->kind() != Term::Kind::Symbol || cur->name() != "nil") { return std::nullopt; }
	return out;
}

PluginDescriptor concat() {
	PluginDescriptor d;
	d.name         = "concat";
	d.input_kinds  = {InputKind::Constant, InputKind::Constant};
	d.output_arity = 1;
	d.oracle       = [](const OracleQuery& q) {
		std::string joined = text_of(q.inputs[0].term, "concat") + text_of(q.inputs[1].term, "concat");
		const Term& out    = q.outputs[0];
		bool        text   = out.kind() == Term::Kind::Symbol || out.kind() == Term::Kind::String;
		return verdict_of(text && out.name() == joined);
	};
	d.enumerator = [](std::span<const InputValue> in) {
		return std::vector<Tuple>{Tuple{Term::text_constant(text_of(in[0].term, "concat") + text_of(in[1].term, "concat"))}};
	};
	return d;
}

PluginDescriptor id() {
	PluginDescriptor d;
	d.name            = "id";
	d.input_kinds     = {InputKind::Predicate};
	d.output_arity    = 0;
	d.oracle          = [](const OracleQuery& q) { return nonempty(q.inputs[0].extension); };
	d.enumerator      = unit_tuple;
	d.dependency_info = {Dependency::Monotone};
	return d;
}

PluginDescriptor diff() {
	PluginDescriptor d;
	d.name         = "diff";
	d.input_kinds  = {InputKind::Predicate, InputKind::Predicate};
	d.output_arity = 1;
	d.oracle       = [](const OracleQuery& q) {
		Truth in_p = q.inputs[0].extension.value(q.outputs);
		Truth in_q = q.inputs[1].extension.value(q.outputs);
		if (in_p == Truth::False || in_q == Truth::True) { return Verdict::False; }
		if (in_p == Truth::True && in_q == Truth::False) { return Verdict::True; }
		return Verdict::Unknown;
	};
	d.enumerator      = [](std::span<const InputValue> in) { return members(in[0].extension); };
	d.dependency_info = {Dependency::Monotone, Dependency::Antimonotone};
	return d;
}

PluginDescriptor at_least() {
	PluginDescriptor d;
	d.name         = "atLeast";
	d.input_kinds  = {InputKind::Predicate, InputKind::Constant};
	d.output_arity = 0;
	d.oracle       = [](const OracleQuery& q) {
		const Term& k = q.inputs[1].term;
		if (k.kind() != Term::Kind::Integer) { throw PluginError("atLeast: bound must be an integer, got " + to_string(k)); }
		auto yes   = static_cast<std::int64_t>(q.inputs[0].extension.count(Truth::True));
		auto maybe = static_cast<std::int64_t>(q.inputs[0].extension.count(Truth::Unassigned));
		if (yes >= k.value())         { return Verdict::True; }
		if (yes + maybe < k.value())  { return Verdict::False; }
		return Verdict::Unknown;
	};
	d.enumerator      = unit_tuple;
	d.dependency_info = {Dependency::Monotone, Dependency::Full};
	return d;
}

PluginDescriptor first() {
	PluginDescriptor d;
	d.name         = "first";
	d.input_kinds  = {InputKind::Predicate, InputKind::Predicate};
	d.output_arity = 1;
	d.oracle       = [](const OracleQuery& q) {
		switch (q.inputs[0].extension.value(q.outputs)) {
			case Truth::True:  return Verdict::True;
			case Truth::False: return Verdict::False;
			default:           return Verdict::Unknown;
		}
	};
	d.enumerator      = [](std::span<const InputValue> in) { return members(in[0].extension); };
	d.dependency_info = {Dependency::Monotone, Dependency::Irrelevant};
	return d;
}

PluginDescriptor head() {
	PluginDescriptor d;
	d.name         = "head";
	d.input_kinds  = {InputKind::Constant};
	d.output_arity = 1;
	d.oracle       = [](const OracleQuery& q) {
		auto elems = list_or_throw(q.inputs[0].term, "head");
		return verdict_of(!elems.empty() && elems.front() == q.outputs[0]);
	};
	d.enumerator = [](std::span<const InputValue> in) {
		auto elems = list_or_throw(in[0].term, "head");
		return elems.empty() ? std::vector<Tuple>{} : std::vector<Tuple>{Tuple{elems.front()}};
	};
	return d;
}

PluginDescriptor tail() {
	PluginDescriptor d;
	d.name         = "tail";
	d.input_kinds  = {InputKind::Constant};
	d.output_arity = 1;
	d.oracle       = [](const OracleQuery& q) {
		auto elems = list_or_throw(q.inputs[0].term, "tail");
		return verdict_of(!elems.empty() && q.outputs[0] == q.inputs[0].term.args()[1]);
	};
	d.enumerator = [](std::span<const InputValue> in) {
		auto elems = list_or_throw(in[0].term, "tail");
		return elems.empty() ? std::vector<Tuple>{} : std::vector<Tuple>{Tuple{in[0].term.args()[1]}};
	};
	return d;
}

PluginDescriptor append() {
	PluginDescriptor d;
	d.name         = "append";
	d.input_kinds  = {InputKind::Constant, InputKind::Constant};
	d.output_arity = 1;
	auto result    = [](const Term& lhs, const Term& rhs) {
		auto a = list_or_throw(lhs, "append");
		auto b = list_or_throw(rhs, "append");
		a.insert(a.end(), b.begin(), b.end());
		return make_list(a);
	};
	d.oracle     = [result](const OracleQuery& q) { return verdict_of(result(q.inputs[0].term, q.inputs[1].term) == q.outputs[0]); };
	d.enumerator = [result](std::span<const InputValue> in) { return std::vector<Tuple>{Tuple{result(in[0].term, in[1].term)}}; };
	return d;
}

void register_all(PluginRegistry& registry) {
	for (auto make : {concat, id, diff, at_least, first, head, tail, append}) { registry.register_plugin(make()); }
}

PluginRegistry registry() {
	PluginRegistry r;
	register_all(r);
	return r;
}

} // namespace hexeval::builtins
