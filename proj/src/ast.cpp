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
#include <hexeval/ast.hpp>

#include <algorithm>

namespace hexeval {

namespace {

void collect(const std::vector<Term>& terms, std::vector<std::string>& out) {
	for (const Term& t : terms) { t.collect_variables(out); }
}

void collect(const ExternalAtom& a, std::vector<std::string>& out) {
	for (const ExternalInput& in : a.inputs) {
		if (in.kind == InputKind::Constant) { in.value.collect_variables(out); }
	}
	collect(a.outputs, out);
}

void collect(const Literal& l, std::vector<std::string>& out) {
	if (l.is_external()) { collect(l.external(), out); }
	else                 { collect(l.ordinary().args, out); }
}

std::vector<std::string> unsafe_variables(const std::vector<OrdinaryAtom>& head, const std::vector<Literal>& body) {
	std::vector<std::string> all;
	for (const OrdinaryAtom& h : head) { collect(h.args, all); }
	for (const Literal& l : body)      { collect(l, all); }

	std::vector<std::string> safe;
	for (const Literal& l : body) {
		if (!l.negated && !l.is_external()) { collect(l.ordinary().args, safe); }
	}
	auto is_safe = [&](const std::string& v) { return std::find(safe.begin(), safe.end(), v) != safe.end(); };
	for (bool changed = true; changed;) {
		changed = false;
		for (const Literal& l : body) {
			if (l.negated || !l.is_external()) { continue; }
			const ExternalAtom&      ext = l.external();
			std::vector<std::string> inputs;
			for (const ExternalInput& in : ext.inputs) {
				if (in.kind == InputKind::Constant) { in.value.collect_variables(inputs); }
			}
			if (!std::all_of(inputs.begin(), inputs.end(), is_safe)) { continue; }
			std::vector<std::string> outputs;
			collect(ext.outputs, outputs);
			for (std::string& v : outputs) {
				if (!is_safe(v)) {
					safe.push_back(std::move(v));
					changed = true;
				}
			}
		}
	}
	std::vector<std::string> unsafe;
	std::copy_if(all.begin(), all.end(), std::back_inserter(unsafe), [&](const std::string& v) { return !is_safe(v); });
	return unsafe;
}

std::string body_to_string(const std::vector<Literal>& body) {
	std::string out;
	for (std::size_t i = 0; i != body.size(); ++i) {
		if (i) { out += ", "; }
		out += to_string(body[i]);
	}
	return out;
}

} // namespace

std::vector<std::string> check_safety(const Rule& rule) { return unsafe_variables(rule.head, rule.body); }
std::vector<std::string> check_safety(const WeakConstraint& weak) { return unsafe_variables({}, weak.body); }

std::string to_string(const OrdinaryAtom& a) {
	if (a.args.empty()) { return a.predicate; }
	return a.predicate + "(" + to_string(a.args) + ")";
}

std::string to_string(const ExternalAtom& a) {
	std::string out = "&" + a.name;
	if (!a.inputs.empty()) {
		out += '[';
		for (std::size_t i = 0; i != a.inputs.size(); ++i) {
			if (i) { out += ','; }
			out += to_string(a.inputs[i].value);
		}
		out += ']';
	}
	if (!a.outputs.empty()) { out += "(" + to_string(a.outputs) + ")"; }
	return out;
}

std::string to_string(const Literal& l) {
	std::string atom = l.is_external() ? to_string(l.external()) : to_string(l.ordinary());
	return l.negated ? "not " + atom : atom;
}

std::string to_string(const Rule& r) {
	std::string out;
	for (std::size_t i = 0; i != r.head.size(); ++i) {
		if (i) { out += " | "; }
		out += to_string(r.head[i]);
	}
	if (!r.body.empty()) {
		out += r.head.empty() ? ":- " : " :- ";
		out += body_to_string(r.body);
	}
	else if (r.head.empty()) {
		out += ":-";
	}
	return out + ".";
}

std::string to_string(const WeakConstraint& w) {
	return ":~ " + body_to_string(w.body) + ". [" + std::to_string(w.weight) + "@" + std::to_string(w.level) + "]";
}

std::string to_string(const Program& p) {
	std::string out;
	for (const Rule& r : p.rules) { out += to_string(r) + "\n"; }
	for (const WeakConstraint& w : p.weak_constraints) { out += to_string(w) + "\n"; }
	return out;
}

} // namespace hexeval
