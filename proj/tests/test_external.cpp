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
#include <hexeval/external.hpp>

#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

using namespace hexeval;
using namespace hexeval::test;

namespace {

const PluginRegistry& registry() {
	static const PluginRegistry r = builtins::registry();
	return r;
}

const ExternalInstance& instance(const GroundProgram& gp, const std::string& replacement) {
	AtomId a = gp.table.find(replacement);
	REQUIRE(a != 0);
	const ExternalInstance* inst = gp.external_of(a);
	REQUIRE(inst != nullptr);
	return *inst;
}

AtomId atom(const GroundProgram& gp, const std::string& text) {
	AtomId a = gp.table.find(text);
	REQUIRE(a != 0);
	return a;
}

// Every completion of the assigned atoms, restricted to the unassigned ones.
template <class F>
void for_each_completion(const std::vector<AtomId>& atoms, const PartialInterpretation& partial, F&& f) {
	std::vector<AtomId> open;
	for (AtomId a : atoms) {
		if (partial.value(a) == Truth::Unassigned) { open.push_back(a); }
	}
	for (std::uint64_t mask = 0; mask != (std::uint64_t{1} << open.size()); ++mask) {
		PartialInterpretation full = partial;
		for (std::size_t i = 0; i != open.size(); ++i) { full.set(open[i], (mask >> i) & 1 ? Truth::True : Truth::False); }
		f(full);
	}
}

PluginDescriptor constant_plugin(std::string name, Verdict v) {
	PluginDescriptor d;
	d.name        = std::move(name);
	d.input_kinds = {InputKind::Predicate};
	d.oracle      = [v](const OracleQuery&) { return v; };
	d.enumerator  = [](std::span<const InputValue>) { return std::vector<Tuple>{Tuple{}}; };
	return d;
}

} // namespace

TEST_CASE("plugin registry") {
	PluginRegistry reg;
	reg.register_plugin(constant_plugin("yes", Verdict::True));
	CHECK(reg.size() == 1);
	CHECK(reg.find("yes") != nullptr);
	CHECK(reg.find("no") == nullptr);
	CHECK_THROWS_AS(reg.at("no"), PluginError);
	CHECK_THROWS_AS(reg.register_plugin(constant_plugin("yes", Verdict::False)), PluginError);

	PluginDescriptor bad = constant_plugin("bad", Verdict::True);
	bad.dependency_info  = {Dependency::Monotone, Dependency::Monotone};
	CHECK_THROWS_AS(reg.register_plugin(bad), PluginError);
	bad                 = constant_plugin("bad", Verdict::True);
	bad.oracle          = nullptr;
	CHECK_THROWS_AS(reg.register_plugin(bad), PluginError);
	CHECK_THROWS_AS(reg.register_plugin(constant_plugin("", Verdict::True)), PluginError);

	auto sig = registry().signatures();
	CHECK(sig("diff") == std::vector<InputKind>{InputKind::Predicate, InputKind::Predicate});
	CHECK(sig("concat") == std::vector<InputKind>{InputKind::Constant, InputKind::Constant});
	CHECK_FALSE(sig("nosuch").has_value());
}

TEST_CASE("partial interpretation and normalize") {
	PartialInterpretation p{{3, Truth::True}, {1, Truth::False}};
	CHECK(p.value(1) == Truth::False);
	CHECK(p.value(2) == Truth::Unassigned);
	p.set(2, Truth::True);
	p.set(3, Truth::False);
	CHECK(p.values() == std::vector<std::pair<AtomId, Truth>>{{1, Truth::False}, {2, Truth::True}, {3, Truth::False}});

	Nogood ng{pos(4), neg(2), pos(4)};
	CHECK(normalize(ng));
	CHECK(ng == Nogood{neg(2), pos(4)});
	Nogood clash{pos(1), neg(1)};
	CHECK_FALSE(normalize(clash));
}

TEST_CASE("evaluate") {
	GroundProgram gp = ground_program(parse("firstname(pat). lastname(doe). fullname(F) :- &concat[A,B](F), firstname(A), lastname(B).", registry()), registry());
	OracleEvaluator eval(gp, registry());
	CHECK(eval.evaluate(instance(gp, "e_concat[pat,doe](patdoe)"), PartialInterpretation{}) == Verdict::True);
	CHECK(eval.calls() == 1);

	GroundProgram id = ground_program(parse("p :- &id[p].", registry()), registry());
	OracleEvaluator ide(id, registry());
	const auto& inst = instance(id, "e_id[p]");
	AtomId      p    = atom(id, "p");
	CHECK(ide.evaluate(inst, PartialInterpretation{}) == Verdict::Unknown);
	CHECK(ide.evaluate(inst, PartialInterpretation{{p, Truth::True}}) == Verdict::True);
	CHECK(ide.evaluate(inst, PartialInterpretation{{p, Truth::False}}) == Verdict::False);
	CHECK(ide.evaluate(inst, [](AtomId) { return Truth::True; }) == Verdict::True);
	CHECK(ide.calls() == 4);
}

TEST_CASE("irrelevant inputs reach the oracle unassigned") {
	PluginRegistry reg;
	PluginDescriptor spy;
	spy.name            = "spy";
	spy.input_kinds     = {InputKind::Predicate, InputKind::Predicate};
	spy.dependency_info = {Dependency::Full, Dependency::Irrelevant};
	spy.oracle          = [](const OracleQuery& q) {
		for (const auto& e : q.inputs[1].extension.entries()) {
			if (e.value != Truth::Unassigned) { return Verdict::False; }
		}
		return Verdict::True;
	};
	spy.enumerator = [](std::span<const InputValue>) { return std::vector<Tuple>{Tuple{}}; };
	reg.register_plugin(spy);
	GroundProgram gp = ground_program(parse("a. b. c :- &spy[a, b].", reg), reg);
	OracleEvaluator eval(gp, reg);
	CHECK(eval.evaluate(gp.externals[0], [](AtomId) { return Truth::True; }) == Verdict::True);
	CHECK(gp.externals[0].relevant_input_atoms == std::vector<AtomId>{atom(gp, "a")});
}

TEST_CASE("plugin failures are reported with the instance") {
	PluginRegistry   reg;
	PluginDescriptor boom = constant_plugin("boom", Verdict::True);
	boom.oracle           = [](const OracleQuery&) -> Verdict { throw std::runtime_error("kaputt"); };
	reg.register_plugin(boom);
	GroundProgram   gp = ground_program(parse("q. p :- &boom[q].", reg), reg);
	OracleEvaluator eval(gp, reg);
	try {
		eval.evaluate(gp.externals[0], PartialInterpretation{});
		FAIL("expected a plugin error");
	}
	catch (const PluginError& e) {
		std::string msg = e.what();
		CHECK(msg.find("boom[q]") != std::string::npos);
		CHECK(msg.find("kaputt") != std::string::npos);
	}
}

TEST_CASE("learning") {
	GroundProgram   gp = ground_program(parse("dom(a). dom(b). sel(X) :- &diff[dom, nsel](X). nsel(X) :- dom(X), not sel(X).", registry()), registry());
	OracleEvaluator eval(gp, registry());
	const auto&     inst = instance(gp, "e_diff[dom,nsel](a)");
	AtomId da = atom(gp, "dom(a)"), db = atom(gp, "dom(b)"), na = atom(gp, "nsel(a)"), nb = atom(gp, "nsel(b)");
	AtomId e = inst.replacement;
	CHECK(inst.relevant_input_atoms == std::vector<AtomId>{da, db, na, nb});

	PartialInterpretation complete{{da, Truth::True}, {db, Truth::True}, {na, Truth::False}, {nb, Truth::True}};
	Verdict               v = eval.evaluate(inst, complete);
	REQUIRE(v == Verdict::True);
	Nogood full = default_learn_nogood(inst, complete, v);
	Nogood expected{pos(da), pos(db), neg(na), pos(nb), neg(e)};
	normalize(expected);
	CHECK(full == expected);
	CHECK_THROWS_AS(default_learn_nogood(inst, PartialInterpretation{{da, Truth::True}}, v), std::invalid_argument);
	CHECK_THROWS_AS(default_learn_nogood(inst, complete, Verdict::Unknown), std::invalid_argument);

	Nogood partial = learn_partial_nogood(inst, PartialInterpretation{{da, Truth::True}, {na, Truth::False}}, Verdict::True);
	Nogood pexp{pos(da), neg(na), neg(e)};
	normalize(pexp);
	CHECK(partial == pexp);

	auto   valid = make_oracle_validator(eval, inst);
	Nogood minimal{pos(da), neg(na), neg(e)};
	normalize(minimal);
	CHECK(valid(full));
	CHECK(minimize_nogood_deletion(full, e, valid) == minimal);
	CHECK(minimize_nogood_quickxplain(full, e, valid) == minimal);
	CHECK(minimize_nogood(Minimization::Off, full, e, valid) == full);

	Nogood wrong{pos(da), neg(na), pos(e)};
	normalize(wrong);
	CHECK_FALSE(valid(wrong));
	CHECK_THROWS_AS(minimize_nogood_deletion(wrong, e, valid), std::invalid_argument);
	CHECK_THROWS_AS(minimize_nogood_quickxplain(wrong, e, valid), std::invalid_argument);
	Nogood no_rep{pos(da)};
	CHECK_THROWS_AS(minimize_nogood_deletion(no_rep, e, valid), std::invalid_argument);
}

TEST_CASE("verdicts are sound for every completion") {
	std::mt19937 rng(17);
	std::size_t  definite = 0;
	for (int i = 0; i != 150; ++i) {
		GroundProgram   gp = ground_program(parse(random_program(rng, false), registry()), registry());
		OracleEvaluator eval(gp, registry());
		for (const ExternalInstance& inst : gp.externals) {
			if (inst.relevant_input_atoms.size() > 9) { continue; }
			for (int trial = 0; trial != 12; ++trial) {
				PartialInterpretation partial;
				for (AtomId a : inst.relevant_input_atoms) {
					int r = std::uniform_int_distribution<int>(0, 2)(rng);
					if (r < 2) { partial.set(a, r ? Truth::True : Truth::False); }
				}
				Verdict v = eval.evaluate(inst, partial);
				if (v == Verdict::Unknown) { continue; }
				++definite;
				for_each_completion(inst.relevant_input_atoms, partial, [&](const PartialInterpretation& full) {
					CHECK(eval.evaluate(inst, full) == v);
				});
			}
		}
	}
	CHECK(definite > 100);
}

TEST_CASE("minimized nogoods are valid and irreducible") {
	std::mt19937 rng(23);
	std::size_t  checked = 0;
	for (int i = 0; i != 150; ++i) {
		GroundProgram   gp = ground_program(parse(random_program(rng, false), registry()), registry());
		OracleEvaluator eval(gp, registry());
		for (const ExternalInstance& inst : gp.externals) {
			PartialInterpretation complete;
			for (AtomId a : inst.relevant_input_atoms) { complete.set(a, rng() % 2 ? Truth::True : Truth::False); }
			Verdict v = eval.evaluate(inst, complete);
			REQUIRE(v != Verdict::Unknown);
			Nogood full  = default_learn_nogood(inst, complete, v);
			auto   valid = make_oracle_validator(eval, inst);
			for (Minimization mode : {Minimization::Deletion, Minimization::QuickXplain}) {
				Nogood m = minimize_nogood(mode, full, inst.replacement, valid);
				CHECK(valid(m));
				CHECK(std::includes(full.begin(), full.end(), m.begin(), m.end()));
				for (std::size_t k = 0; k != m.size(); ++k) {
					if (m[k].atom == inst.replacement) { continue; }
					Nogood smaller = m;
					smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
					CHECK_FALSE(valid(smaller));
				}
				++checked;
			}
		}
	}
	CHECK(checked > 100);
}
