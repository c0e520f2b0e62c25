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
#ifndef HEXEVAL_PLUGIN_HPP_INCLUDED
#define HEXEVAL_PLUGIN_HPP_INCLUDED

#include <hexeval/ast.hpp>
#include <hexeval/term.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hexeval {

enum class Truth : std::uint8_t { False, True, Unassigned };
enum class Verdict : std::uint8_t { False, True, Unknown };

//! Semantic dependency of an external atom on one input position.
enum class Dependency : std::uint8_t { Irrelevant, Monotone, Antimonotone, Full };

const char* to_string(Verdict v);

//! (Partial) extension of an input predicate as seen by an oracle.
/*!
 * Atoms not listed are false in every completion.
 */
class Extension {
public:
	struct Entry {
		std::span<const Term> args;
		Truth                 value;
	};

	void add(std::span<const Term> args, Truth value) { entries_.push_back(Entry{args, value}); }

	Truth       value(std::span<const Term> args) const;
	std::size_t count(Truth t) const;
	const std::vector<Entry>& entries() const { return entries_; }
private:
	std::vector<Entry> entries_;
};

//! Value of one input position of a ground external atom.
struct InputValue {
	InputKind   kind = InputKind::Constant;
	Term        term;      // the constant, or a symbol naming the predicate
	Extension   extension; // predicate inputs only
};

struct OracleQuery {
	std::span<const InputValue> inputs;
	std::span<const Term>       outputs;
};

//! Three-valued oracle: a True/False verdict must hold in every completion of the query.
using Oracle = std::function<Verdict(const OracleQuery&)>;
//! Output tuples the oracle may accept under any subset of the given (all-true) extensions.
using Enumerator = std::function<std::vector<Tuple>(std::span<const InputValue>)>;

struct PluginDescriptor {
	std::string             name;
	std::vector<InputKind>  input_kinds;
	std::size_t             output_arity = 0;
	Oracle                  oracle;
	Enumerator              enumerator;
	//! Per input position; empty means Full everywhere.
	std::vector<Dependency> dependency_info;

	Dependency dependency(std::size_t position) const {
		return position < dependency_info.size() ? dependency_info[position] : Dependency::Full;
	}
};

//! Name-indexed set of plugins. Lookups never mutate, so a registry shared by
//! several solver instances is safe once registration is complete.
class PluginRegistry {
public:
	//! \throws PluginError if a plugin of the same name exists or the descriptor is inconsistent.
	void register_plugin(PluginDescriptor descriptor);

	const PluginDescriptor* find(std::string_view name) const;
	//! \throws PluginError if no such plugin exists.
	const PluginDescriptor& at(std::string_view name) const;
	std::size_t             size() const { return plugins_.size(); }

	//! Input kind lookup for the parser; it refers to this registry.
	SignatureLookup signatures() const;
private:
	std::map<std::string, std::shared_ptr<const PluginDescriptor>, std::less<>> plugins_;
};

} // namespace hexeval
#endif
