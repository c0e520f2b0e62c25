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
#include <hexeval/plugin.hpp>

#include <algorithm>

namespace hexeval {

const char* to_string(Verdict v) {
	switch (v) {
		case Verdict::False:   return "false";
		case Verdict::True:    return "true";
		case Verdict::Unknown: return "unknown";
	}
	return "?";
}

Truth Extension::value(std::span<const Term> args) const {
	for (const Entry& e : entries_) {
		if (std::equal(e.args.begin(), e.args.end(), args.begin(), args.end())) { return e.value; }
	}
	return Truth::False;
}

std::size_t Extension::count(Truth t) const {
	return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [t](const Entry& e) { return e.value == t; }));
}

void PluginRegistry::register_plugin(PluginDescriptor descriptor) {
	if (descriptor.name.empty())  { throw PluginError("plugin without name"); }
	if (!descriptor.oracle)       { throw PluginError("plugin '" + descriptor.name + "' has no oracle"); }
	if (!descriptor.enumerator)   { throw PluginError("plugin '" + descriptor.name + "' has no enumerator"); }
	if (descriptor.dependency_info.size() > descriptor.input_kinds.size()) {
		throw PluginError("plugin '" + descriptor.name + "' declares dependency info for missing inputs");
	}
	std::string name = descriptor.name;
	auto [it, fresh] = plugins_.emplace(name, std::make_shared<const PluginDescriptor>(std::move(descriptor)));
	if (!fresh) { throw PluginError("plugin '" + name + "' already registered"); }
}

const PluginDescriptor* PluginRegistry::find(std::string_view name) const {
	auto it = plugins_.find(name);
	return it != plugins_.end() ? it->second.get() : nullptr;
}

const PluginDescriptor& PluginRegistry::at(std::string_view name) const {
	if (const PluginDescriptor* d = find(name)) { return *d; }
	throw PluginError("unknown external predicate '&" + std::string(name) + "'");
}

SignatureLookup PluginRegistry::signatures() const {
	return [this](std::string_view name) -> std::optional<std::vector<InputKind>> {
		if (const PluginDescriptor* d = find(name)) { return d->input_kinds; }
		return std::nullopt;
	};
}

} // namespace hexeval
