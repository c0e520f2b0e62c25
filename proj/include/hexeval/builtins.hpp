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
#ifndef HEXEVAL_BUILTINS_HPP_INCLUDED
#define HEXEVAL_BUILTINS_HPP_INCLUDED

#include <hexeval/plugin.hpp>

#include <optional>
#include <span>
#include <vector>

namespace hexeval::builtins {

//! &concat[A,B](C): C is the character concatenation of A and B.
PluginDescriptor concat();
//! &id[p]: true iff some atom of p is true (for propositional p: iff p holds).
PluginDescriptor id();
//! &diff[p,q](X): X in p and X not in q. Monotone in p, antimonotone in q.
PluginDescriptor diff();
//! &atLeast[p,K]: p has at least K true atoms.
PluginDescriptor at_least();
//! &first[p,q](X): X in p. The second input is declared irrelevant.
PluginDescriptor first();
//! &head[L](H), &tail[L](T), &append[L1,L2](L3) over cons/nil lists.
PluginDescriptor head();
PluginDescriptor tail();
PluginDescriptor append();

//! Registers all builtins above.
void           register_all(PluginRegistry& registry);
PluginRegistry registry();

Term                             make_list(std::span<const Term> elements);
//! Elements of a cons/nil list; nullopt if t is not a well-formed list.
std::optional<std::vector<Term>> list_elements(const Term& t);

} // namespace hexeval::builtins
#endif
