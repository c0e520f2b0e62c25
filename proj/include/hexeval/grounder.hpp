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
#ifndef HEXEVAL_GROUNDER_HPP_INCLUDED
#define HEXEVAL_GROUNDER_HPP_INCLUDED

#include <hexeval/ast.hpp>
#include <hexeval/ground_program.hpp>
#include <hexeval/plugin.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hexeval {

struct GroundingConfig {
	//! Maximal number of terms not occurring in the program text.
	std::size_t max_invention = 1000;
};

struct DomainReport {
	std::vector<Term> domain;   // sorted; textual terms plus invented ones (closed under subterms)
	std::vector<Term> invented; // in order of discovery
};

//! Computes the term domain reachable by over-approximate derivation.
/*!
 * Starting from the terms in the program text, rules are instantiated over
 * all potentially derivable atoms and external atoms are enumerated with every
 * potentially derivable input atom taken as true, until no new atom appears.
 *
 * \throws InventionBudgetError if more than max_invention new terms appear.
 * \throws GroundingError for unknown externals or arity mismatches.
 */
DomainReport compute_domain(const Program& program, const PluginRegistry& registry, std::size_t max_invention);

//! Instantiates program and applies the guessing translation.
/*!
 * Rule instances are emitted if their positive ordinary body atoms are
 * potentially derivable. Each distinct ground external atom becomes one
 * ExternalInstance with a replacement/negative-replacement guess pair.
 */
GroundProgram ground_program(const Program& program, const PluginRegistry& registry, const GroundingConfig& config = {});

} // namespace hexeval
#endif
