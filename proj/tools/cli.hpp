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
#ifndef HEXEVAL_TOOLS_CLI_HPP_INCLUDED
#define HEXEVAL_TOOLS_CLI_HPP_INCLUDED

#include <hexeval/solver.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hexeval::cli {

enum ExitCode : int {
	exit_usage        = 1,
	exit_budget       = 2,
	exit_satisfiable  = 10,
	exit_unsatisfiable = 20,
};

struct CliConfig {
	std::vector<std::string> inputs;      // empty: read stdin
	std::size_t              models         = 0;
	bool                     partial_eval   = true;
	std::size_t              eval_frequency = 1;
	Minimization             minimize       = Minimization::Deletion;
	FlpMode                  flp            = FlpMode::SkipAuto;
	std::size_t              max_invention  = 1000;
	bool                     opt            = false;
	bool                     stats          = false;
	bool                     dump_ground    = false;
	bool                     allow_disjunction = false;

	SolverConfig solver_config() const;
};

//! Runs the whole pipeline on config; returns the exit code.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

//! Command-line entry point: parses argv into a CliConfig and calls run.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace hexeval::cli
#endif
