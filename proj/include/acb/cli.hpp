#pragma once

#include <acb/core.hpp>
#include <acb/io.hpp>

#include <iosfwd>
#include <string>

namespace acb::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int input_error = 2;

/// One "property: yes|no" line per class test applicable to the input kind.
void run_recognize(const AnyGraph& g, bool swap, std::ostream& out);
/// Widths with antichain witnesses.
void run_dilworth(const AnyGraph& g, std::ostream& out);
/// Row and column orders, the permuted matrix, then a gamma line. Uses the
/// two-chain construction when the Y side allows it, the doubly lexical
/// ordering otherwise.
void run_matrix(const BipartiteGraph& b, std::ostream& out);
/// count, auto_mirror and optionally every canonical instance.
void run_sperner_critical(std::size_t k, bool list, std::size_t workers, std::ostream& out);
/// Exit code: ok iff every check passes.
int run_verify(const std::string& suite, std::ostream& out);

/// Whole command line; reads graphs from `in` when no path is given.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace acb::cli
