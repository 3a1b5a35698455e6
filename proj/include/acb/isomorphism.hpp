#pragma once

#include <acb/core.hpp>

#include <span>
#include <string>

namespace acb {

/// Vertex-colored isomorphism test: color refinement followed by backtracking.
/// Meant for the tiny graphs of this project (a few dozen vertices); the
/// search is exponential in the worst case.
bool colored_isomorphic(const GeneralGraph& a, std::span<const int> colors_a, const GeneralGraph& b,
                        std::span<const int> colors_b);

bool iso_general(const GeneralGraph& a, const GeneralGraph& b);

/// Relabelings of X and of Y (and, with allow_side_swap, an exchange of the sides) that map a onto b.
bool iso_bipartite(const BipartiteGraph& a, const BipartiteGraph& b, bool allow_side_swap);

/// Isomorphism preserving the split partition (K onto K, I onto I).
bool iso_split(const SplitGraph& a, const SplitGraph& b);

/// Lexicographically minimal row-major matrix over all row and column
/// permutations. With allow_side_swap the transpose is considered as well and
/// the result always has rows <= cols. Cost is factorial in min(rows, cols).
BinaryMatrix canonical_matrix(const BipartiteGraph& b, bool allow_side_swap);

} // namespace acb
