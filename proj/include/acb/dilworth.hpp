#pragma once

#include <acb/core.hpp>
#include <acb/poset.hpp>

#include <cstddef>
#include <vector>

namespace acb {

/// Width of one side's neighbourhood poset with a witness.
struct SideWidth {
    std::size_t width = 0;
    /// Vertices of the side with pairwise incomparable neighbourhoods, ascending.
    std::vector<std::size_t> antichain;
};

SideWidth side_width(const BipartiteGraph& b, Side side);
std::size_t x_dilworth(const BipartiteGraph& b);
std::size_t y_dilworth(const BipartiteGraph& b);
/// max(x_dilworth, y_dilworth).
std::size_t bip_dilworth(const BipartiteGraph& b);

/// Width of the inclusion order on distinct hyperedges.
std::size_t hypergraph_dilworth(const Hypergraph& h);

/// x precedes y in the vicinal preorder: N(x) is a subset of N[y].
bool vicinal_leq(const GeneralGraph& g, std::size_t x, std::size_t y);
/// Width of the quotient of the vicinal preorder.
std::size_t graph_dilworth(const GeneralGraph& g);

/// Width of {N(v) & I : v in K}.
std::size_t k_dilworth(const SplitGraph& g);
/// Width of {N(v) : v in I}.
std::size_t i_dilworth(const SplitGraph& g);
/// max(k_dilworth, i_dilworth).
std::size_t split_dilworth(const SplitGraph& g);

/// bip_dilworth(b) == k and every single-vertex deletion lowers it.
/// Throws std::invalid_argument unless b is ACB.
bool is_k_critical_acb(const BipartiteGraph& b, std::size_t k);

/// No induced B_{k+1} in either orientation. Requires k >= 1 and b ACB,
/// otherwise std::invalid_argument.
bool acb_dilworth_leq(const BipartiteGraph& b, std::size_t k);

} // namespace acb
