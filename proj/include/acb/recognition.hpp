#pragma once

#include <acb/core.hpp>

#include <optional>
#include <span>
#include <vector>

namespace acb {

/// embedding[p] is the host vertex that pattern vertex p maps to. For
/// bipartite graphs vertices are numbered as in to_general (X first, then Y).
using Embedding = std::vector<std::size_t>;

/// Injective map whose image induces exactly the pattern, respecting vertex
/// colors. Backtracking with neighbourhood-bitmask pruning; intended for
/// patterns of at most a dozen vertices.
std::optional<Embedding> find_induced_colored(const GeneralGraph& host, std::span<const int> host_colors,
                                              const GeneralGraph& pattern, std::span<const int> pattern_colors);

std::optional<Embedding> find_induced(const GeneralGraph& host, const GeneralGraph& pattern);

/// With respect_sides, pattern X must land in host X. Without it the match is
/// a plain induced-subgraph match of the underlying graphs, which covers both
/// orientations (component by component for disconnected patterns).
std::optional<Embedding> find_induced(const BipartiteGraph& host, const BipartiteGraph& pattern, bool respect_sides);

/// Splits a bipartite embedding image into host X and host Y vertex lists (pattern order kept).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_image(const BipartiteGraph& host,
                                                                          const Embedding& e);

/// Named small graphs used as forbidden patterns.
namespace patterns {
const BipartiteGraph& two_k2();
const BipartiteGraph& three_k2();
const BipartiteGraph& c6();
const BipartiteGraph& c8();
const BipartiteGraph& p7();
const BipartiteGraph& x_p7();
const BipartiteGraph& y_p7();

const GeneralGraph& g_2k2();
const GeneralGraph& g_c4();
const GeneralGraph& g_c5();
const GeneralGraph& g_p4();
const GeneralGraph& g_s3();
const GeneralGraph& g_s4();
const GeneralGraph& g_net();
const GeneralGraph& g_rising_sun();
const GeneralGraph& g_co_rising_sun();
} // namespace patterns

/// 2K2-free.
bool is_chain(const BipartiteGraph& b);

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const GeneralGraph& g);

/// Doubly lexical ordering of the bi-adjacency matrix is Gamma-free.
bool is_chordal_bipartite(const BipartiteGraph& b);

/// Induced cycle C_{2k}, k >= 3, found by direct pattern search (cross-check route).
std::optional<Embedding> find_induced_even_hole(const BipartiteGraph& b);

/// Vertex bound for the direct sun search on general graphs.
inline constexpr std::size_t sun_search_limit = 24;

/// Chordal and free of induced k-suns for 3 <= k <= n/2. Graphs above
/// sun_search_limit vertices are accepted only if they are split graphs,
/// which are decided through bip(); otherwise std::length_error.
bool is_strongly_chordal(const GeneralGraph& g);
/// A split graph G is strongly chordal iff bip(G) is chordal bipartite.
bool is_strongly_chordal(const SplitGraph& g);

/// (3K2, C6, C8)-free.
bool is_acb(const BipartiteGraph& b);

/// A split partition (K and I listed in increasing vertex order) if one exists.
/// Up to 10 vertices the decision is the (2K2, C4, C5)-free test; beyond it
/// the degree-sequence criterion decides.
std::optional<SplitGraph> is_split(const GeneralGraph& g);
/// Vertex lists (K, I) of the split partition chosen by is_split.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> split_partition(const GeneralGraph& g);

/// Dilworth number at most 1.
bool is_threshold_split(const SplitGraph& g);
/// (S3, net, rising sun)-free.
bool is_interval_split(const SplitGraph& g);
/// (2K2, C4, C5, S3, net, S4)-free.
bool is_auto_strongly_chordal(const GeneralGraph& g);

} // namespace acb
