#pragma once

#include <acb/core.hpp>
#include <acb/io.hpp>

#include <functional>
#include <string>
#include <vector>

namespace acb {

// Extremal ACB families. The defining formulas use 1-based x_1.., y_1..;
// the returned graphs are 0-based, so x_i is row i-1 and y_j column j-1.

/// D_k, k >= 2: |X| = |Y| = 3k-4, x_i y_j an edge iff |i-j| <= k-2 and
/// {i,j} meets the central index range {k-1, ..., 2k-2}.
BipartiteGraph gen_Dk(int k);

/// D_{k,l}, k > l >= 2: D_k without y_k, ..., y_{2k-l-1}.
BipartiteGraph gen_Dkl(int k, int l);

/// B_k, k >= 2: |X| = k, |Y| = 2k-2, N(x_i) = {y_i, ..., y_{i+k-2}}.
BipartiteGraph gen_Bk(int k);

/// C_{2k} as a bipartite graph, k >= 2: N(x_i) = {y_i, y_{i-1 mod k}}.
BipartiteGraph gen_even_cycle(int k);
/// k disjoint edges x_i y_i, k >= 1.
BipartiteGraph gen_matching(int k);
/// Path v_0 ... v_{n-1}, n >= 1, with v_0 on the given side.
BipartiteGraph gen_path(int n, Side first = Side::X);
/// P_7 with both end vertices in X.
BipartiteGraph gen_x_p7();
/// P_7 with both end vertices in Y (isomorphic to B_3).
BipartiteGraph gen_y_p7();

/// k-sun S_k, k >= 3: K = q_0..q_{k-1}, I = s_0..s_{k-1}, s_i ~ q_i, q_{i+1 mod k}.
SplitGraph gen_sun(int k);
/// Complement of S_3: a triangle with one pendant vertex per corner.
SplitGraph gen_net();
/// S_4 without the simplicial vertex s_3.
SplitGraph gen_rising_sun();
/// Complement of the rising sun.
SplitGraph gen_co_rising_sun();

GeneralGraph gen_cycle_graph(int n);
GeneralGraph gen_path_graph(int n);
GeneralGraph gen_complete_graph(int n);

enum class Family { Dk, Dkl, Bk, C2k, kK2, Pk, XP7, YP7, Sk, Net, RisingSun, CoRisingSun };

struct NamedFamily {
    Family family;
    std::vector<int> params;
};

/// Names: Dk, Dkl, Bk, C2k, kK2, Pk, XP7, YP7, Sk, net, rising_sun, co_rising_sun.
/// Throws std::invalid_argument for unknown names or wrong parameter counts.
NamedFamily named_family(const std::string& name, const std::vector<int>& params);
std::vector<std::string> family_names();

/// Bipartite families give BipartiteGraph; suns and their relatives give SplitGraph.
/// Throws std::invalid_argument when parameters leave their valid range.
AnyGraph gen_named(const NamedFamily& request);

/// Every bipartite graph with exactly x_size X-vertices and y_size
/// Y-vertices, one per isomorphism class (sides may be exchanged when the
/// sizes are equal), each in canonical form, in increasing serialized order.
/// Throws std::length_error when x_size * y_size > 20.
void for_each_bipartite(std::size_t x_size, std::size_t y_size, const std::function<void(const BipartiteGraph&)>& fn);
std::vector<BipartiteGraph> enumerate_bipartite(std::size_t x_size, std::size_t y_size);

} // namespace acb
