#include <acb/dilworth.hpp>

#include <acb/generators.hpp>
#include <acb/recognition.hpp>

#include <algorithm>
#include <stdexcept>

namespace acb {

namespace {

std::vector<Bitset> side_sets(const BipartiteGraph& b, Side side)
{
    std::vector<Bitset> sets;
    for (std::size_t v = 0; v < b.size(side); ++v)
        sets.push_back(b.neighbors(side, v));
    return sets;
}

void require_acb(const BipartiteGraph& b)
{
    if (!is_acb(b))
        throw std::invalid_argument("graph is not auto-chordal-bipartite");
}

} // namespace

SideWidth side_width(const BipartiteGraph& b, Side side)
{
    ContainmentPoset poset(side_sets(b, side));
    WidthCertificate cert = poset_width(poset);
    SideWidth out{cert.width, {}};
    for (auto e : cert.antichain)
        out.antichain.push_back(poset.members(e).front());
    std::sort(out.antichain.begin(), out.antichain.end());
    return out;
}

std::size_t x_dilworth(const BipartiteGraph& b) { return family_width(side_sets(b, Side::X)); }
std::size_t y_dilworth(const BipartiteGraph& b) { return family_width(side_sets(b, Side::Y)); }
std::size_t bip_dilworth(const BipartiteGraph& b) { return std::max(x_dilworth(b), y_dilworth(b)); }

std::size_t hypergraph_dilworth(const Hypergraph& h) { return family_width(h.edges()); }

bool vicinal_leq(const GeneralGraph& g, std::size_t x, std::size_t y)
{
    Bitset closed = g.neighbors(y);
    closed.set(y);
    return g.neighbors(x).is_subset_of(closed);
}

std::size_t graph_dilworth(const GeneralGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> reps;
    for (std::size_t v = 0; v < n; ++v) {
        bool fresh = std::none_of(reps.begin(), reps.end(),
                                  [&](std::size_t r) { return vicinal_leq(g, v, r) && vicinal_leq(g, r, v); });
        if (fresh)
            reps.push_back(v);
    }
    std::vector<Bitset> up(reps.size(), Bitset(reps.size()));
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b)
            up[a].assign(b, vicinal_leq(g, reps[a], reps[b]));
    return poset_width(PartialOrder(std::move(up))).width;
}

std::size_t k_dilworth(const SplitGraph& g) { return x_dilworth(bip(g)); }
std::size_t i_dilworth(const SplitGraph& g) { return y_dilworth(bip(g)); }
std::size_t split_dilworth(const SplitGraph& g) { return std::max(k_dilworth(g), i_dilworth(g)); }

bool is_k_critical_acb(const BipartiteGraph& b, std::size_t k)
{
    require_acb(b);
    if (bip_dilworth(b) != k)
        return false;
    for (Side side : {Side::X, Side::Y})
        for (std::size_t v = 0; v < b.size(side); ++v)
            if (bip_dilworth(delete_vertex(b, side, v)) >= k)
                return false;
    return true;
}

bool acb_dilworth_leq(const BipartiteGraph& b, std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("acb_dilworth_leq needs k >= 1");
    require_acb(b);
    if (k + 1 > b.x_size() + b.y_size())
        return true;
    return !find_induced(b, gen_Bk(static_cast<int>(k + 1)), false);
}

} // namespace acb
