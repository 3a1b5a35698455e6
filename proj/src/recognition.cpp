#include <acb/recognition.hpp>

#include <acb/generators.hpp>
#include <acb/ordering.hpp>
#include <acb/poset.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acb {

namespace {

struct InducedSearch {
    const GeneralGraph& host;
    std::span<const int> host_colors;
    const GeneralGraph& pattern;
    std::span<const int> pattern_colors;
    std::vector<std::size_t> order;
    Embedding image;
    Bitset used;

    bool extend(std::size_t depth)
    {
        if (depth == order.size())
            return true;
        const std::size_t p = order[depth];
        const std::size_t need = pattern.degree(p);
        Bitset cand(host.size());
        cand.set_all();
        cand -= used;
        for (std::size_t d = 0; d < depth; ++d) {
            const std::size_t q = order[d];
            if (pattern.adjacent(p, q))
                cand &= host.neighbors(image[q]);
            else
                cand -= host.neighbors(image[q]);
        }
        for (std::size_t h = cand.find_first(); h < cand.size(); h = cand.find_next(h + 1)) {
            if (host_colors[h] != pattern_colors[p] || host.degree(h) < need)
                continue;
            image[p] = h;
            used.set(h);
            if (extend(depth + 1))
                return true;
            used.reset(h);
        }
        return false;
    }
};

std::vector<std::size_t> connected_first_order(const GeneralGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> order;
    std::vector<std::size_t> links(n, 0);
    Bitset placed(n);
    while (order.size() < n) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed.test(v))
                continue;
            if (best == n || links[v] > links[best] || (links[v] == links[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        placed.set(best);
        order.push_back(best);
        for (auto u : g.neighbors(best).indices())
            ++links[u];
    }
    return order;
}

std::vector<int> bipartite_colors(const BipartiteGraph& b)
{
    std::vector<int> c(b.x_size(), 0);
    c.resize(b.x_size() + b.y_size(), 1);
    return c;
}

} // namespace

std::optional<Embedding> find_induced_colored(const GeneralGraph& host, std::span<const int> host_colors,
                                              const GeneralGraph& pattern, std::span<const int> pattern_colors)
{
    if (pattern.size() > host.size())
        return std::nullopt;
    InducedSearch s{host,          host_colors, pattern, pattern_colors, connected_first_order(pattern),
                    Embedding(pattern.size()), Bitset(host.size())};
    if (s.extend(0))
        return s.image;
    return std::nullopt;
}

std::optional<Embedding> find_induced(const GeneralGraph& host, const GeneralGraph& pattern)
{
    std::vector<int> hc(host.size(), 0), pc(pattern.size(), 0);
    return find_induced_colored(host, hc, pattern, pc);
}

std::optional<Embedding> find_induced(const BipartiteGraph& host, const BipartiteGraph& pattern, bool respect_sides)
{
    if (!respect_sides)
        return find_induced(to_general(host), to_general(pattern));
    auto hc = bipartite_colors(host);
    auto pc = bipartite_colors(pattern);
    return find_induced_colored(to_general(host), hc, to_general(pattern), pc);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_image(const BipartiteGraph& host,
                                                                          const Embedding& e)
{
    std::vector<std::size_t> xs, ys;
    for (auto v : e) {
        if (v < host.x_size())
            xs.push_back(v);
        else
            ys.push_back(v - host.x_size());
    }
    return {xs, ys};
}

namespace patterns {

const BipartiteGraph& two_k2()
{
    static const BipartiteGraph g = gen_matching(2);
    return g;
}
const BipartiteGraph& three_k2()
{
    static const BipartiteGraph g = gen_matching(3);
    return g;
}
const BipartiteGraph& c6()
{
    static const BipartiteGraph g = gen_even_cycle(3);
    return g;
}
const BipartiteGraph& c8()
{
    static const BipartiteGraph g = gen_even_cycle(4);
    return g;
}
const BipartiteGraph& p7()
{
    static const BipartiteGraph g = gen_path(7);
    return g;
}
const BipartiteGraph& x_p7()
{
    static const BipartiteGraph g = gen_x_p7();
    return g;
}
const BipartiteGraph& y_p7()
{
    static const BipartiteGraph g = gen_y_p7();
    return g;
}

const GeneralGraph& g_2k2()
{
    static const GeneralGraph g = to_general(gen_matching(2));
    return g;
}
const GeneralGraph& g_c4()
{
    static const GeneralGraph g = gen_cycle_graph(4);
    return g;
}
const GeneralGraph& g_c5()
{
    static const GeneralGraph g = gen_cycle_graph(5);
    return g;
}
const GeneralGraph& g_p4()
{
    static const GeneralGraph g = gen_path_graph(4);
    return g;
}
const GeneralGraph& g_s3()
{
    static const GeneralGraph g = to_general(gen_sun(3));
    return g;
}
const GeneralGraph& g_s4()
{
    static const GeneralGraph g = to_general(gen_sun(4));
    return g;
}
const GeneralGraph& g_net()
{
    static const GeneralGraph g = to_general(gen_net());
    return g;
}
const GeneralGraph& g_rising_sun()
{
    static const GeneralGraph g = to_general(gen_rising_sun());
    return g;
}
const GeneralGraph& g_co_rising_sun()
{
    static const GeneralGraph g = to_general(gen_co_rising_sun());
    return g;
}

} // namespace patterns

namespace {

bool free_of(const GeneralGraph& g, std::initializer_list<const GeneralGraph*> forbidden)
{
    return std::none_of(forbidden.begin(), forbidden.end(),
                        [&](const GeneralGraph* f) { return find_induced(g, *f).has_value(); });
}

} // namespace

bool is_chain(const BipartiteGraph& b) { return !find_induced(b, patterns::two_k2(), false); }

bool is_chordal(const GeneralGraph& g)
{
    const std::size_t n = g.size();
    // Maximum cardinality search; visit[t] is the t-th visited vertex, and
    // the reverse visit order is a perfect elimination ordering iff g is chordal.
    std::vector<std::size_t> weight(n, 0), visit;
    Bitset visited(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!visited.test(v) && (best == n || weight[v] > weight[best]))
                best = v;
        visited.set(best);
        visit.push_back(best);
        for (auto u : g.neighbors(best).indices())
            if (!visited.test(u))
                ++weight[u];
    }
    // Vertex visit[t] is eliminated after everything visited later; its
    // neighbours visited earlier must form a clique.
    Bitset earlier(n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t v = visit[t];
        Bitset back = g.neighbors(v) & earlier;
        for (auto w : back.indices()) {
            Bitset rest = back;
            rest.reset(w);
            if (!rest.is_subset_of(g.neighbors(w)))
                return false;
        }
        earlier.set(v);
    }
    return true;
}

bool is_chordal_bipartite(const BipartiteGraph& b) { return is_gamma_free(doubly_lexical_order(b.matrix())); }

std::optional<Embedding> find_induced_even_hole(const BipartiteGraph& b)
{
    const std::size_t limit = std::min(b.x_size(), b.y_size());
    const GeneralGraph host = to_general(b);
    for (std::size_t k = 3; k <= limit; ++k)
        if (auto e = find_induced(host, gen_cycle_graph(static_cast<int>(2 * k))))
            return e;
    return std::nullopt;
}

bool is_strongly_chordal(const SplitGraph& g) { return is_chordal_bipartite(bip(g)); }

bool is_strongly_chordal(const GeneralGraph& g)
{
    if (g.size() > sun_search_limit) {
        if (auto s = is_split(g))
            return is_strongly_chordal(*s);
        throw std::length_error("sun search is limited to " + std::to_string(sun_search_limit) +
                                " vertices for non-split graphs");
    }
    if (!is_chordal(g))
        return false;
    for (std::size_t k = 3; 2 * k <= g.size(); ++k)
        if (find_induced(g, to_general(gen_sun(static_cast<int>(k)))))
            return false;
    return true;
}

bool is_acb(const BipartiteGraph& b)
{
    for (const BipartiteGraph* f : {&patterns::three_k2(), &patterns::c6(), &patterns::c8()})
        if (find_induced(b, *f, false))
            return false;
    return true;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> split_partition(const GeneralGraph& g)
{
    const std::size_t n = g.size();
    if (n <= 10 && !free_of(g, {&patterns::g_2k2(), &patterns::g_c4(), &patterns::g_c5()}))
        return std::nullopt;

    // Hammer-Simeone: with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    // g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i; K = the m first vertices.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(order[i]) + 1 >= i + 1)
            m = i + 1;
    std::size_t head = 0, tail = 0;
    for (std::size_t i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(order[i]);
    const bool split = head == m * (m - 1) + tail;

    std::vector<std::size_t> clique(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<std::size_t> stable(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
    std::sort(clique.begin(), clique.end());
    std::sort(stable.begin(), stable.end());

    if (n <= 10 && !split)
        throw std::logic_error("forbidden-subgraph and degree-sequence split tests disagree");
    if (!split)
        return std::nullopt;
    return std::make_pair(std::move(clique), std::move(stable));
}

std::optional<SplitGraph> is_split(const GeneralGraph& g)
{
    auto part = split_partition(g);
    if (!part)
        return std::nullopt;
    const auto& [clique, stable] = *part;
    BinaryMatrix cross(clique.size(), stable.size());
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = 0; b < stable.size(); ++b)
            cross.assign(a, b, g.adjacent(clique[a], stable[b]));
    return SplitGraph(std::move(cross));
}

bool is_threshold_split(const SplitGraph& g)
{
    std::vector<Bitset> k_sets, i_sets;
    for (std::size_t v = 0; v < g.k_size(); ++v)
        k_sets.push_back(g.cross().row(v));
    BinaryMatrix t = g.cross().transposed();
    for (std::size_t v = 0; v < g.i_size(); ++v)
        i_sets.push_back(t.row(v));
    return std::max(family_width(k_sets), family_width(i_sets)) <= 1;
}

bool is_interval_split(const SplitGraph& g)
{
    return free_of(to_general(g), {&patterns::g_s3(), &patterns::g_net(), &patterns::g_rising_sun()});
}

bool is_auto_strongly_chordal(const GeneralGraph& g)
{
    return free_of(g, {&patterns::g_2k2(), &patterns::g_c4(), &patterns::g_c5(), &patterns::g_s3(),
                       &patterns::g_net(), &patterns::g_s4()});
}

} // namespace acb
