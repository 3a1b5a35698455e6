#include <acb/isomorphism.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace acb {

namespace {

// Joint 1-dimensional color refinement of two graphs. Returns false as soon as
// the color histograms diverge.
bool refine(const GeneralGraph& a, std::vector<int>& ca, const GeneralGraph& b, std::vector<int>& cb)
{
    const std::size_t n = a.size();
    std::size_t classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto signature = [](const GeneralGraph& g, const std::vector<int>& c, std::size_t v) {
            std::vector<int> ns;
            for (auto u : g.neighbors(v).indices())
                ns.push_back(c[u]);
            std::sort(ns.begin(), ns.end());
            return std::make_pair(c[v], std::move(ns));
        };
        std::vector<std::pair<int, std::vector<int>>> sa(n), sb(n);
        for (std::size_t v = 0; v < n; ++v) {
            sa[v] = signature(a, ca, v);
            sb[v] = signature(b, cb, v);
            ids.emplace(sa[v], 0);
            ids.emplace(sb[v], 0);
        }
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        std::vector<int> na(n), nb(n);
        std::vector<int> hist(ids.size(), 0);
        for (std::size_t v = 0; v < n; ++v) {
            na[v] = ids[sa[v]];
            nb[v] = ids[sb[v]];
            ++hist[na[v]];
            --hist[nb[v]];
        }
        if (std::any_of(hist.begin(), hist.end(), [](int h) { return h != 0; }))
            return false;
        ca = std::move(na);
        cb = std::move(nb);
        if (ids.size() == classes)
            return true;
        classes = ids.size();
    }
}

struct Matcher {
    const GeneralGraph& a;
    const GeneralGraph& b;
    const std::vector<int>& ca;
    std::vector<Bitset> class_b;
    std::vector<std::size_t> order;
    std::vector<std::size_t> image;
    Bitset used;

    bool extend(std::size_t depth)
    {
        if (depth == order.size())
            return true;
        std::size_t v = order[depth];
        Bitset cand = class_b[ca[v]] - used;
        for (std::size_t d = 0; d < depth; ++d) {
            std::size_t u = order[d];
            if (a.adjacent(v, u))
                cand &= b.neighbors(image[u]);
            else
                cand -= b.neighbors(image[u]);
        }
        for (std::size_t w = cand.find_first(); w < cand.size(); w = cand.find_next(w + 1)) {
            image[v] = w;
            used.set(w);
            if (extend(depth + 1))
                return true;
            used.reset(w);
        }
        return false;
    }
};

} // namespace

bool colored_isomorphic(const GeneralGraph& a, std::span<const int> colors_a, const GeneralGraph& b,
                        std::span<const int> colors_b)
{
    const std::size_t n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count())
        return false;
    if (n == 0)
        return true;
    std::vector<int> ca(colors_a.begin(), colors_a.end());
    std::vector<int> cb(colors_b.begin(), colors_b.end());
    if (!refine(a, ca, b, cb))
        return false;

    int classes = *std::max_element(ca.begin(), ca.end()) + 1;
    Matcher m{a, b, ca, std::vector<Bitset>(classes, Bitset(n)), {}, std::vector<std::size_t>(n), Bitset(n)};
    std::vector<std::size_t> class_size(classes, 0);
    for (std::size_t v = 0; v < n; ++v) {
        m.class_b[cb[v]].set(v);
        ++class_size[ca[v]];
    }

    // Connected-first order: start from the smallest color class, then always
    // take the unplaced vertex with most placed neighbours.
    Bitset placed(n);
    std::vector<std::size_t> links(n, 0);
    while (m.order.size() < n) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed.test(v))
                continue;
            if (best == n || links[v] > links[best] ||
                (links[v] == links[best] && class_size[ca[v]] < class_size[ca[best]]))
                best = v;
        }
        placed.set(best);
        m.order.push_back(best);
        for (auto u : a.neighbors(best).indices())
            ++links[u];
    }
    return m.extend(0);
}

bool iso_general(const GeneralGraph& a, const GeneralGraph& b)
{
    std::vector<int> ca(a.size(), 0), cb(b.size(), 0);
    return colored_isomorphic(a, ca, b, cb);
}

namespace {

std::vector<int> side_colors(std::size_t first, std::size_t second)
{
    std::vector<int> c(first, 0);
    c.resize(first + second, 1);
    return c;
}

bool iso_bipartite_oriented(const BipartiteGraph& a, const BipartiteGraph& b)
{
    if (a.x_size() != b.x_size() || a.y_size() != b.y_size())
        return false;
    auto colors = side_colors(a.x_size(), a.y_size());
    return colored_isomorphic(to_general(a), colors, to_general(b), colors);
}

} // namespace

bool iso_bipartite(const BipartiteGraph& a, const BipartiteGraph& b, bool allow_side_swap)
{
    if (iso_bipartite_oriented(a, b))
        return true;
    return allow_side_swap && iso_bipartite_oriented(a, b.swapped());
}

bool iso_split(const SplitGraph& a, const SplitGraph& b)
{
    if (a.k_size() != b.k_size() || a.i_size() != b.i_size())
        return false;
    auto colors = side_colors(a.k_size(), a.i_size());
    return colored_isomorphic(to_general(a), colors, to_general(b), colors);
}

namespace {

// Minimal row-major string of m over permutations of its rows, columns sorted optimally.
std::string min_over_row_perms(const BinaryMatrix& m)
{
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    std::vector<std::string> columns(c, std::string(r, '0'));
    do {
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i)
                columns[j][i] = m.at(perm[i], j) ? '1' : '0';
        std::vector<std::string> sorted = columns;
        std::sort(sorted.begin(), sorted.end());
        std::string s(r * c, '0');
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i)
                s[i * c + j] = sorted[j][i];
        if (first || s < best) {
            best = std::move(s);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Same minimum, enumerating column permutations and sorting rows instead.
std::string min_over_col_perms(const BinaryMatrix& m)
{
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    std::vector<std::size_t> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    std::vector<std::string> rows(r, std::string(c, '0'));
    do {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                rows[i][j] = m.at(i, perm[j]) ? '1' : '0';
        std::vector<std::string> sorted = rows;
        std::sort(sorted.begin(), sorted.end());
        std::string s;
        for (const auto& row : sorted)
            s += row;
        if (first || s < best) {
            best = std::move(s);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string min_string(const BinaryMatrix& m)
{
    return m.rows() <= m.cols() ? min_over_row_perms(m) : min_over_col_perms(m);
}

BinaryMatrix from_row_major(const std::string& s, std::size_t rows, std::size_t cols)
{
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.assign(i, j, s[i * cols + j] == '1');
    return m;
}

} // namespace

BinaryMatrix canonical_matrix(const BipartiteGraph& b, bool allow_side_swap)
{
    BinaryMatrix m = b.matrix();
    if (allow_side_swap && m.rows() > m.cols())
        m = m.transposed();
    std::string best = min_string(m);
    if (allow_side_swap && m.rows() == m.cols())
        best = std::min(best, min_string(m.transposed()));
    return from_row_major(best, m.rows(), m.cols());
}

} // namespace acb
