#include <acb/sperner.hpp>

#include <acb/io.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace acb {

bool is_sperner(const Hypergraph& h)
{
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (std::size_t j = 0; j < h.edge_count(); ++j)
            if (i != j && h.edge(i).is_subset_of(h.edge(j)))
                return false;
    return true;
}

bool is_k_critical_sperner(const Hypergraph& h)
{
    if (!is_sperner(h))
        return false;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        std::vector<Bitset> edges = h.edges();
        for (auto& e : edges)
            e.reset(v);
        if (is_sperner(Hypergraph(h.vertex_count(), std::move(edges))))
            return false;
    }
    return true;
}

ColumnPatternFamily::ColumnPatternFamily(std::size_t k, std::vector<std::uint32_t> columns)
    : k_(k), columns_(std::move(columns))
{
    if (k_ > 31)
        throw std::invalid_argument("column form supports at most 31 hyperedges");
    const std::uint32_t full = (std::uint32_t{1} << k_) - 1;
    std::vector<std::uint32_t> seen = columns_;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("repeated column");
    for (auto c : columns_) {
        if (c == 0)
            throw std::invalid_argument("empty column");
        if (c == full)
            throw std::invalid_argument("full column");
        if (c > full)
            throw std::invalid_argument("column names a missing hyperedge");
    }
}

ColumnPatternFamily ColumnPatternFamily::from_hypergraph(const Hypergraph& h)
{
    if (h.edge_count() > 31)
        throw std::invalid_argument("column form supports at most 31 hyperedges");
    std::vector<std::uint32_t> columns(h.vertex_count(), 0);
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (auto v : h.edge(e).indices())
            columns[v] |= std::uint32_t{1} << e;
    return ColumnPatternFamily(h.edge_count(), std::move(columns));
}

Hypergraph ColumnPatternFamily::to_hypergraph() const
{
    std::vector<Bitset> edges(k_, Bitset(columns_.size()));
    for (std::size_t v = 0; v < columns_.size(); ++v)
        for (std::size_t e = 0; e < k_; ++e)
            if ((columns_[v] >> e) & 1u)
                edges[e].set(v);
    return Hypergraph(columns_.size(), std::move(edges));
}

std::string sperner_canonical(const Hypergraph& h)
{
    const std::size_t n = h.vertex_count();
    const std::size_t k = h.edge_count();
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : h.edges())
        for (auto v : e.indices())
            ++degree[v];

    using Invariant = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Invariant> inv(k);
    for (std::size_t e = 0; e < k; ++e) {
        inv[e].first = h.edge(e).count();
        for (auto v : h.edge(e).indices())
            inv[e].second.push_back(degree[v]);
        std::sort(inv[e].second.begin(), inv[e].second.end());
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t p = 0; p < k;) {
        std::size_t q = p;
        while (q < k && inv[order[q]] == inv[order[p]])
            ++q;
        groups.emplace_back(p, q);
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(p), order.begin() + static_cast<std::ptrdiff_t>(q));
        p = q;
    }

    std::vector<std::string> best, cols(n);
    std::function<void(std::size_t)> visit = [&](std::size_t g) {
        if (g == groups.size()) {
            for (std::size_t v = 0; v < n; ++v) {
                cols[v].assign(k, '0');
                for (std::size_t p = 0; p < k; ++p)
                    if (h.edge(order[p]).test(v))
                        cols[v][p] = '1';
            }
            std::sort(cols.begin(), cols.end());
            if (best.empty() || cols < best)
                best = cols;
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
        do {
            visit(g + 1);
        } while (std::next_permutation(first, last));
    };
    visit(0);

    std::vector<Bitset> edges(k, Bitset(n));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t p = 0; p < k; ++p)
            if (best[v][p] == '1')
                edges[p].set(v);
    return serialize(Hypergraph(n, std::move(edges)));
}

namespace {

// Column c (1 .. 2^k-2) covers the ordered pair (i, j) when i is in c and j
// is not; a column family is Sperner iff every pair is covered, and critical
// iff every column is the only one covering some pair.
struct Search {
    std::size_t k;
    std::size_t pairs;
    std::vector<std::uint64_t> cover;
    std::vector<std::vector<std::uint32_t>> candidates;
    std::vector<std::vector<std::uint8_t>> relabel;

    explicit Search(std::size_t k_) : k(k_), pairs(k_ * (k_ - 1))
    {
        const std::uint32_t full = (std::uint32_t{1} << k) - 1;
        cover.assign(full + 1, 0);
        candidates.resize(pairs);
        std::size_t p = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j)
                    continue;
                for (std::uint32_t c = 1; c < full; ++c)
                    if (((c >> i) & 1u) && !((c >> j) & 1u)) {
                        cover[c] |= std::uint64_t{1} << p;
                        candidates[p].push_back(c);
                    }
                ++p;
            }
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint8_t> map(full + 1, 0);
            for (std::uint32_t c = 0; c <= full; ++c) {
                std::uint32_t img = 0;
                for (std::size_t b = 0; b < k; ++b)
                    if ((c >> b) & 1u)
                        img |= std::uint32_t{1} << perm[b];
                map[c] = static_cast<std::uint8_t>(img);
            }
            relabel.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint64_t image(std::uint64_t set, const std::vector<std::uint8_t>& map) const
    {
        std::uint64_t out = 0;
        for (std::uint64_t s = set; s; s &= s - 1)
            out |= std::uint64_t{1} << map[std::countr_zero(s)];
        return out;
    }

    std::uint64_t orbit_min(std::uint64_t set) const
    {
        std::uint64_t best = set;
        for (const auto& map : relabel)
            best = std::min(best, image(set, map));
        return best;
    }

    bool is_orbit_min(std::uint64_t set) const
    {
        return std::all_of(relabel.begin(), relabel.end(), [&](const auto& map) { return image(set, map) >= set; });
    }

    struct State {
        std::vector<int> count;
        std::vector<std::uint32_t> chosen;
        std::uint64_t set = 0;
        std::uint64_t excluded = 0;
        std::size_t labelled = 0;
        std::vector<std::uint64_t> found;
    };

    bool add(State& s, std::uint32_t c) const
    {
        for (std::uint64_t m = cover[c]; m; m &= m - 1)
            ++s.count[std::countr_zero(m)];
        s.chosen.push_back(c);
        s.set |= std::uint64_t{1} << c;
        std::uint64_t single = 0;
        for (std::size_t p = 0; p < pairs; ++p)
            if (s.count[p] == 1)
                single |= std::uint64_t{1} << p;
        return std::all_of(s.chosen.begin(), s.chosen.end(), [&](std::uint32_t d) { return cover[d] & single; });
    }

    void remove(State& s, std::uint32_t c) const
    {
        for (std::uint64_t m = cover[c]; m; m &= m - 1)
            --s.count[std::countr_zero(m)];
        s.chosen.pop_back();
        s.set &= ~(std::uint64_t{1} << c);
    }

    void descend(State& s) const
    {
        std::size_t p = 0;
        while (p < pairs && s.count[p] > 0)
            ++p;
        if (p == pairs) {
            ++s.labelled;
            if (is_orbit_min(s.set))
                s.found.push_back(s.set);
            return;
        }
        const std::uint64_t saved = s.excluded;
        for (auto c : candidates[p]) {
            if ((s.excluded >> c) & 1u)
                continue;
            if (add(s, c))
                descend(s);
            remove(s, c);
            s.excluded |= std::uint64_t{1} << c;
        }
        s.excluded = saved;
    }

    // Subtree where the first pair is covered first by candidates[0][branch].
    void run_branch(State& s, std::size_t branch) const
    {
        const auto& top = candidates[0];
        s.excluded = 0;
        for (std::size_t b = 0; b < branch; ++b)
            s.excluded |= std::uint64_t{1} << top[b];
        if (add(s, top[branch]))
            descend(s);
        remove(s, top[branch]);
        s.excluded = 0;
    }
};

Hypergraph from_column_set(std::size_t k, std::uint64_t set)
{
    std::vector<std::uint32_t> columns;
    for (std::uint64_t s = set; s; s &= s - 1)
        columns.push_back(static_cast<std::uint32_t>(std::countr_zero(s)));
    return ColumnPatternFamily(k, std::move(columns)).to_hypergraph();
}

} // namespace

CriticalEnumeration enumerate_k_critical(std::size_t k, std::size_t workers)
{
    if (k < sperner_min_k || k > sperner_max_k)
        throw std::out_of_range("k-critical enumeration supports 2 <= k <= 6");
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());

    const Search search(k);
    const std::size_t branches = search.candidates[0].size();
    workers = std::min(workers, branches);

    std::vector<Search::State> states(workers);
    std::atomic<std::size_t> next{0};
    auto work = [&](std::size_t w) {
        auto& s = states[w];
        s.count.assign(search.pairs, 0);
        for (std::size_t b; (b = next.fetch_add(1)) < branches;)
            search.run_branch(s, b);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    CriticalEnumeration out;
    out.k = k;
    std::vector<std::uint64_t> reps;
    for (const auto& s : states) {
        out.labelled_count += s.labelled;
        reps.insert(reps.end(), s.found.begin(), s.found.end());
    }

    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    std::vector<std::pair<std::size_t, std::string>> keys;
    std::vector<Hypergraph> graphs;
    for (auto set : reps) {
        std::uint64_t mirrored = 0;
        for (std::uint64_t s = set; s; s &= s - 1)
            mirrored |= std::uint64_t{1} << (full ^ static_cast<std::uint32_t>(std::countr_zero(s)));
        if (search.orbit_min(mirrored) == set)
            ++out.auto_mirror;
        std::string canon = sperner_canonical(from_column_set(k, set));
        Hypergraph h = parse_hypergraph(canon);
        keys.emplace_back(h.vertex_count(), std::move(canon));
        graphs.push_back(std::move(h));
    }
    std::vector<std::size_t> idx(reps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (auto i : idx) {
        out.instances.push_back(graphs[i]);
        out.canonical.push_back(keys[i].second);
    }
    out.count = out.instances.size();
    return out;
}

} // namespace acb
