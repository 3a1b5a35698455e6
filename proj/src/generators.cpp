#include <acb/generators.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace acb {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

BipartiteGraph gen_Dk(int k)
{
    require(k >= 2, "D_k needs k >= 2");
    const int n = 3 * k - 4;
    auto central = [k](int i) { return i >= k - 1 && i <= 2 * k - 2; };
    BinaryMatrix m(n, n);
    // i, j are the 1-based indices of x_i, y_j.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (std::abs(i - j) <= k - 2 && (central(i) || central(j)))
                m.assign(i - 1, j - 1, true);
    return BipartiteGraph(std::move(m));
}

BipartiteGraph gen_Dkl(int k, int l)
{
    require(l >= 2 && k > l, "D_{k,l} needs k > l >= 2");
    BipartiteGraph d = gen_Dk(k);
    std::vector<std::size_t> xs(d.x_size());
    std::iota(xs.begin(), xs.end(), 0);
    std::vector<std::size_t> ys;
    // Drop y_k .. y_{2k-l-1} (1-based), i.e. columns k-1 .. 2k-l-2.
    for (int j = 1; j <= static_cast<int>(d.y_size()); ++j)
        if (j < k || j > 2 * k - l - 1)
            ys.push_back(static_cast<std::size_t>(j - 1));
    return induced(d, xs, ys);
}

BipartiteGraph gen_Bk(int k)
{
    require(k >= 2, "B_k needs k >= 2");
    BinaryMatrix m(k, 2 * k - 2);
    // N(x_i) = {y_i, ..., y_{i+k-2}}, 1-based.
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= i + k - 2; ++j)
            m.assign(i - 1, j - 1, true);
    return BipartiteGraph(std::move(m));
}

BipartiteGraph gen_even_cycle(int k)
{
    require(k >= 2, "C_{2k} needs k >= 2");
    BinaryMatrix m(k, k);
    for (int i = 0; i < k; ++i) {
        m.assign(i, i, true);
        m.assign(i, (i + k - 1) % k, true);
    }
    return BipartiteGraph(std::move(m));
}

BipartiteGraph gen_matching(int k)
{
    require(k >= 1, "kK_2 needs k >= 1");
    BinaryMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        m.assign(i, i, true);
    return BipartiteGraph(std::move(m));
}

BipartiteGraph gen_path(int n, Side first)
{
    require(n >= 1, "P_n needs n >= 1");
    // v_{2t} lands on the first side, v_{2t+1} on the other; edge v_s v_{s+1}.
    const int a = (n + 1) / 2;
    const int b = n / 2;
    BinaryMatrix m(a, b);
    for (int s = 0; s + 1 < n; ++s) {
        int even = s % 2 == 0 ? s : s + 1;
        int odd = s % 2 == 0 ? s + 1 : s;
        m.assign(even / 2, odd / 2, true);
    }
    BipartiteGraph g(std::move(m));
    return first == Side::X ? g : g.swapped();
}

BipartiteGraph gen_x_p7() { return gen_path(7, Side::X); }
BipartiteGraph gen_y_p7() { return gen_path(7, Side::Y); }

SplitGraph gen_sun(int k)
{
    require(k >= 3, "S_k needs k >= 3");
    BinaryMatrix m(k, k);
    for (int i = 0; i < k; ++i) {
        m.assign(i, i, true);
        m.assign((i + 1) % k, i, true);
    }
    return SplitGraph(std::move(m));
}

SplitGraph gen_net() { return complement_split(gen_sun(3)); }

SplitGraph gen_rising_sun()
{
    BinaryMatrix s4 = gen_sun(4).cross();
    BinaryMatrix m(4, 3);
    for (std::size_t q = 0; q < 4; ++q)
        for (std::size_t s = 0; s < 3; ++s)
            m.assign(q, s, s4.at(q, s));
    return SplitGraph(std::move(m));
}

SplitGraph gen_co_rising_sun() { return complement_split(gen_rising_sun()); }

GeneralGraph gen_cycle_graph(int n)
{
    require(n >= 3, "C_n needs n >= 3");
    GeneralGraph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

GeneralGraph gen_path_graph(int n)
{
    require(n >= 1, "P_n needs n >= 1");
    GeneralGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

GeneralGraph gen_complete_graph(int n)
{
    require(n >= 0, "K_n needs n >= 0");
    GeneralGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

namespace {

struct FamilyInfo {
    Family family;
    std::size_t arity;
};

const std::map<std::string, FamilyInfo>& family_table()
{
    static const std::map<std::string, FamilyInfo> table = {
        {"Dk", {Family::Dk, 1}},       {"Dkl", {Family::Dkl, 2}},
        {"Bk", {Family::Bk, 1}},       {"C2k", {Family::C2k, 1}},
        {"kK2", {Family::kK2, 1}},     {"Pk", {Family::Pk, 1}},
        {"XP7", {Family::XP7, 0}},     {"YP7", {Family::YP7, 0}},
        {"Sk", {Family::Sk, 1}},       {"net", {Family::Net, 0}},
        {"rising_sun", {Family::RisingSun, 0}}, {"co_rising_sun", {Family::CoRisingSun, 0}},
    };
    return table;
}

} // namespace

NamedFamily named_family(const std::string& name, const std::vector<int>& params)
{
    auto it = family_table().find(name);
    if (it == family_table().end())
        throw std::invalid_argument("unknown family '" + name + "'");
    if (params.size() != it->second.arity)
        throw std::invalid_argument("family '" + name + "' takes " + std::to_string(it->second.arity) +
                                    " parameter(s), got " + std::to_string(params.size()));
    return {it->second.family, params};
}

std::vector<std::string> family_names()
{
    std::vector<std::string> names;
    for (const auto& [name, info] : family_table())
        names.push_back(name);
    return names;
}

AnyGraph gen_named(const NamedFamily& request)
{
    const auto& p = request.params;
    auto arg = [&](std::size_t i) {
        require(i < p.size(), "missing family parameter");
        return p[i];
    };
    switch (request.family) {
    case Family::Dk:
        return gen_Dk(arg(0));
    case Family::Dkl:
        return gen_Dkl(arg(0), arg(1));
    case Family::Bk:
        return gen_Bk(arg(0));
    case Family::C2k:
        return gen_even_cycle(arg(0));
    case Family::kK2:
        return gen_matching(arg(0));
    case Family::Pk:
        return gen_path(arg(0));
    case Family::XP7:
        return gen_x_p7();
    case Family::YP7:
        return gen_y_p7();
    case Family::Sk:
        return gen_sun(arg(0));
    case Family::Net:
        return gen_net();
    case Family::RisingSun:
        return gen_rising_sun();
    case Family::CoRisingSun:
        return gen_co_rising_sun();
    }
    throw std::invalid_argument("unknown family");
}

namespace {

// Rows are packed with column 0 as the most significant bit, so integer order
// equals the order of the serialized '0'/'1' strings.
using Row = std::uint32_t;

class Canonicalizer {
public:
    Canonicalizer(std::size_t rows, std::size_t cols, bool swap) : rows_(rows), cols_(cols), swap_(swap)
    {
        perm_.resize(std::min(rows, cols));
        std::iota(perm_.begin(), perm_.end(), 0);
        do {
            perms_.push_back(perm_);
        } while (std::next_permutation(perm_.begin(), perm_.end()));
    }

    /// rows must be sorted ascending; true iff no relabeling gives a smaller matrix.
    bool is_canonical(const std::vector<Row>& rows) const
    {
        if (!minimal_under_perms(rows, rows_, cols_, rows))
            return false;
        if (swap_) {
            std::vector<Row> t = transpose(rows, rows_, cols_);
            if (!minimal_under_perms(t, cols_, rows_, rows))
                return false;
        }
        return true;
    }

private:
    static bool bit(Row r, std::size_t j, std::size_t width) { return (r >> (width - 1 - j)) & 1u; }

    static std::vector<Row> transpose(const std::vector<Row>& m, std::size_t r, std::size_t c)
    {
        std::vector<Row> t(c, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (bit(m[i], j, c))
                    t[j] |= Row{1} << (r - 1 - i);
        return t;
    }

    // True iff no row/column relabeling of m (r x c) is smaller than target.
    bool minimal_under_perms(const std::vector<Row>& m, std::size_t r, std::size_t c,
                             const std::vector<Row>& target) const
    {
        std::vector<Row> cand;
        if (c <= r) {
            // Permute columns, then sort rows.
            for (const auto& p : perms_) {
                cand.assign(r, 0);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        if (bit(m[i], p[j], c))
                            cand[i] |= Row{1} << (c - 1 - j);
                std::sort(cand.begin(), cand.end());
                if (cand < target)
                    return false;
            }
        } else {
            // Permute rows, then sort columns (read top row first).
            std::vector<Row> columns(c);
            for (const auto& p : perms_) {
                for (std::size_t j = 0; j < c; ++j) {
                    Row col = 0;
                    for (std::size_t i = 0; i < r; ++i)
                        if (bit(m[p[i]], j, c))
                            col |= Row{1} << (r - 1 - i);
                    columns[j] = col;
                }
                std::sort(columns.begin(), columns.end());
                cand = transpose(columns, c, r);
                if (cand < target)
                    return false;
            }
        }
        return true;
    }

    std::size_t rows_, cols_;
    bool swap_;
    std::vector<std::size_t> perm_;
    std::vector<std::vector<std::size_t>> perms_;
};

void extend(std::vector<Row>& rows, std::size_t depth, Row min_row, std::size_t x, std::size_t y,
            const Canonicalizer& canon, const std::function<void(const BipartiteGraph&)>& fn)
{
    if (depth == x) {
        if (!canon.is_canonical(rows))
            return;
        BinaryMatrix m(x, y);
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t j = 0; j < y; ++j)
                m.assign(i, j, (rows[i] >> (y - 1 - j)) & 1u);
        fn(BipartiteGraph(std::move(m)));
        return;
    }
    const Row limit = Row{1} << y;
    for (Row r = min_row; r < limit; ++r) {
        rows[depth] = r;
        extend(rows, depth + 1, r, x, y, canon, fn);
    }
}

} // namespace

void for_each_bipartite(std::size_t x_size, std::size_t y_size, const std::function<void(const BipartiteGraph&)>& fn)
{
    if (x_size * y_size > 20)
        throw std::length_error("enumerate_bipartite is limited to x_size * y_size <= 20");
    if (x_size == 0 || y_size == 0) {
        fn(BipartiteGraph(x_size, y_size));
        return;
    }
    Canonicalizer canon(x_size, y_size, x_size == y_size);
    std::vector<Row> rows(x_size, 0);
    extend(rows, 0, 0, x_size, y_size, canon, fn);
}

std::vector<BipartiteGraph> enumerate_bipartite(std::size_t x_size, std::size_t y_size)
{
    std::vector<BipartiteGraph> out;
    for_each_bipartite(x_size, y_size, [&](const BipartiteGraph& b) { out.push_back(b); });
    return out;
}

} // namespace acb
