#include <acb/ordering.hpp>

#include <acb/io.hpp>
#include <acb/poset.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace acb {

namespace {

std::vector<std::size_t> identity(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n)
{
    if (p.size() != n)
        return false;
    std::vector<char> seen(n, 0);
    for (auto v : p) {
        if (v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

} // namespace

OrderedMatrix::OrderedMatrix(BinaryMatrix matrix)
    : matrix_(std::move(matrix)), row_order_(identity(matrix_.rows())), col_order_(identity(matrix_.cols()))
{
}

OrderedMatrix::OrderedMatrix(BinaryMatrix matrix, std::vector<std::size_t> row_order,
                             std::vector<std::size_t> col_order)
    : matrix_(std::move(matrix)), row_order_(std::move(row_order)), col_order_(std::move(col_order))
{
    if (!is_permutation_of(row_order_, matrix_.rows()))
        throw std::invalid_argument("row order is not a permutation of the matrix rows");
    if (!is_permutation_of(col_order_, matrix_.cols()))
        throw std::invalid_argument("column order is not a permutation of the matrix columns");
}

BinaryMatrix OrderedMatrix::permuted() const
{
    BinaryMatrix p(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            p.assign(i, j, at(i, j));
    return p;
}

std::optional<GammaWitness> find_gamma(const OrderedMatrix& m)
{
    const BinaryMatrix p = m.permuted();
    for (std::size_t top = 0; top < p.rows(); ++top) {
        for (std::size_t bottom = top + 1; bottom < p.rows(); ++bottom) {
            const Bitset common = p.row(top) & p.row(bottom);
            const std::size_t left = common.find_first();
            if (left == common.size())
                continue;
            const Bitset only_top = p.row(top) - p.row(bottom);
            const std::size_t right = only_top.find_next(left + 1);
            if (right < only_top.size())
                return GammaWitness{top, bottom, left, right};
        }
    }
    return std::nullopt;
}

namespace {

// Row key under the convention: last column most significant, so comparing
// reversed rows lexicographically.
bool row_less(const BinaryMatrix& m, const std::vector<std::size_t>& cols, std::size_t a, std::size_t b)
{
    for (std::size_t q = cols.size(); q-- > 0;) {
        bool va = m.at(a, cols[q]);
        bool vb = m.at(b, cols[q]);
        if (va != vb)
            return vb;
    }
    return false;
}

bool col_less(const BinaryMatrix& m, const std::vector<std::size_t>& rows, std::size_t a, std::size_t b)
{
    for (std::size_t p = rows.size(); p-- > 0;) {
        bool va = m.at(rows[p], a);
        bool vb = m.at(rows[p], b);
        if (va != vb)
            return vb;
    }
    return false;
}

} // namespace

OrderedMatrix doubly_lexical_order(const BinaryMatrix& m)
{
    std::vector<std::size_t> rows = identity(m.rows());
    std::vector<std::size_t> cols = identity(m.cols());
    // Each sort that changes something strictly increases a bounded potential,
    // so the loop terminates; the cap only guards against a broken comparator.
    for (std::size_t round = 0;; ++round) {
        if (round > 4 * (m.rows() + 1) * (m.cols() + 1) * (m.rows() + m.cols() + 1))
            throw std::logic_error("doubly lexical ordering did not converge");
        auto old_rows = rows;
        auto old_cols = cols;
        std::stable_sort(rows.begin(), rows.end(),
                         [&](std::size_t a, std::size_t b) { return row_less(m, cols, a, b); });
        std::stable_sort(cols.begin(), cols.end(),
                         [&](std::size_t a, std::size_t b) { return col_less(m, rows, a, b); });
        if (rows == old_rows && cols == old_cols)
            break;
    }
    return OrderedMatrix(m, std::move(rows), std::move(cols));
}

bool is_doubly_lexical(const OrderedMatrix& om)
{
    const auto& m = om.matrix();
    const auto& rows = om.row_order();
    const auto& cols = om.col_order();
    for (std::size_t p = 0; p + 1 < rows.size(); ++p)
        if (row_less(m, cols, rows[p + 1], rows[p]))
            return false;
    for (std::size_t q = 0; q + 1 < cols.size(); ++q)
        if (col_less(m, rows, cols[q + 1], cols[q]))
            return false;
    return true;
}

namespace {

struct RowPlacer {
    std::vector<std::vector<char>> conflict; // conflict[a][b]: a above b creates a Gamma
    std::vector<char> placed;
    std::vector<std::size_t> stack;

    bool place(std::size_t depth)
    {
        if (depth == placed.size())
            return true;
        for (std::size_t r = 0; r < placed.size(); ++r) {
            if (placed[r])
                continue;
            bool ok = std::none_of(stack.begin(), stack.end(), [&](std::size_t p) { return conflict[p][r]; });
            if (!ok)
                continue;
            placed[r] = 1;
            stack.push_back(r);
            if (place(depth + 1))
                return true;
            stack.pop_back();
            placed[r] = 0;
        }
        return false;
    }
};

} // namespace

bool exists_gamma_free_ordering(const BinaryMatrix& m)
{
    if (m.rows() > 6 || m.cols() > 6)
        throw std::length_error("exhaustive Gamma-free search is limited to 6x6 matrices");
    const std::size_t r = m.rows();
    std::vector<std::size_t> cols = identity(m.cols());
    do {
        RowPlacer placer{std::vector<std::vector<char>>(r, std::vector<char>(r, 0)), std::vector<char>(r, 0), {}};
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                if (a == b)
                    continue;
                for (std::size_t j = 0; j < cols.size() && !placer.conflict[a][b]; ++j)
                    for (std::size_t k = j + 1; k < cols.size(); ++k)
                        if (m.at(a, cols[j]) && m.at(a, cols[k]) && m.at(b, cols[j]) && !m.at(b, cols[k])) {
                            placer.conflict[a][b] = 1;
                            break;
                        }
            }
        if (placer.place(0))
            return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return false;
}

OrderedMatrix gamma_free_from_chains(const BipartiteGraph& b)
{
    std::vector<Bitset> y_sets;
    for (std::size_t y = 0; y < b.y_size(); ++y)
        y_sets.push_back(b.y_neighbors(y));
    ContainmentPoset poset(y_sets);
    WidthCertificate cert = poset_width(poset);
    if (cert.width > 2)
        throw std::domain_error("Y-neighbourhoods need " + std::to_string(cert.width) +
                                " chains; at most 2 are supported");

    std::vector<std::vector<std::size_t>> chains;
    for (const auto& chain : cert.chain_cover) {
        std::vector<std::size_t> ys;
        for (auto e : chain)
            for (auto y : poset.members(e))
                ys.push_back(y);
        chains.push_back(std::move(ys));
    }
    // The chain holding y_0 goes first.
    if (chains.size() == 2 && std::find(chains[1].begin(), chains[1].end(), 0) != chains[1].end())
        std::swap(chains[0], chains[1]);

    std::vector<std::size_t> col_order;
    if (!chains.empty())
        col_order = chains[0];
    if (chains.size() == 2)
        col_order.insert(col_order.end(), chains[1].rbegin(), chains[1].rend());

    std::vector<std::size_t> position(b.y_size());
    for (std::size_t q = 0; q < col_order.size(); ++q)
        position[col_order[q]] = q;

    struct RowKey {
        bool empty;
        std::size_t last, first, x;
        auto operator<=>(const RowKey&) const = default;
    };
    std::vector<RowKey> keys;
    for (std::size_t x = 0; x < b.x_size(); ++x) {
        auto ns = b.x_neighbors(x).indices();
        if (ns.empty()) {
            keys.push_back({true, 0, 0, x});
            continue;
        }
        std::size_t lo = b.y_size(), hi = 0;
        for (auto y : ns) {
            lo = std::min(lo, position[y]);
            hi = std::max(hi, position[y]);
        }
        keys.push_back({false, hi, lo, x});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<std::size_t> row_order;
    for (const auto& k : keys)
        row_order.push_back(k.x);

    OrderedMatrix result(b.matrix(), std::move(row_order), std::move(col_order));
    if (!is_gamma_free(result))
        throw std::logic_error("chain construction produced a Gamma");
    return result;
}

std::string serialize(const OrderedMatrix& m)
{
    auto join = [](const std::vector<std::size_t>& p) {
        std::string s;
        for (auto v : p)
            s += " " + std::to_string(v);
        return s;
    };
    return "om " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\nrows:" + join(m.row_order()) +
           "\ncols:" + join(m.col_order()) + "\n" + m.matrix().to_string();
}

OrderedMatrix parse_ordered_matrix(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string s; std::getline(in, s);) {
        ++number;
        if (!s.empty() && s.back() == '\r')
            s.pop_back();
        auto pos = s.find_first_not_of(" \t");
        if (pos != std::string::npos && s[pos] == '#')
            continue;
        if (lines.empty() && pos == std::string::npos)
            continue;
        lines.emplace_back(number, s);
    }
    if (lines.size() < 3)
        throw ParseError(number, "ordered matrix needs a header, a rows line and a cols line");

    std::istringstream header(lines[0].second);
    std::string kind;
    std::size_t rows = 0, cols = 0;
    if (!(header >> kind >> rows >> cols) || kind != "om")
        throw ParseError(lines[0].first, "malformed header '" + lines[0].second + "'");

    auto read_perm = [&](std::size_t idx, const char* label, std::size_t n) {
        std::istringstream ls(lines[idx].second);
        std::string tag;
        ls >> tag;
        if (tag != label)
            throw ParseError(lines[idx].first, std::string("expected '") + label + "'");
        std::vector<std::size_t> p;
        for (std::size_t v; ls >> v;)
            p.push_back(v);
        if (!ls.eof())
            throw ParseError(lines[idx].first, "malformed permutation");
        if (p.size() != n)
            throw ParseError(lines[idx].first, "permutation has wrong length");
        return p;
    };
    auto row_order = read_perm(1, "rows:", rows);
    auto col_order = read_perm(2, "cols:", cols);

    std::string body = "bip " + std::to_string(rows) + " " + std::to_string(cols) + "\n";
    for (std::size_t i = 3; i < lines.size(); ++i)
        body += lines[i].second + "\n";
    BinaryMatrix m;
    try {
        m = parse_bipartite(body).matrix();
    } catch (const ParseError& e) {
        // Rebuilt line L >= 2 came from lines[L + 1].
        std::size_t idx = e.line() + 1;
        std::size_t line = idx < lines.size() ? lines[idx].first : number;
        std::string msg = e.what();
        throw ParseError(line, msg.substr(msg.find(": ") + 2));
    }
    try {
        return OrderedMatrix(std::move(m), std::move(row_order), std::move(col_order));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[1].first, e.what());
    }
}

} // namespace acb
