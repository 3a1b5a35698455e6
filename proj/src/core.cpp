#include <acb/core.hpp>

#include <stdexcept>

namespace acb {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Bitset(cols))
{
}

BinaryMatrix BinaryMatrix::from_strings(std::span<const std::string> rows, std::size_t cols)
{
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = 0; j < cols; ++j) {
            char c = rows[i][j];
            if (c != '0' && c != '1')
                throw std::invalid_argument("row " + std::to_string(i + 1) + " has a non-binary character");
            m.assign(i, j, c == '1');
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(std::initializer_list<const char*> rows)
{
    std::vector<std::string> lines(rows.begin(), rows.end());
    return from_strings(lines, lines.empty() ? 0 : lines.front().size());
}

BinaryMatrix BinaryMatrix::transposed() const
{
    BinaryMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = data_[i].find_first(); j < cols_; j = data_[i].find_next(j + 1))
            t.data_[j].set(i);
    return t;
}

BinaryMatrix BinaryMatrix::complemented() const
{
    BinaryMatrix c = *this;
    for (auto& r : c.data_)
        r.flip_all();
    return c;
}

std::size_t BinaryMatrix::ones() const
{
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.count();
    return n;
}

std::string BinaryMatrix::to_string() const
{
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            out.push_back(at(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BipartiteGraph::BipartiteGraph(std::size_t x_size, std::size_t y_size)
    : BipartiteGraph(BinaryMatrix(x_size, y_size))
{
}

BipartiteGraph::BipartiteGraph(BinaryMatrix adj) : adj_(std::move(adj))
{
    BinaryMatrix t = adj_.transposed();
    cols_.reserve(t.rows());
    for (std::size_t j = 0; j < t.rows(); ++j)
        cols_.push_back(t.row(j));
}

GeneralGraph::GeneralGraph(std::size_t n) : adj_(n, n) {}

GeneralGraph::GeneralGraph(BinaryMatrix adj) : adj_(std::move(adj))
{
    if (adj_.rows() != adj_.cols())
        throw std::invalid_argument("adjacency matrix is not square");
    for (std::size_t i = 0; i < adj_.rows(); ++i) {
        if (adj_.at(i, i))
            throw std::invalid_argument("nonzero diagonal at vertex " + std::to_string(i));
        for (std::size_t j = i + 1; j < adj_.cols(); ++j)
            if (adj_.at(i, j) != adj_.at(j, i))
                throw std::invalid_argument("adjacency matrix is not symmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
    }
}

void GeneralGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= size() || v >= size())
        throw std::out_of_range("vertex index out of range");
    if (u == v)
        throw std::invalid_argument("self-loop");
    adj_.assign(u, v, true);
    adj_.assign(v, u, true);
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Bitset> edges) : n_(n), edges_(std::move(edges))
{
    for (const auto& e : edges_)
        if (e.size() != n_)
            throw std::invalid_argument("hyperedge universe does not match vertex count");
}

Hypergraph::Hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) : n_(n)
{
    for (const auto& e : edges) {
        Bitset s(n);
        for (auto v : e) {
            if (v >= n)
                throw std::out_of_range("hyperedge vertex " + std::to_string(v) + " out of range");
            s.set(v);
        }
        edges_.push_back(std::move(s));
    }
}

BipartiteGraph mirror(const BipartiteGraph& b) { return BipartiteGraph(b.matrix().complemented()); }

SplitGraph mirror_split(const SplitGraph& g) { return SplitGraph(g.cross().complemented()); }

Hypergraph mirror(const Hypergraph& h)
{
    std::vector<Bitset> edges = h.edges();
    for (auto& e : edges)
        e.flip_all();
    return Hypergraph(h.vertex_count(), std::move(edges));
}

SplitGraph split_side(const BipartiteGraph& b, Side side)
{
    return SplitGraph(side == Side::X ? b.matrix() : b.matrix().transposed());
}

BipartiteGraph bip(const SplitGraph& g) { return BipartiteGraph(g.cross()); }

GeneralGraph complement(const GeneralGraph& g)
{
    BinaryMatrix m = g.matrix().complemented();
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.assign(i, i, false);
    return GeneralGraph(std::move(m));
}

SplitGraph complement_split(const SplitGraph& g) { return SplitGraph(g.cross().complemented().transposed()); }

GeneralGraph to_general(const BipartiteGraph& b)
{
    const std::size_t nx = b.x_size();
    GeneralGraph g(nx + b.y_size());
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y : b.x_neighbors(x).indices())
            g.add_edge(x, nx + y);
    return g;
}

GeneralGraph to_general(const SplitGraph& s)
{
    const std::size_t nk = s.k_size();
    GeneralGraph g(nk + s.i_size());
    for (std::size_t u = 0; u < nk; ++u) {
        for (std::size_t v = u + 1; v < nk; ++v)
            g.add_edge(u, v);
        for (std::size_t i : s.cross().row(u).indices())
            g.add_edge(u, nk + i);
    }
    return g;
}

namespace {

void check_subset(std::span<const std::size_t> vs, std::size_t limit)
{
    Bitset seen(limit);
    for (auto v : vs) {
        if (v >= limit)
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
        if (seen.test(v))
            throw std::invalid_argument("vertex index " + std::to_string(v) + " repeated");
        seen.set(v);
    }
}

} // namespace

GeneralGraph induced(const GeneralGraph& g, std::span<const std::size_t> vertices)
{
    check_subset(vertices, g.size());
    GeneralGraph h(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t c = a + 1; c < vertices.size(); ++c)
            if (g.adjacent(vertices[a], vertices[c]))
                h.add_edge(a, c);
    return h;
}

BipartiteGraph induced(const BipartiteGraph& b, std::span<const std::size_t> xs, std::span<const std::size_t> ys)
{
    check_subset(xs, b.x_size());
    check_subset(ys, b.y_size());
    BinaryMatrix m(xs.size(), ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
            m.assign(i, j, b.has_edge(xs[i], ys[j]));
    return BipartiteGraph(std::move(m));
}

BipartiteGraph delete_vertex(const BipartiteGraph& b, Side side, std::size_t v)
{
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < b.x_size(); ++i)
        if (side != Side::X || i != v)
            xs.push_back(i);
    for (std::size_t j = 0; j < b.y_size(); ++j)
        if (side != Side::Y || j != v)
            ys.push_back(j);
    return induced(b, xs, ys);
}

} // namespace acb
