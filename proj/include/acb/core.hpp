#pragma once

#include <acb/bitset.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace acb {

/// Rectangular 0/1 matrix with rows stored as bit vectors.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    /// Builds from rows of '0'/'1' characters; all rows must share one length.
    static BinaryMatrix from_strings(std::span<const std::string> rows, std::size_t cols);
    static BinaryMatrix from_strings(std::initializer_list<const char*> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t i, std::size_t j) const { return data_[i].test(j); }
    void assign(std::size_t i, std::size_t j, bool v) { data_[i].assign(j, v); }
    const Bitset& row(std::size_t i) const { return data_[i]; }

    BinaryMatrix transposed() const;
    BinaryMatrix complemented() const;
    std::size_t ones() const;

    /// Row-major '0'/'1' text, one line per row.
    std::string to_string() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Bitset> data_;
};

enum class Side { X, Y };

inline Side other(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// B = (X, Y, E) given by its bi-adjacency matrix: row i is N(x_i), column j is N(y_j).
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t x_size, std::size_t y_size);
    explicit BipartiteGraph(BinaryMatrix adj);

    std::size_t x_size() const { return adj_.rows(); }
    std::size_t y_size() const { return adj_.cols(); }
    std::size_t size(Side s) const { return s == Side::X ? x_size() : y_size(); }
    std::size_t edge_count() const { return adj_.ones(); }

    bool has_edge(std::size_t x, std::size_t y) const { return adj_.at(x, y); }
    const Bitset& x_neighbors(std::size_t x) const { return adj_.row(x); }
    const Bitset& y_neighbors(std::size_t y) const { return cols_[y]; }
    const Bitset& neighbors(Side s, std::size_t v) const { return s == Side::X ? x_neighbors(v) : y_neighbors(v); }

    const BinaryMatrix& matrix() const { return adj_; }

    /// Same graph with the roles of X and Y exchanged.
    BipartiteGraph swapped() const { return BipartiteGraph(adj_.transposed()); }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) { return a.adj_ == b.adj_; }

private:
    BinaryMatrix adj_;
    std::vector<Bitset> cols_;
};

/// Split graph with an explicit partition: clique K, stable set I, and the K x I cross edges.
class SplitGraph {
public:
    SplitGraph() = default;
    explicit SplitGraph(BinaryMatrix cross) : cross_(std::move(cross)) {}

    std::size_t k_size() const { return cross_.rows(); }
    std::size_t i_size() const { return cross_.cols(); }
    const BinaryMatrix& cross() const { return cross_; }

    friend bool operator==(const SplitGraph&, const SplitGraph&) = default;

private:
    BinaryMatrix cross_;
};

/// Simple undirected graph.
class GeneralGraph {
public:
    GeneralGraph() = default;
    explicit GeneralGraph(std::size_t n);
    /// Validates symmetry and the zero diagonal; throws std::invalid_argument otherwise.
    explicit GeneralGraph(BinaryMatrix adj);

    std::size_t size() const { return adj_.rows(); }
    std::size_t edge_count() const { return adj_.ones() / 2; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u, v); }
    const Bitset& neighbors(std::size_t v) const { return adj_.row(v); }
    std::size_t degree(std::size_t v) const { return adj_.row(v).count(); }
    const BinaryMatrix& matrix() const { return adj_; }

    void add_edge(std::size_t u, std::size_t v);

    friend bool operator==(const GeneralGraph&, const GeneralGraph&) = default;

private:
    BinaryMatrix adj_;
};

/// H = (V, E) with V = {0..n-1} and an ordered list of hyperedges.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(std::size_t n) : n_(n) {}
    Hypergraph(std::size_t n, std::vector<Bitset> edges);
    Hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Bitset& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<Bitset>& edges() const { return edges_; }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Bitset> edges_;
};

// Transformations

BipartiteGraph mirror(const BipartiteGraph& b);
SplitGraph mirror_split(const SplitGraph& g);
/// Complements every hyperedge with respect to the vertex set.
Hypergraph mirror(const Hypergraph& h);

/// Completes the chosen side to a clique: it becomes K, the other side becomes I.
SplitGraph split_side(const BipartiteGraph& b, Side side);
/// Makes K stable: X := K, Y := I.
BipartiteGraph bip(const SplitGraph& g);

GeneralGraph complement(const GeneralGraph& g);
/// Complement of a split graph, expressed with its natural partition (old I is the new clique).
SplitGraph complement_split(const SplitGraph& g);

/// Full simple graph. Bipartite: X are vertices 0..x-1, Y follow. Split: K first, then I.
GeneralGraph to_general(const BipartiteGraph& b);
GeneralGraph to_general(const SplitGraph& g);

/// Subgraph induced by the listed vertices, in the listed order.
/// Throws std::out_of_range for a bad index and std::invalid_argument for a repeated one.
GeneralGraph induced(const GeneralGraph& g, std::span<const std::size_t> vertices);
BipartiteGraph induced(const BipartiteGraph& b, std::span<const std::size_t> xs, std::span<const std::size_t> ys);

/// b with one vertex deleted.
BipartiteGraph delete_vertex(const BipartiteGraph& b, Side side, std::size_t v);

} // namespace acb
