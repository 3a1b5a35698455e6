#pragma once

#include <acb/core.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acb {

/// A 0/1 matrix viewed through a row permutation and a column permutation.
/// Position p of the view shows original row row_order()[p].
class OrderedMatrix {
public:
    OrderedMatrix() = default;
    /// Identity orders.
    explicit OrderedMatrix(BinaryMatrix matrix);
    /// Throws std::invalid_argument unless both orders are permutations of the right length.
    OrderedMatrix(BinaryMatrix matrix, std::vector<std::size_t> row_order, std::vector<std::size_t> col_order);

    const BinaryMatrix& matrix() const { return matrix_; }
    const std::vector<std::size_t>& row_order() const { return row_order_; }
    const std::vector<std::size_t>& col_order() const { return col_order_; }
    std::size_t rows() const { return matrix_.rows(); }
    std::size_t cols() const { return matrix_.cols(); }

    /// Entry at permuted position (p, q).
    bool at(std::size_t p, std::size_t q) const { return matrix_.at(row_order_[p], col_order_[q]); }
    BinaryMatrix permuted() const;

    friend bool operator==(const OrderedMatrix&, const OrderedMatrix&) = default;

private:
    BinaryMatrix matrix_;
    std::vector<std::size_t> row_order_;
    std::vector<std::size_t> col_order_;
};

/// Permuted coordinates of a Gamma: rows top < bottom, columns left < right,
/// ones at (top,left), (top,right), (bottom,left) and a zero at (bottom,right).
struct GammaWitness {
    std::size_t top, bottom, left, right;
    friend bool operator==(const GammaWitness&, const GammaWitness&) = default;
};

/// The lexicographically first Gamma (by top, bottom, left, right), if any.
std::optional<GammaWitness> find_gamma(const OrderedMatrix& m);
inline bool is_gamma_free(const OrderedMatrix& m) { return !find_gamma(m).has_value(); }

/// Doubly lexical ordering. Convention: a row is read with the LAST column of
/// the current column order as most significant digit, and rows appear in
/// non-decreasing order; columns likewise with the last row most significant.
/// Computed by alternating stable sorts until a fixpoint.
OrderedMatrix doubly_lexical_order(const BinaryMatrix& m);
bool is_doubly_lexical(const OrderedMatrix& m);

/// Exhaustive search over column permutations with row placement by
/// backtracking. Throws std::length_error beyond 6 rows or 6 columns.
bool exists_gamma_free_ordering(const BinaryMatrix& m);

/// Gamma-free ordering of b's bi-adjacency built from a cover of the
/// Y-neighbourhoods by two containment chains: the first chain ascending, the
/// second descending, then X by the last and first neighbour position.
/// Throws std::domain_error when the Y-neighbourhoods need more than two chains.
OrderedMatrix gamma_free_from_chains(const BipartiteGraph& b);

/// "om <rows> <cols>", "rows: <perm>", "cols: <perm>", then the unpermuted rows.
std::string serialize(const OrderedMatrix& m);
OrderedMatrix parse_ordered_matrix(std::string_view text);

} // namespace acb
