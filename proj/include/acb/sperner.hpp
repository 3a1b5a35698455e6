#pragma once

#include <acb/core.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace acb {

/// No hyperedge is contained in another; equal hyperedges count as contained.
bool is_sperner(const Hypergraph& h);

/// Sperner, and deleting any vertex from every hyperedge leaves a family
/// that is not Sperner. k is the number of hyperedges.
bool is_k_critical_sperner(const Hypergraph& h);

/// Hypergraph in incidence-column form: vertex v lies in hyperedge i iff
/// bit i of columns[v] is set.
class ColumnPatternFamily {
public:
    /// Columns must be distinct, nonempty and proper; otherwise std::invalid_argument.
    ColumnPatternFamily(std::size_t k, std::vector<std::uint32_t> columns);
    /// Throws std::invalid_argument if h has repeated, empty or full columns, or more than 31 edges.
    static ColumnPatternFamily from_hypergraph(const Hypergraph& h);

    std::size_t k() const { return k_; }
    const std::vector<std::uint32_t>& columns() const { return columns_; }
    Hypergraph to_hypergraph() const;

private:
    std::size_t k_;
    std::vector<std::uint32_t> columns_;
};

/// Canonical `hyp` serialization: equal for two hypergraphs iff they are
/// isomorphic under vertex and hyperedge relabeling. Hyperedges are first
/// grouped by (size, multiset of member degrees); the least column list over
/// all relabelings within the groups is then serialized.
std::string sperner_canonical(const Hypergraph& h);

inline constexpr std::size_t sperner_min_k = 2;
inline constexpr std::size_t sperner_max_k = 6;

struct CriticalEnumeration {
    std::size_t k = 0;
    /// Isomorphism classes under vertex and hyperedge relabeling.
    std::size_t count = 0;
    /// Classes whose mirror lies in the same class.
    std::size_t auto_mirror = 0;
    /// Families counted with hyperedge labels fixed (vertex relabeling only).
    std::size_t labelled_count = 0;
    /// One representative per class, sorted by (vertex count, canonical form).
    std::vector<Hypergraph> instances;
    /// sperner_canonical of each instance, same order.
    std::vector<std::string> canonical;
};

/// Isomorph-free enumeration of k-critical Sperner hypergraphs, 2 <= k <= 6
/// (std::out_of_range otherwise). workers == 0 picks the hardware thread
/// count; the result does not depend on it.
CriticalEnumeration enumerate_k_critical(std::size_t k, std::size_t workers = 1);

} // namespace acb
