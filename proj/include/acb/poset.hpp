#pragma once

#include <acb/bitset.hpp>

#include <cstddef>
#include <vector>

namespace acb {

/// Finite partial order given by its reflexive "less or equal" relation.
class PartialOrder {
public:
    PartialOrder() = default;
    /// up[a].test(b) iff a <= b. Caller guarantees a partial order; see is_partial_order().
    explicit PartialOrder(std::vector<Bitset> up) : up_(std::move(up)) {}

    std::size_t size() const { return up_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

    /// Reflexive, antisymmetric and transitive.
    bool is_partial_order() const;

private:
    std::vector<Bitset> up_;
};

/// Maximum antichain together with a chain partition of the same size.
struct WidthCertificate {
    std::size_t width = 0;
    std::vector<std::size_t> antichain;
    /// Each chain is listed from its minimum upwards.
    std::vector<std::vector<std::size_t>> chain_cover;
};

/// Width via minimum chain cover: maximum matching on the strict order
/// (augmenting paths), antichain read off a minimum vertex cover.
WidthCertificate poset_width(const PartialOrder& order);

/// Checks antichain incomparability, chain totality, that the chains
/// partition the elements, and |antichain| == |chains| == width.
bool is_valid_certificate(const PartialOrder& order, const WidthCertificate& cert);

/// Inclusion order on a family of sets with duplicates collapsed.
class ContainmentPoset {
public:
    explicit ContainmentPoset(const std::vector<Bitset>& sets);

    std::size_t size() const { return elements_.size(); }
    const Bitset& element(std::size_t e) const { return elements_[e]; }
    /// Indices into the original family that collapse onto element e (ascending).
    const std::vector<std::size_t>& members(std::size_t e) const { return members_[e]; }
    std::size_t multiplicity(std::size_t e) const { return members_[e].size(); }
    const PartialOrder& order() const { return order_; }

private:
    std::vector<Bitset> elements_;
    std::vector<std::vector<std::size_t>> members_;
    PartialOrder order_;
};

inline WidthCertificate poset_width(const ContainmentPoset& p) { return poset_width(p.order()); }

/// Width of a family of sets under inclusion; duplicates count once, empty family gives 0.
std::size_t family_width(const std::vector<Bitset>& sets);

} // namespace acb
