#include <acb/poset.hpp>

#include <algorithm>

namespace acb {

bool PartialOrder::is_partial_order() const
{
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        if (up_[a].size() != n || !leq(a, a))
            return false;
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq(a, b) && leq(b, a))
                return false;
            if (leq(a, b) && !up_[b].is_subset_of(up_[a]))
                return false;
        }
    }
    return true;
}

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

struct Matching {
    const PartialOrder& order;
    std::vector<std::size_t> right_of; // left u -> right v
    std::vector<std::size_t> left_of;  // right v -> left u
    std::vector<char> visited;

    bool augment(std::size_t u)
    {
        for (std::size_t v = 0; v < order.size(); ++v) {
            if (!order.less(u, v) || visited[v])
                continue;
            visited[v] = 1;
            if (left_of[v] == none || augment(left_of[v])) {
                right_of[u] = v;
                left_of[v] = u;
                return true;
            }
        }
        return false;
    }
};

} // namespace

WidthCertificate poset_width(const PartialOrder& order)
{
    const std::size_t n = order.size();
    Matching m{order, std::vector<std::size_t>(n, none), std::vector<std::size_t>(n, none), {}};
    std::size_t matched = 0;
    for (std::size_t u = 0; u < n; ++u) {
        m.visited.assign(n, 0);
        if (m.augment(u))
            ++matched;
    }

    WidthCertificate cert;
    cert.width = n - matched;

    for (std::size_t head = 0; head < n; ++head) {
        if (m.left_of[head] != none)
            continue;
        std::vector<std::size_t> chain;
        for (std::size_t u = head; u != none; u = m.right_of[u])
            chain.push_back(u);
        cert.chain_cover.push_back(std::move(chain));
    }

    // Koenig: alternating reachability from unmatched left vertices.
    std::vector<char> left_reached(n, 0), right_reached(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < n; ++u)
        if (m.right_of[u] == none) {
            left_reached[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (!order.less(u, v) || right_reached[v] || m.right_of[u] == v)
                continue;
            right_reached[v] = 1;
            std::size_t w = m.left_of[v];
            if (w != none && !left_reached[w]) {
                left_reached[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u)
        if (left_reached[u] && !right_reached[u])
            cert.antichain.push_back(u);
    return cert;
}

bool is_valid_certificate(const PartialOrder& order, const WidthCertificate& cert)
{
    const std::size_t n = order.size();
    if (cert.antichain.size() != cert.width || cert.chain_cover.size() != cert.width)
        return false;
    for (std::size_t a = 0; a < cert.antichain.size(); ++a)
        for (std::size_t b = a + 1; b < cert.antichain.size(); ++b)
            if (order.comparable(cert.antichain[a], cert.antichain[b]))
                return false;
    std::vector<int> seen(n, 0);
    for (const auto& chain : cert.chain_cover) {
        for (std::size_t a = 0; a < chain.size(); ++a) {
            if (chain[a] >= n)
                return false;
            ++seen[chain[a]];
            if (a + 1 < chain.size() && !order.less(chain[a], chain[a + 1]))
                return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

ContainmentPoset::ContainmentPoset(const std::vector<Bitset>& sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto it = std::find(elements_.begin(), elements_.end(), sets[i]);
        if (it == elements_.end()) {
            elements_.push_back(sets[i]);
            members_.push_back({i});
        } else {
            members_[static_cast<std::size_t>(it - elements_.begin())].push_back(i);
        }
    }
    const std::size_t n = elements_.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (elements_[a].is_subset_of(elements_[b]))
                up[a].set(b);
    order_ = PartialOrder(std::move(up));
}

std::size_t family_width(const std::vector<Bitset>& sets) { return poset_width(ContainmentPoset(sets)).width; }

} // namespace acb
