#include "oracles.hpp"

#include <acb/cli.hpp>
#include <acb/dilworth.hpp>
#include <acb/generators.hpp>
#include <acb/isomorphism.hpp>
#include <acb/ordering.hpp>
#include <acb/poset.hpp>
#include <acb/recognition.hpp>
#include <acb/sperner.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace acb;

namespace {

void oriented(std::size_t x, std::size_t y, const std::function<void(const BipartiteGraph&)>& fn)
{
    for (const auto& b : enumerate_bipartite(x, y)) {
        fn(b);
        if (x == y && !iso_bipartite(b, b.swapped(), false))
            fn(b.swapped());
    }
}

void sweep(std::size_t max_x, std::size_t max_y, const std::function<void(const BipartiteGraph&)>& fn)
{
    for (std::size_t x = 0; x <= max_x; ++x)
        for (std::size_t y = 0; y <= max_y; ++y)
            oriented(x, y, fn);
}

// Every bipartite graph with |X| <= a, |Y| <= b, plus every graph with the sides exchanged.
void sweep_both(std::size_t a, std::size_t b, const std::function<void(const BipartiteGraph&)>& fn)
{
    for (std::size_t x = 0; x <= std::max(a, b); ++x)
        for (std::size_t y = 0; y <= std::max(a, b); ++y)
            if ((x <= a && y <= b) || (x <= b && y <= a))
                oriented(x, y, fn);
}

std::vector<std::vector<int>> side_sets(const BipartiteGraph& b, Side s)
{
    std::vector<std::vector<int>> out;
    const std::size_t n = s == Side::X ? b.x_size() : b.y_size();
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> l;
        for (auto u : (s == Side::X ? b.x_neighbors(v) : b.y_neighbors(v)).indices())
            l.push_back(static_cast<int>(u));
        out.push_back(l);
    }
    return out;
}

std::size_t oracle_x(const BipartiteGraph& b) { return oracle::family_width(side_sets(b, Side::X)); }
std::size_t oracle_y(const BipartiteGraph& b) { return oracle::family_width(side_sets(b, Side::Y)); }

bool oracle_acb(const BipartiteGraph& b)
{
    auto a = oracle::adjacency(b);
    for (const auto& f : {gen_matching(3), gen_even_cycle(3), gen_even_cycle(4)})
        if (oracle::has_induced(a, oracle::adjacency(f)))
            return false;
    return true;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome sperner_counts()
{
    auto start = std::chrono::steady_clock::now();
    CriticalEnumeration four = enumerate_k_critical(4);
    CriticalEnumeration five = enumerate_k_critical(5, 0);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << "k=4 " << four.count << " (auto_mirror " << four.auto_mirror << "), k=5 " << five.count << ", " << secs
      << "s";
    return {four.count == 15 && four.auto_mirror == 5 && five.count == 178, d.str()};
}

Outcome family_suite()
{
    std::size_t checks = 0, bad = 0;
    auto check = [&](bool ok) {
        ++checks;
        bad += !ok;
    };
    for (int k = 2; k <= 6; ++k) {
        const std::size_t K = static_cast<std::size_t>(k);
        BipartiteGraph d = gen_Dk(k);
        check(is_acb(d));
        check(x_dilworth(d) == K && y_dilworth(d) == K && bip_dilworth(d) == K);
        check(oracle_x(d) == K && oracle_y(d) == K);
        for (int l = 2; l < k; ++l) {
            BipartiteGraph e = gen_Dkl(k, l);
            check(is_acb(e));
            check(x_dilworth(e) == K && y_dilworth(e) == static_cast<std::size_t>(l));
            check(oracle_x(e) == K && oracle_y(e) == static_cast<std::size_t>(l));
        }
        BipartiteGraph b = gen_Bk(k);
        check(is_acb(b));
        check(x_dilworth(b) == K && y_dilworth(b) == 2);
        check(oracle_x(b) == K && oracle_y(b) == 2);
        check(is_k_critical_acb(b, K));
    }
    check(oracle_acb(gen_Dk(3)) && oracle_acb(gen_Bk(4)) && oracle_acb(gen_Dkl(4, 2)));
    return {bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " checks"};
}

Outcome critical_small()
{
    const BipartiteGraph k2 = gen_matching(2), b3 = gen_Bk(3);
    std::size_t two = 0, three = 0;
    bool only = true;
    sweep_both(3, 4, [&](const BipartiteGraph& b) {
        if (!is_acb(b))
            return;
        if (is_k_critical_acb(b, 2)) {
            ++two;
            only = only && iso_bipartite(b, k2, true) &&
                   oracle::isomorphic(oracle::adjacency(b), oracle::adjacency(k2));
        }
        if (is_k_critical_acb(b, 3)) {
            ++three;
            only = only && iso_bipartite(b, b3, true) &&
                   oracle::isomorphic(oracle::adjacency(b), oracle::adjacency(b3));
        }
    });
    return {only && two > 0 && three > 0,
            "k=2 hits " + std::to_string(two) + ", k=3 hits " + std::to_string(three) + ", all isomorphic to 2K2/B3"};
}

bool leq_agrees(const BipartiteGraph& b, bool with_oracle)
{
    const std::size_t width = bip_dilworth(b);
    for (std::size_t k = 1; k <= width + 1; ++k) {
        const bool leq = acb_dilworth_leq(b, k);
        if ((width <= k) != leq)
            return false;
        if (with_oracle &&
            leq == oracle::has_induced(oracle::adjacency(b), oracle::adjacency(gen_Bk(static_cast<int>(k) + 1))))
            return false;
    }
    return true;
}

Outcome dilworth_leq()
{
    std::size_t graphs = 0, agree = 0;
    sweep_both(3, 4, [&](const BipartiteGraph& b) {
        if (!is_acb(b))
            return;
        ++graphs;
        agree += leq_agrees(b, true);
    });
    for (int k = 2; k <= 6; ++k) {
        graphs += 2;
        agree += leq_agrees(gen_Dk(k), false);
        agree += leq_agrees(gen_Bk(k), false);
        for (int l = 2; l < k; ++l) {
            ++graphs;
            agree += leq_agrees(gen_Dkl(k, l), false);
        }
    }
    return {agree == graphs, std::to_string(agree) + "/" + std::to_string(graphs) + " graphs"};
}

Outcome acb_routes()
{
    std::size_t graphs = 0, agree = 0;
    sweep(4, 4, [&](const BipartiteGraph& b) {
        ++graphs;
        const bool two = is_acb(b);
        const bool three = !find_induced(b, patterns::three_k2(), false) && is_chordal_bipartite(b);
        const GeneralGraph sx = to_general(split_side(b, Side::X));
        const bool four = is_strongly_chordal(sx) && is_strongly_chordal(complement(sx));
        agree += two == three && three == four && four == oracle_acb(b);
    });
    return {agree == graphs, std::to_string(agree) + "/" + std::to_string(graphs) + " graphs"};
}

Outcome gamma_routes()
{
    std::size_t graphs = 0, agree = 0;
    sweep(4, 4, [&](const BipartiteGraph& b) {
        ++graphs;
        const bool dlo = is_chordal_bipartite(b);
        const bool exhaustive = exists_gamma_free_ordering(b.matrix());
        const bool no_hole = !find_induced_even_hole(b);
        const bool brute = oracle::gamma_free_by_permutations(b.matrix());
        const bool brute_hole = !oracle::has_induced_cycle(oracle::adjacency(b), 6);
        agree += dlo == exhaustive && exhaustive == no_hole && no_hole == brute && brute == brute_hole;
    });
    return {agree == graphs, std::to_string(agree) + "/" + std::to_string(graphs) + " graphs"};
}

Outcome yp7_matrix()
{
    const std::vector<std::string> shapes = {"1100\n0110\n0011\n", "0011\n0110\n1100\n"};
    auto matches = [&](const std::string& body) {
        for (const auto& s : shapes)
            if (body == s)
                return true;
        return false;
    };
    std::ostringstream out;
    cli::run_matrix(gen_y_p7(), out);
    const std::string report = out.str();
    auto start = report.find("\n", report.find("cols:")) + 1;
    auto end = report.find("gamma:");
    const bool cli_ok = matches(report.substr(start, end - start)) && report.ends_with("gamma: free\n");

    OrderedMatrix chains = gamma_free_from_chains(gen_y_p7());
    BinaryMatrix p = chains.permuted();
    std::string body;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j)
            body += p.at(i, j) ? '1' : '0';
        body += '\n';
    }
    const bool chains_ok = is_gamma_free(chains) && matches(body);
    return {cli_ok && chains_ok, std::string("run_matrix ") + (cli_ok ? "ok" : "bad") + ", chains " +
                                     (chains_ok ? "ok" : "bad")};
}

Outcome mirror_catalog()
{
    const BipartiteGraph c6 = gen_even_cycle(3), c8 = gen_even_cycle(4), k2 = gen_matching(2), k3 = gen_matching(3);
    auto same = [](const GeneralGraph& a, const GeneralGraph& b) {
        return iso_general(a, b) && oracle::isomorphic(oracle::adjacency(a), oracle::adjacency(b));
    };
    auto bip_same = [&](const BipartiteGraph& a, const BipartiteGraph& b) {
        return iso_bipartite(a, b, true) && same(to_general(a), to_general(b));
    };
    auto split_same = [&](const SplitGraph& a, const SplitGraph& b) {
        return iso_split(a, b) && same(to_general(a), to_general(b));
    };
    const bool checks[] = {
        bip_same(mirror(c6), k3),
        bip_same(mirror(c8), c8),
        bip_same(mirror(k2), k2),
        bip_same(mirror(k3), c6),
        split_same(split_side(c6, Side::X), gen_sun(3)),
        split_same(split_side(c8, Side::X), gen_sun(4)),
        same(to_general(split_side(k2, Side::X)), gen_path_graph(4)),
        split_same(split_side(k3, Side::X), gen_net()),
        split_same(mirror_split(gen_sun(3)), gen_net()),
        split_same(mirror_split(gen_sun(4)), gen_sun(4)),
    };
    std::size_t ok = 0;
    for (bool c : checks)
        ok += c;
    return {ok == std::size(checks), std::to_string(ok) + "/" + std::to_string(std::size(checks)) + " isomorphisms"};
}

Outcome interval_routes()
{
    std::size_t graphs = 0, agree = 0;
    sweep(4, 4, [&](const BipartiteGraph& b) {
        ++graphs;
        const SplitGraph s = split_side(b, Side::X);
        const bool interval = is_interval_split(s);
        const bool narrow = i_dilworth(s) <= 2;
        const bool free = !find_induced(b, patterns::three_k2(), false) && !find_induced(b, patterns::c6(), false) &&
                          !find_induced(b, patterns::x_p7(), true);
        std::vector<std::vector<int>> i_sets = side_sets(b, Side::Y);
        const bool narrow_oracle = oracle::family_width(i_sets) <= 2;
        agree += interval == narrow && narrow == free && free == narrow_oracle;
    });
    return {agree == graphs, std::to_string(agree) + "/" + std::to_string(graphs) + " split graphs"};
}

Outcome properties()
{
    std::size_t violations = 0;
    for (unsigned seed = 0; seed < 1000; ++seed) {
        std::mt19937 rng(seed);
        const std::size_t n = 1 + rng() % 15;
        std::vector<std::vector<int>> leq(n, std::vector<int>(n, 0));
        std::bernoulli_distribution coin(0.1 + 0.4 * (seed % 5) / 4.0);
        for (std::size_t a = 0; a < n; ++a) {
            leq[a][a] = 1;
            for (std::size_t b = a + 1; b < n; ++b)
                leq[a][b] = coin(rng);
        }
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (leq[a][m] && leq[m][b])
                        leq[a][b] = 1;
        std::vector<Bitset> up(n, Bitset(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                up[a].assign(b, leq[a][b]);
        PartialOrder order(up);
        WidthCertificate cert = poset_width(order);
        violations += !is_valid_certificate(order, cert) || cert.width != oracle::max_antichain(leq);
    }
    for (unsigned seed = 0; seed < 1000; ++seed) {
        std::mt19937 rng(seed);
        const std::size_t n = 1 + rng() % 8;
        GeneralGraph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (seed % 4) / 3.0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (vicinal_leq(g, a, b) && vicinal_leq(g, b, c) && !vicinal_leq(g, a, c))
                        ++violations;
        const std::size_t w = graph_dilworth(g);
        violations += w != graph_dilworth(complement(g)) || w != oracle::vicinal_width(oracle::adjacency(g));
    }
    for (unsigned seed = 0; seed < 1000; ++seed) {
        std::mt19937 rng(seed);
        const std::size_t n = rng() % 9, m = rng() % 9;
        std::vector<Bitset> edges;
        std::vector<std::vector<int>> lists;
        for (std::size_t e = 0; e < m; ++e) {
            Bitset b(n);
            std::vector<int> l;
            for (std::size_t v = 0; v < n; ++v)
                if (rng() % 2) {
                    b.set(v);
                    l.push_back(static_cast<int>(v));
                }
            edges.push_back(b);
            lists.push_back(l);
        }
        Hypergraph h(n, edges);
        const std::size_t w = hypergraph_dilworth(h);
        violations += w != hypergraph_dilworth(mirror(h)) || w != oracle::family_width(lists);
    }
    return {violations == 0, std::to_string(violations) + " violations over 3000 seeds"};
}

} // namespace

int main()
{
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"sperner golden counts", sperner_counts},
        {"extremal families", family_suite},
        {"small critical graphs", critical_small},
        {"dilworth bound vs B_{k+1}-freeness", dilworth_leq},
        {"acb characterizations", acb_routes},
        {"gamma-free routes", gamma_routes},
        {"Y-P7 ordered matrix", yp7_matrix},
        {"mirror and split catalog", mirror_catalog},
        {"interval split routes", interval_routes},
        {"random property suites", properties},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.detail << "\n";
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
