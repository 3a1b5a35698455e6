#include <doctest.h>

#include "oracles.hpp"

#include <acb/dilworth.hpp>
#include <acb/generators.hpp>
#include <acb/isomorphism.hpp>
#include <acb/recognition.hpp>
#include <acb/verify.hpp>

#include <random>

using namespace acb;

namespace {

bool sun_free_by_oracle(const GeneralGraph& g)
{
    auto a = oracle::adjacency(g);
    for (std::size_t k = 3; 2 * k <= g.size(); ++k)
        if (oracle::has_induced(a, oracle::adjacency(to_general(gen_sun(static_cast<int>(k))))))
            return false;
    return true;
}

SplitGraph random_split(std::mt19937& rng, std::size_t k, std::size_t i, double p)
{
    return SplitGraph(oracle::random_bipartite(rng, k, i, p).matrix());
}

} // namespace

TEST_CASE("pattern catalog")
{
    CHECK(iso_general(patterns::g_c4(), to_general(gen_even_cycle(2))));
    CHECK(iso_general(to_general(patterns::p7()), gen_path_graph(7)));
    GeneralGraph s4 = to_general(gen_sun(4));
    std::vector<std::size_t> keep = {0, 1, 2, 3, 4, 5, 6};
    CHECK(iso_general(patterns::g_rising_sun(), induced(s4, keep)));
    CHECK(iso_general(patterns::g_co_rising_sun(), complement(patterns::g_rising_sun())));
    CHECK(iso_general(patterns::g_net(), complement(patterns::g_s3())));
    CHECK(patterns::x_p7().x_size() == 4);
    CHECK(patterns::y_p7().y_size() == 4);
}

TEST_CASE("find_induced examples")
{
    CHECK(find_induced(gen_cycle_graph(8), gen_path_graph(7)).has_value());
    CHECK_FALSE(find_induced(gen_Dk(5), gen_matching(3), false));
    CHECK(find_induced(gen_Bk(4), gen_Bk(3), false).has_value());
}

TEST_CASE("find_induced witnesses verify themselves and agree with brute force")
{
    std::mt19937 rng(31);
    const std::vector<const GeneralGraph*> pats = {&patterns::g_2k2(), &patterns::g_c4(), &patterns::g_c5(),
                                                   &patterns::g_p4(), &patterns::g_s3(), &patterns::g_net()};
    for (int t = 0; t < 300; ++t) {
        GeneralGraph host = oracle::random_graph(rng, 4 + rng() % 5, 0.5);
        for (const GeneralGraph* p : pats) {
            auto e = find_induced(host, *p);
            CHECK(e.has_value() == oracle::has_induced(oracle::adjacency(host), oracle::adjacency(*p)));
            if (e)
                CHECK(induced(host, *e) == *p);
        }
    }
    for (int t = 0; t < 300; ++t) {
        BipartiteGraph host = oracle::random_bipartite(rng, 2 + rng() % 4, 2 + rng() % 4, 0.5);
        for (const BipartiteGraph* p : {&patterns::two_k2(), &patterns::three_k2(), &patterns::c6(),
                                        &patterns::x_p7(), &patterns::y_p7()}) {
            auto e = find_induced(host, *p, true);
            std::vector<int> hc(host.x_size(), 0), pc(p->x_size(), 0);
            hc.resize(host.x_size() + host.y_size(), 1);
            pc.resize(p->x_size() + p->y_size(), 1);
            CHECK(e.has_value() ==
                  oracle::has_induced_colored(oracle::adjacency(host), hc, oracle::adjacency(*p), pc));
            if (e) {
                auto [xs, ys] = split_image(host, *e);
                CHECK(induced(host, xs, ys) == *p);
            }
            CHECK(find_induced(host, *p, false).has_value() ==
                  oracle::has_induced(oracle::adjacency(host), oracle::adjacency(*p)));
        }
    }
}

TEST_CASE("chain graphs")
{
    CHECK_FALSE(is_chain(gen_matching(2)));
    CHECK(is_chain(BipartiteGraph(BinaryMatrix::from_strings({"111", "111", "111"}))));
    for (std::size_t x = 0; x <= 3; ++x)
        for (std::size_t y = 0; y <= 3; ++y)
            for_each_oriented(x, y, [](const BipartiteGraph& b) {
                CHECK(is_chain(b) == (x_dilworth(b) <= 1 && y_dilworth(b) <= 1));
            });
}

TEST_CASE("chordal graphs")
{
    CHECK_FALSE(is_chordal(gen_cycle_graph(4)));
    CHECK(is_chordal(gen_complete_graph(4)));
    CHECK(is_chordal(to_general(split_side(gen_even_cycle(3), Side::X))));
    CHECK_FALSE(oracle::has_induced_cycle(oracle::adjacency(to_general(gen_sun(3))), 4));
    std::mt19937 rng(32);
    for (int t = 0; t < 400; ++t) {
        GeneralGraph g = oracle::random_graph(rng, rng() % 11, 0.3 + 0.1 * (t % 5));
        CHECK(is_chordal(g) == !oracle::has_induced_cycle(oracle::adjacency(g), 4));
    }
}

TEST_CASE("chordal bipartite graphs")
{
    CHECK_FALSE(is_chordal_bipartite(gen_even_cycle(3)));
    CHECK(is_chordal_bipartite(gen_path(7)));
    CHECK(is_chordal_bipartite(gen_Dk(5)));
    std::mt19937 rng(33);
    for (int t = 0; t < 400; ++t) {
        BipartiteGraph b = oracle::random_bipartite(rng, rng() % 6, rng() % 6, 0.5);
        bool brute = !oracle::has_induced_cycle(oracle::adjacency(b), 6);
        CHECK(is_chordal_bipartite(b) == brute);
        CHECK(find_induced_even_hole(b).has_value() == !brute);
    }
}

TEST_CASE("strongly chordal graphs")
{
    CHECK_FALSE(is_strongly_chordal(to_general(gen_sun(3))));
    CHECK(is_strongly_chordal(gen_complete_graph(3)));
    CHECK(is_strongly_chordal(to_general(split_side(gen_Bk(3), Side::X))));
    CHECK(is_strongly_chordal(split_side(gen_Bk(3), Side::X)));

    std::mt19937 rng(34);
    for (int t = 0; t < 300; ++t) {
        SplitGraph s = random_split(rng, rng() % 5, rng() % 5, 0.5);
        GeneralGraph g = to_general(s);
        CHECK(is_strongly_chordal(s) == is_strongly_chordal(g));
        CHECK(is_strongly_chordal(g) == (is_chordal(g) && sun_free_by_oracle(g)));
    }
    for (int t = 0; t < 200; ++t) {
        GeneralGraph g = oracle::random_graph(rng, rng() % 9, 0.6);
        CHECK(is_strongly_chordal(g) == (is_chordal(g) && sun_free_by_oracle(g)));
    }
}

TEST_CASE("strongly chordal beyond the sun search bound")
{
    SplitGraph big = split_side(gen_Bk(14), Side::X);
    REQUIRE(to_general(big).size() > sun_search_limit);
    CHECK(is_strongly_chordal(to_general(big)));
    SplitGraph sun = gen_sun(13);
    CHECK_FALSE(is_strongly_chordal(to_general(sun)));
    CHECK_THROWS_AS(is_strongly_chordal(gen_cycle_graph(30)), std::length_error);
}

TEST_CASE("acb examples and alternative routes")
{
    CHECK_FALSE(is_acb(gen_even_cycle(4)));
    CHECK(is_acb(gen_matching(2)));
    CHECK(is_acb(gen_Dk(5)));
    std::mt19937 rng(35);
    for (int t = 0; t < 300; ++t) {
        BipartiteGraph b = oracle::random_bipartite(rng, rng() % 6, rng() % 6, 0.5);
        bool acb = is_acb(b);
        CHECK(acb == is_acb(mirror(b)));
        CHECK(acb == (!find_induced(b, patterns::three_k2(), false) && is_chordal_bipartite(b)));
        GeneralGraph sx = to_general(split_side(b, Side::X));
        CHECK(acb == (is_strongly_chordal(sx) && is_strongly_chordal(complement(sx))));
    }
}

TEST_CASE("acb, split and interval sweeps up to 4+4")
{
    for (std::size_t x = 0; x <= 4; ++x)
        for (std::size_t y = 0; y <= 4; ++y)
            for_each_oriented(x, y, [](const BipartiteGraph& b) {
                const bool acb = is_acb(b);
                CHECK(acb == is_auto_strongly_chordal(to_general(split_side(b, Side::X))));
                const SplitGraph sx = split_side(b, Side::X), sy = split_side(b, Side::Y);
                const bool pattern_free = !find_induced(b, patterns::three_k2(), false) &&
                                          !find_induced(b, patterns::c6(), false) &&
                                          !find_induced(b, patterns::x_p7(), true);
                CHECK(is_interval_split(sx) == pattern_free);
                CHECK(is_interval_split(sx) == (y_dilworth(b) <= 2));
                if (acb)
                    CHECK((is_interval_split(sx) && is_interval_split(sy)) ==
                          !find_induced(b, patterns::p7(), false));
            });
}

TEST_CASE("split recognition")
{
    CHECK_FALSE(is_split(gen_cycle_graph(5)));
    auto part = split_partition(gen_path_graph(4));
    REQUIRE(part.has_value());
    CHECK(part->first == std::vector<std::size_t>{1, 2});
    GeneralGraph k3_plus(4);
    k3_plus.add_edge(0, 1);
    k3_plus.add_edge(1, 2);
    k3_plus.add_edge(0, 2);
    CHECK(is_split(k3_plus).has_value());

    std::mt19937 rng(36);
    for (int t = 0; t < 600; ++t) {
        const std::size_t n = rng() % 15;
        GeneralGraph g = t % 2 ? oracle::random_graph(rng, n, 0.5)
                               : to_general(random_split(rng, n / 2, n - n / 2, 0.5));
        auto p = split_partition(g);
        CHECK(p.has_value() == oracle::is_split(oracle::adjacency(g)));
        if (!p)
            continue;
        for (auto a : p->first)
            for (auto b : p->first)
                CHECK((a == b || g.adjacent(a, b)));
        for (auto a : p->second)
            for (auto b : p->second)
                CHECK_FALSE(g.adjacent(a, b));
        CHECK(p->first.size() + p->second.size() == n);
    }
}

TEST_CASE("threshold split graphs")
{
    CHECK_FALSE(is_threshold_split(SplitGraph(BinaryMatrix::from_strings({"10", "01"}))));
    CHECK(is_threshold_split(SplitGraph(BinaryMatrix::from_strings({"111"}))));
    CHECK(is_threshold_split(SplitGraph(BinaryMatrix(1, 0))));
    std::mt19937 rng(37);
    for (int t = 0; t < 300; ++t) {
        SplitGraph s = random_split(rng, rng() % 5, rng() % 5, 0.5);
        auto a = oracle::adjacency(to_general(s));
        bool forbidden = oracle::has_induced(a, oracle::adjacency(patterns::g_2k2())) ||
                         oracle::has_induced(a, oracle::adjacency(patterns::g_c4())) ||
                         oracle::has_induced(a, oracle::adjacency(patterns::g_p4()));
        CHECK(is_threshold_split(s) == !forbidden);
        CHECK(is_threshold_split(s) == (split_dilworth(s) <= 1));
    }
}

TEST_CASE("interval split graphs")
{
    CHECK_FALSE(is_interval_split(gen_rising_sun()));
    CHECK(is_interval_split(split_side(gen_y_p7(), Side::X)));
    CHECK(is_interval_split(SplitGraph(BinaryMatrix::from_strings({"111"}))));
    std::mt19937 rng(38);
    for (int t = 0; t < 300; ++t) {
        SplitGraph s = random_split(rng, rng() % 6, rng() % 6, 0.5);
        CHECK(is_interval_split(s) == (i_dilworth(s) <= 2));
    }
}

TEST_CASE("auto-strongly-chordal graphs")
{
    CHECK_FALSE(is_auto_strongly_chordal(to_general(gen_sun(4))));
    CHECK(is_auto_strongly_chordal(gen_path_graph(4)));
    CHECK(is_auto_strongly_chordal(gen_complete_graph(2)));
    std::mt19937 rng(39);
    for (int t = 0; t < 300; ++t) {
        GeneralGraph g = t % 2 ? oracle::random_graph(rng, rng() % 11, 0.5)
                               : to_general(random_split(rng, rng() % 6, rng() % 5, 0.5));
        CHECK(is_auto_strongly_chordal(g) == (is_strongly_chordal(g) && is_strongly_chordal(complement(g))));
    }
}
