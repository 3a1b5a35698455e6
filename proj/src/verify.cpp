#include <acb/verify.hpp>

#include <acb/cli.hpp>
#include <acb/dilworth.hpp>
#include <acb/generators.hpp>
#include <acb/isomorphism.hpp>
#include <acb/ordering.hpp>
#include <acb/recognition.hpp>
#include <acb/sperner.hpp>

#include <sstream>
#include <stdexcept>

namespace acb {

namespace {

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(const std::string& label, bool ok)
    {
        out_ << label << (ok ? " ok" : " FAIL") << '\n';
        all_ = all_ && ok;
    }
    bool all() const { return all_; }

private:
    std::ostream& out_;
    bool all_ = true;
};

std::string num(std::size_t v) { return std::to_string(v); }

void sweep(std::size_t max_side, const std::function<void(const BipartiteGraph&)>& fn)
{
    for (std::size_t x = 0; x <= max_side; ++x)
        for (std::size_t y = 0; y <= max_side; ++y)
            for_each_oriented(x, y, fn);
}

bool leq_agrees(const BipartiteGraph& b)
{
    const std::size_t top = bip_dilworth(b) + 1;
    for (std::size_t k = 1; k <= top; ++k)
        if ((bip_dilworth(b) <= k) != acb_dilworth_leq(b, k))
            return false;
    return true;
}

void families(Report& r)
{
    for (int k = 2; k <= 6; ++k) {
        BipartiteGraph d = gen_Dk(k);
        r.check("D_" + num(k) + ": acb, x = y = " + num(k) + ",",
                is_acb(d) && x_dilworth(d) == std::size_t(k) && y_dilworth(d) == std::size_t(k) && leq_agrees(d));
    }
    for (int k = 3; k <= 6; ++k)
        for (int l = 2; l < k; ++l) {
            BipartiteGraph d = gen_Dkl(k, l);
            r.check("D_" + num(k) + "," + num(l) + ": (x, y) = (" + num(k) + ", " + num(l) + "),",
                    is_acb(d) && x_dilworth(d) == std::size_t(k) && y_dilworth(d) == std::size_t(l) && leq_agrees(d));
        }
    for (int k = 2; k <= 6; ++k) {
        BipartiteGraph b = gen_Bk(k);
        r.check("B_" + num(k) + ": acb, (x, y) = (" + num(k) + ", 2), critical, induced in D_" + num(k) + ",",
                is_acb(b) && x_dilworth(b) == std::size_t(k) && y_dilworth(b) == 2 &&
                    is_k_critical_acb(b, k) && find_induced(gen_Dk(k), b, true).has_value() && leq_agrees(b));
    }

    const BipartiteGraph c6 = gen_even_cycle(3), c8 = gen_even_cycle(4);
    const BipartiteGraph k2 = gen_matching(2), k3 = gen_matching(3);
    r.check("mir(C6) = 3K2:", iso_bipartite(mirror(c6), k3, true));
    r.check("mir(C8) = C8:", iso_bipartite(mirror(c8), c8, true));
    r.check("mir(2K2) = 2K2:", iso_bipartite(mirror(k2), k2, true));
    r.check("mir(3K2) = C6:", iso_bipartite(mirror(k3), c6, true));
    r.check("split_X(C6) = S3:", iso_split(split_side(c6, Side::X), gen_sun(3)));
    r.check("split_X(C8) = S4:", iso_split(split_side(c8, Side::X), gen_sun(4)));
    r.check("split_X(2K2) = P4:", iso_general(to_general(split_side(k2, Side::X)), gen_path_graph(4)));
    r.check("split_X(3K2) = net:", iso_split(split_side(k3, Side::X), gen_net()));
    r.check("mir(S3) = net:", iso_split(mirror_split(gen_sun(3)), gen_net()));
    r.check("mir(S4) = S4:", iso_split(mirror_split(gen_sun(4)), gen_sun(4)));
}

void critical_small(Report& r)
{
    struct Target {
        std::size_t k;
        const char* name;
        BipartiteGraph graph;
    };
    for (const Target& t : {Target{2, "2K2", gen_matching(2)}, Target{3, "B3", gen_Bk(3)}}) {
        std::size_t found = 0;
        bool only_target = true;
        for (std::size_t x = 0; x <= 4; ++x)
            for (std::size_t y = 0; y <= 4; ++y) {
                if (!((x <= 3 && y <= 4) || (x <= 4 && y <= 3)))
                    continue;
                for_each_oriented(x, y, [&](const BipartiteGraph& b) {
                    if (!is_acb(b) || !is_k_critical_acb(b, t.k))
                        return;
                    ++found;
                    only_target = only_target && iso_bipartite(b, t.graph, true);
                });
            }
        r.check("k=" + num(t.k) + ": unique critical = " + t.name, found > 0 && only_target);
    }
}

void sperner(Report& r)
{
    auto four = enumerate_k_critical(4);
    r.check("k=4: " + num(four.count), four.count == 15);
    r.check("k=4 auto_mirror: " + num(four.auto_mirror), four.auto_mirror == 5);
    auto five = enumerate_k_critical(5, 0);
    r.check("k=5: " + num(five.count), five.count == 178);
}

void equivalences(Report& r)
{
    std::size_t graphs = 0, acb_routes = 0, interval = 0, acb_count = 0, leq = 0;
    sweep(4, [&](const BipartiteGraph& b) {
        ++graphs;
        const bool forbidden = is_acb(b);
        const bool via_chordal = !find_induced(b, patterns::three_k2(), false) && is_chordal_bipartite(b);
        const GeneralGraph sx = to_general(split_side(b, Side::X));
        const bool via_split = is_strongly_chordal(sx) && is_strongly_chordal(complement(sx));
        if (forbidden == via_chordal && via_chordal == via_split)
            ++acb_routes;

        const SplitGraph s = split_side(b, Side::X);
        const bool is_interval = is_interval_split(s);
        const bool narrow = i_dilworth(s) <= 2;
        const bool pattern_free = !find_induced(b, patterns::three_k2(), false) &&
                                  !find_induced(b, patterns::c6(), false) && !find_induced(b, patterns::x_p7(), true);
        if (is_interval == narrow && narrow == pattern_free)
            ++interval;

        if (forbidden) {
            ++acb_count;
            if (leq_agrees(b))
                ++leq;
        }
    });
    r.check("acb routes agree on " + num(acb_routes) + "/" + num(graphs) + " graphs:", acb_routes == graphs);
    r.check("interval split routes agree on " + num(interval) + "/" + num(graphs) + " graphs:", interval == graphs);
    r.check("bip_dilworth <= k iff B_{k+1}-free on " + num(leq) + "/" + num(acb_count) + " acb graphs:",
            leq == acb_count);
}

void gamma(Report& r)
{
    std::size_t graphs = 0, agree = 0;
    sweep(4, [&](const BipartiteGraph& b) {
        ++graphs;
        const bool dlo = is_chordal_bipartite(b);
        const bool exhaustive = exists_gamma_free_ordering(b.matrix());
        const bool no_hole = !find_induced_even_hole(b);
        if (dlo == exhaustive && exhaustive == no_hole)
            ++agree;
    });
    r.check("gamma routes agree on " + num(agree) + "/" + num(graphs) + " graphs:", agree == graphs);

    const BipartiteGraph yp7 = gen_y_p7();
    const std::string fig = "1100\n0110\n0011\n";
    OrderedMatrix chains = gamma_free_from_chains(yp7);
    r.check("Y-P7 chain ordering:", is_gamma_free(chains) && chains.permuted().to_string() == fig);
    std::ostringstream report;
    cli::run_matrix(yp7, report);
    const std::string text = report.str();
    r.check("Y-P7 matrix report:", text.find("\n" + fig + "gamma: free\n") != std::string::npos);
}

} // namespace

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = {"families", "critical-small", "sperner", "equivalences", "gamma"};
    return names;
}

void for_each_oriented(std::size_t x_size, std::size_t y_size, const std::function<void(const BipartiteGraph&)>& fn)
{
    if (x_size != y_size) {
        for_each_bipartite(x_size, y_size, fn);
        return;
    }
    for_each_bipartite(x_size, y_size, [&](const BipartiteGraph& b) {
        fn(b);
        BipartiteGraph s = b.swapped();
        if (!iso_bipartite(b, s, false))
            fn(s);
    });
}

bool run_verify_suite(const std::string& name, std::ostream& out)
{
    Report r(out);
    if (name == "families")
        families(r);
    else if (name == "critical-small")
        critical_small(r);
    else if (name == "sperner")
        sperner(r);
    else if (name == "equivalences")
        equivalences(r);
    else if (name == "gamma")
        gamma(r);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    return r.all();
}

} // namespace acb
