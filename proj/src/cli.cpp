#include <acb/cli.hpp>

#include <acb/dilworth.hpp>
#include <acb/generators.hpp>
#include <acb/isomorphism.hpp>
#include <acb/ordering.hpp>
#include <acb/recognition.hpp>
#include <acb/sperner.hpp>
#include <acb/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace acb::cli {

namespace {

const char* yes_no(bool v) { return v ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (auto x : v)
        s += " " + std::to_string(x);
    return s;
}

struct Recognizer {
    bool swap;
    std::ostream& out;

    void operator()(const BipartiteGraph& b) const
    {
        out << "acb: " << yes_no(is_acb(b)) << '\n';
        out << "chordal_bipartite: " << yes_no(is_chordal_bipartite(b)) << '\n';
        out << "chain: " << yes_no(is_chain(b)) << '\n';
        out << "split_x_interval: " << yes_no(is_interval_split(split_side(b, Side::X))) << '\n';
        out << "split_y_interval: " << yes_no(is_interval_split(split_side(b, Side::Y))) << '\n';
        out << "self_mirror: " << yes_no(iso_bipartite(b, mirror(b), swap)) << '\n';
    }
    void operator()(const SplitGraph& g) const
    {
        out << "strongly_chordal: " << yes_no(is_strongly_chordal(g)) << '\n';
        out << "auto_strongly_chordal: " << yes_no(is_auto_strongly_chordal(to_general(g))) << '\n';
        out << "threshold: " << yes_no(is_threshold_split(g)) << '\n';
        out << "interval: " << yes_no(is_interval_split(g)) << '\n';
        out << "self_mirror: " << yes_no(iso_split(g, mirror_split(g))) << '\n';
    }
    void operator()(const GeneralGraph& g) const
    {
        auto s = is_split(g);
        out << "split: " << yes_no(s.has_value()) << '\n';
        out << "chordal: " << yes_no(is_chordal(g)) << '\n';
        if (s || g.size() <= sun_search_limit)
            out << "strongly_chordal: " << yes_no(is_strongly_chordal(g)) << '\n';
        else
            out << "strongly_chordal: unknown\n";
        out << "auto_strongly_chordal: " << yes_no(is_auto_strongly_chordal(g)) << '\n';
        if (s) {
            out << "threshold: " << yes_no(is_threshold_split(*s)) << '\n';
            out << "interval: " << yes_no(is_interval_split(*s)) << '\n';
        }
    }
    void operator()(const Hypergraph& h) const
    {
        out << "sperner: " << yes_no(is_sperner(h)) << '\n';
        out << "critical: " << yes_no(is_k_critical_sperner(h)) << '\n';
        out << "self_mirror: " << yes_no(sperner_canonical(h) == sperner_canonical(mirror(h))) << '\n';
    }
};

struct WidthReporter {
    std::ostream& out;

    void operator()(const BipartiteGraph& b) const
    {
        SideWidth x = side_width(b, Side::X), y = side_width(b, Side::Y);
        out << "x: " << x.width << '\n';
        out << "y: " << y.width << '\n';
        out << "bip: " << std::max(x.width, y.width) << '\n';
        out << "antichain: X" << join(x.antichain) << '\n';
        out << "antichain: Y" << join(y.antichain) << '\n';
    }
    void operator()(const SplitGraph& g) const
    {
        out << "k: " << k_dilworth(g) << '\n';
        out << "i: " << i_dilworth(g) << '\n';
        out << "dilworth: " << split_dilworth(g) << '\n';
        out << "vicinal: " << graph_dilworth(to_general(g)) << '\n';
    }
    void operator()(const GeneralGraph& g) const { out << "dilworth: " << graph_dilworth(g) << '\n'; }
    void operator()(const Hypergraph& h) const { out << "dilworth: " << hypergraph_dilworth(h) << '\n'; }
};

std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file || !(file << text))
        throw std::invalid_argument("cannot write '" + path + "'");
}

} // namespace

void run_recognize(const AnyGraph& g, bool swap, std::ostream& out) { std::visit(Recognizer{swap, out}, g); }

void run_dilworth(const AnyGraph& g, std::ostream& out) { std::visit(WidthReporter{out}, g); }

void run_matrix(const BipartiteGraph& b, std::ostream& out)
{
    const bool chains = y_dilworth(b) <= 2;
    OrderedMatrix om = chains ? gamma_free_from_chains(b) : doubly_lexical_order(b.matrix());
    out << "method: " << (chains ? "chains" : "doubly-lexical") << '\n';
    out << "rows:" << join(om.row_order()) << '\n';
    out << "cols:" << join(om.col_order()) << '\n';
    out << om.permuted().to_string();
    if (auto w = find_gamma(om))
        out << "gamma: witness " << w->top << ' ' << w->bottom << ' ' << w->left << ' ' << w->right << '\n';
    else
        out << "gamma: free\n";
}

void run_sperner_critical(std::size_t k, bool list, std::size_t workers, std::ostream& out)
{
    CriticalEnumeration e = enumerate_k_critical(k, workers);
    out << "count: " << e.count << '\n';
    out << "auto_mirror: " << e.auto_mirror << '\n';
    if (k == 6)
        out << "note: not verified against literature\n";
    if (!list)
        return;
    for (std::size_t i = 0; i < e.canonical.size(); ++i)
        out << "# " << i + 1 << '\n' << e.canonical[i];
}

int run_verify(const std::string& suite, std::ostream& out) { return run_verify_suite(suite, out) ? ok : negative; }

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Analysis of auto-chordal-bipartite graphs and their split and hypergraph forms", "acbgraph"};
    app.require_subcommand(1);

    std::string input, out_path, side = "X", family, suite;
    std::vector<int> params;
    bool swap = false, list = false;
    std::size_t k = 0, workers = 1;

    auto* recognize = app.add_subcommand("recognize", "class membership tests");
    recognize->add_option("input", input, "graph file (default: standard input)");
    recognize->add_flag("--swap", swap, "allow exchanging X and Y in the self-mirror test");

    auto* dilworth = app.add_subcommand("dilworth", "Dilworth numbers with antichain witnesses");
    dilworth->add_option("input", input, "graph file (default: standard input)");

    auto* generate = app.add_subcommand("generate", "write a named graph");
    generate->add_option("family", family, "family name")->required();
    generate->add_option("params", params, "integer parameters");
    generate->add_option("--out", out_path, "output file");

    auto* mirror_cmd = app.add_subcommand("mirror", "bipartite complement or edge complement");
    mirror_cmd->add_option("input", input, "graph file (default: standard input)");
    mirror_cmd->add_option("--out", out_path, "output file");

    auto* split = app.add_subcommand("split", "complete one side of a bipartite graph to a clique");
    split->add_option("input", input, "bipartite graph file (default: standard input)");
    split->add_option("--side", side, "side that becomes the clique")->check(CLI::IsMember({"X", "Y"}));
    split->add_option("--out", out_path, "output file");

    auto* matrix = app.add_subcommand("matrix", "Gamma-free or doubly lexical ordering");
    matrix->add_option("input", input, "bipartite graph file (default: standard input)");
    matrix->add_option("--out", out_path, "write the ordered matrix in om format");

    auto* sperner = app.add_subcommand("sperner-critical", "enumerate k-critical Sperner hypergraphs");
    sperner->add_option("k", k, "number of hyperedges")->required();
    sperner->add_flag("--list", list, "print every instance");
    sperner->add_option("--workers", workers, "threads, 0 for all cores");

    auto* verify = app.add_subcommand("verify", "run a built-in check suite");
    verify->add_option("suite", suite, "families, critical-small, sperner, equivalences or gamma")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*recognize) {
            run_recognize(parse_any(read_input(input, in)), swap, out);
        } else if (*dilworth) {
            run_dilworth(parse_any(read_input(input, in)), out);
        } else if (*generate) {
            emit(serialize(gen_named(named_family(family, params))), out_path, out);
        } else if (*mirror_cmd) {
            AnyGraph g = parse_any(read_input(input, in));
            std::string text;
            if (auto* b = std::get_if<BipartiteGraph>(&g))
                text = serialize(mirror(*b));
            else if (auto* s = std::get_if<SplitGraph>(&g))
                text = serialize(mirror_split(*s));
            else if (auto* h = std::get_if<Hypergraph>(&g))
                text = serialize(mirror(*h));
            else
                text = serialize(complement(std::get<GeneralGraph>(g)));
            emit(text, out_path, out);
        } else if (*split) {
            BipartiteGraph b = parse_bipartite(read_input(input, in));
            emit(serialize(split_side(b, side == "X" ? Side::X : Side::Y)), out_path, out);
        } else if (*matrix) {
            BipartiteGraph b = parse_bipartite(read_input(input, in));
            run_matrix(b, out);
            if (!out_path.empty()) {
                OrderedMatrix om = y_dilworth(b) <= 2 ? gamma_free_from_chains(b) : doubly_lexical_order(b.matrix());
                emit(serialize(om), out_path, out);
            }
        } else if (*sperner) {
            run_sperner_critical(k, list, workers, out);
        } else if (*verify) {
            return run_verify(suite, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

} // namespace acb::cli
