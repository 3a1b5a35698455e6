#include <acb/io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace acb {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

bool is_blank(const std::string& s)
{
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

bool is_comment(const std::string& s)
{
    auto pos = s.find_first_not_of(" \t");
    return pos != std::string::npos && s[pos] == '#';
}

std::vector<std::string> tokens(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

std::size_t to_count(const std::string& tok, std::size_t line)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    return value;
}

// Splits input into non-comment lines. Blank lines before the header are
// dropped; after it they are kept because an empty row or hyperedge is legal.
class Reader {
public:
    explicit Reader(std::string_view text)
    {
        std::size_t number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            std::string s(text.substr(start, end - start));
            if (!s.empty() && s.back() == '\r')
                s.pop_back();
            ++number;
            if (!is_comment(s))
                lines_.push_back({number, std::move(s)});
            if (end == text.size())
                break;
            start = end + 1;
        }
        last_line_ = number;
        // A trailing newline terminates the last row rather than opening an empty one.
        if (!text.empty() && text.back() == '\n' && !lines_.empty() && lines_.back().text.empty() &&
            lines_.back().number == number)
            lines_.pop_back();
    }

    const Line& header()
    {
        while (pos_ < lines_.size() && is_blank(lines_[pos_].text))
            ++pos_;
        if (pos_ == lines_.size())
            throw ParseError(last_line_, "missing header");
        return lines_[pos_++];
    }

    const Line& body(std::size_t index, std::size_t expected, const char* what)
    {
        if (pos_ == lines_.size())
            throw ParseError(last_line_, "expected " + std::to_string(expected) + " " + what + ", found " +
                                             std::to_string(index));
        return lines_[pos_++];
    }

    void finish()
    {
        for (; pos_ < lines_.size(); ++pos_)
            if (!is_blank(lines_[pos_].text))
                throw ParseError(lines_[pos_].number, "unexpected content after the last row");
    }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

BinaryMatrix read_matrix(Reader& r, std::size_t rows, std::size_t cols)
{
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Line& line = r.body(i, rows, "rows");
        std::string row = trim(line.text);
        if (row.size() != cols)
            throw ParseError(line.number, "row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = 0; j < cols; ++j) {
            if (row[j] != '0' && row[j] != '1')
                throw ParseError(line.number, "row " + std::to_string(i + 1) + " has non-binary character '" +
                                                  std::string(1, row[j]) + "'");
            m.assign(i, j, row[j] == '1');
        }
    }
    return m;
}

std::vector<std::size_t> header_counts(const Line& h, const std::vector<std::string>& tok, std::size_t expected)
{
    if (tok.size() != expected + 1)
        throw ParseError(h.number, "malformed header '" + h.text + "'");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < tok.size(); ++i)
        out.push_back(to_count(tok[i], h.number));
    return out;
}

AnyGraph parse_with(Reader& r)
{
    const Line& h = r.header();
    auto tok = tokens(h.text);
    const std::string& kind = tok.front();
    if (kind == "bip" || kind == "split") {
        auto c = header_counts(h, tok, 2);
        BinaryMatrix m = read_matrix(r, c[0], c[1]);
        r.finish();
        if (kind == "bip")
            return BipartiteGraph(std::move(m));
        return SplitGraph(std::move(m));
    }
    if (kind == "graph") {
        auto c = header_counts(h, tok, 1);
        BinaryMatrix m = read_matrix(r, c[0], c[0]);
        r.finish();
        try {
            return GeneralGraph(std::move(m));
        } catch (const std::invalid_argument& e) {
            throw ParseError(h.number, std::string("inconsistent adjacency: ") + e.what());
        }
    }
    if (kind == "hyp") {
        auto c = header_counts(h, tok, 2);
        const std::size_t n = c[0];
        std::vector<Bitset> edges;
        for (std::size_t e = 0; e < c[1]; ++e) {
            const Line& line = r.body(e, c[1], "hyperedges");
            Bitset s(n);
            for (const auto& t : tokens(line.text)) {
                std::size_t v = to_count(t, line.number);
                if (v >= n)
                    throw ParseError(line.number, "vertex " + t + " out of range");
                if (s.test(v))
                    throw ParseError(line.number, "vertex " + t + " repeated in hyperedge");
                s.set(v);
            }
            edges.push_back(std::move(s));
        }
        r.finish();
        return Hypergraph(n, std::move(edges));
    }
    throw ParseError(h.number, "unknown graph kind '" + kind + "'");
}

template <typename T>
T parse_as(std::string_view text, const char* kind)
{
    Reader r(text);
    AnyGraph g = parse_with(r);
    if (auto* p = std::get_if<T>(&g))
        return std::move(*p);
    throw ParseError(1, std::string("expected a '") + kind + "' header");
}

} // namespace

AnyGraph parse_any(std::string_view text)
{
    Reader r(text);
    return parse_with(r);
}

BipartiteGraph parse_bipartite(std::string_view text) { return parse_as<BipartiteGraph>(text, "bip"); }
SplitGraph parse_split(std::string_view text) { return parse_as<SplitGraph>(text, "split"); }
GeneralGraph parse_general(std::string_view text) { return parse_as<GeneralGraph>(text, "graph"); }
Hypergraph parse_hypergraph(std::string_view text) { return parse_as<Hypergraph>(text, "hyp"); }

std::string serialize(const BipartiteGraph& b)
{
    return "bip " + std::to_string(b.x_size()) + " " + std::to_string(b.y_size()) + "\n" + b.matrix().to_string();
}

std::string serialize(const SplitGraph& g)
{
    return "split " + std::to_string(g.k_size()) + " " + std::to_string(g.i_size()) + "\n" + g.cross().to_string();
}

std::string serialize(const GeneralGraph& g)
{
    return "graph " + std::to_string(g.size()) + "\n" + g.matrix().to_string();
}

std::string serialize(const Hypergraph& h)
{
    std::string out = "hyp " + std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        bool first = true;
        for (auto v : e.indices()) {
            if (!first)
                out.push_back(' ');
            out += std::to_string(v);
            first = false;
        }
        out.push_back('\n');
    }
    return out;
}

std::string serialize(const AnyGraph& g)
{
    return std::visit([](const auto& v) { return serialize(v); }, g);
}

} // namespace acb
