#include <indtree/io.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace indtree {

ParseError::ParseError(const std::string & what, std::size_t offset) :
    std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
    _offset(offset)
{
}

auto to_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(63 + n));
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }

    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

auto from_graph6(std::string_view text) -> Graph
{
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        pos = header.size();

    auto take = [&]() -> int {
        if (pos >= text.size())
            throw ParseError("graph6 string truncated", pos);
        auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte " + std::to_string(c) + " is not printable in 63..126", pos);
        ++pos;
        return c - 63;
    };

    int n = 0;
    if (pos < text.size() && text[pos] == '~') {
        ++pos;
        if (pos < text.size() && text[pos] == '~')
            throw ParseError("graph6 eight-byte size form exceeds vertex capacity", pos);
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | take();
        if (n > max_vertices)
            throw ParseError("graph6 order " + std::to_string(n) + " exceeds capacity " + std::to_string(max_vertices), pos - 3);
    }
    else
        n = take();

    std::vector<VertexSet> adj(n);
    int bit = 0, group = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                group = take();
                bit = 6;
            }
            --bit;
            if ((group >> bit) & 1) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    if (bit > 0 && (group & ((1 << bit) - 1)) != 0)
        throw ParseError("graph6 padding bits are not zero", pos - 1);
    if (pos != text.size())
        throw ParseError("trailing bytes after graph6 data", pos);
    return Graph::from_adjacency(std::move(adj));
}

auto read_graph6_stream(std::istream & in) -> std::vector<Graph>
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

auto read_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };

    if (! next_line())
        throw ParseError("edge list is empty", 0);
    long n = -1, m = -1;
    {
        std::istringstream header{line};
        std::string rest;
        if (! (header >> n >> m) || (header >> rest) || n < 0 || m < 0)
            throw ParseError("edge list header must be \"n m\"", line_no);
    }
    if (n > max_vertices)
        throw ParseError("edge list order " + std::to_string(n) + " exceeds capacity", line_no);

    std::vector<Edge> edges;
    for (long e = 0; e < m; ++e) {
        if (! next_line())
            throw ParseError("edge list ends after " + std::to_string(e) + " of " + std::to_string(m) + " edges", line_no);
        std::istringstream row{line};
        long u = -1, v = -1;
        std::string rest;
        if (! (row >> u >> v) || (row >> rest))
            throw ParseError("edge line must be \"u v\"", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("invalid edge " + std::to_string(u) + " " + std::to_string(v), line_no);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line())
        throw ParseError("unexpected content after the last edge", line_no);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

auto write_edge_list(std::ostream & out, const Graph & g) -> void
{
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

auto read_graph_file(const std::string & path) -> std::vector<Graph>
{
    std::ifstream in{path};
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto text = buffer.str();

    std::istringstream probe{text};
    std::string first;
    while (std::getline(probe, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream header{first};
    long a, b;
    std::string rest;
    const bool edge_list = static_cast<bool>(header >> a >> b) && ! (header >> rest);

    std::istringstream in_text{text};
    if (edge_list)
        return {read_edge_list(in_text)};
    return read_graph6_stream(in_text);
}

} // namespace indtree
