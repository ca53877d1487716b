#include "parares/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "parares/errors.hpp"
#include "parares/fmt.hpp"

namespace parares {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line, const char* what) {
    int v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
    return v;
}

}  // namespace

Graph load_graph(const std::string& text) {
    Graph g;
    bool have_header = false;
    std::set<std::pair<int, int>> seen;

    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (!have_header) {
            if (toks[0] != "nodes")
                throw ParseError("expected 'nodes N' header, got '" + toks[0] + "'", lineno);
            if (toks.size() != 2) throw ParseError("'nodes' takes exactly one argument", lineno);
            g.n = parse_int(toks[1], lineno, "node count");
            if (g.n <= 0) throw ParseError("node count must be positive", lineno);
            have_header = true;
            continue;
        }

        if (toks[0] != "edge") throw ParseError("unknown directive '" + toks[0] + "'", lineno);
        if (toks.size() != 4) throw ParseError("'edge' takes exactly three arguments", lineno);
        Edge e;
        e.i = parse_int(toks[1], lineno, "node index");
        e.k = parse_int(toks[2], lineno, "node index");
        if (!parse_double(toks[3], e.w))
            throw ParseError("expected weight, got '" + toks[3] + "'", lineno);
        if (e.i < 0 || e.i >= g.n || e.k < 0 || e.k >= g.n)
            throw ParseError("node index out of range [0, " + std::to_string(g.n) + ")", lineno);
        if (e.i == e.k) throw ParseError("self-loop " + std::to_string(e.i) + " rejected", lineno);
        if (!(e.w > 0.0)) throw ParseError("edge weight must be > 0", lineno);
        auto key = std::minmax(e.i, e.k);
        if (!seen.insert(key).second)
            throw ParseError("duplicate edge " + std::to_string(key.first) + "-" +
                                 std::to_string(key.second),
                             lineno);
        g.edges.push_back(e);
    }
    if (!have_header) throw ParseError("missing 'nodes N' header");
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

void validate_graph(const Graph& g) {
    if (g.n <= 0) throw ParseError("node count must be positive");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges) {
        if (e.i < 0 || e.i >= g.n || e.k < 0 || e.k >= g.n)
            throw ParseError("node index out of range");
        if (e.i == e.k) throw ParseError("self-loop rejected");
        if (!(e.w > 0.0)) throw ParseError("edge weight must be > 0");
        if (!seen.insert(std::minmax(e.i, e.k)).second) throw ParseError("duplicate edge");
    }
}

SymmetricMatrix laplacian(const Graph& g) {
    validate_graph(g);
    const std::size_t n = static_cast<std::size_t>(g.n);
    SymmetricMatrix m(n);
    for (const Edge& e : g.edges) m.add(e.i, e.k, -e.w);
    // Diagonal cancels the row exactly rather than summing weights again.
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) s += m(i, k);
        m.set(i, i, -s);
    }
    return m;
}

SymmetricMatrix edge_laplacian(int n, int i, int k) {
    if (i == k) throw ParseError("self-loop rejected");
    if (i < 0 || i >= n || k < 0 || k >= n) throw ParseError("node index out of range");
    SymmetricMatrix m(static_cast<std::size_t>(n));
    m.set(i, i, 1.0);
    m.set(k, k, 1.0);
    m.set(i, k, -1.0);
    return m;
}

}  // namespace parares
