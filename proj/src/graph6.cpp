#include "idom/graph6.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace idom {

namespace {

constexpr int BIAS = 63;

void check_data_byte(unsigned char c) {
    if (c < 63 || c > 126)
        throw std::invalid_argument("graph6: byte outside the printable range");
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : text) check_data_byte(static_cast<unsigned char>(c));

    std::size_t pos = 0;
    long n;
    if (text[0] != '~') {
        n = text[0] - BIAS;
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        // 8-byte size word, n >= 258048: far beyond what a mask row can hold.
        throw limit_error("graph6: vertex count exceeds limit of 64");
    } else {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated size word");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - BIAS);
        if (n < 63) throw std::invalid_argument("graph6: non-canonical size word");
        pos = 4;
    }
    if (n > MAX_VERTICES) throw limit_error("graph6: vertex count exceeds limit of 64");

    long bits = n * (n - 1) / 2;
    std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != want)
        throw std::invalid_argument("graph6: length does not match the vertex count");

    std::vector<std::pair<int, int>> edges;
    long index = 0;  // runs over x(0,1), x(0,2), x(1,2), ...
    int i = 0, j = 1;
    for (; pos < text.size(); ++pos) {
        int chunk = text[pos] - BIAS;
        for (int b = 5; b >= 0; --b, ++index) {
            int bitval = (chunk >> b) & 1;
            if (index >= bits) {
                if (bitval) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if (bitval) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(BIAS + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(BIAS + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(BIAS + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(BIAS + (n & 63)));
    }
    int chunk = 0, filled = 0;
    auto push_bit = [&](int b) {
        chunk = (chunk << 1) | b;
        if (++filled == 6) {
            out.push_back(static_cast<char>(BIAS + chunk));
            chunk = filled = 0;
        }
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) push_bit(g.adjacent(i, j) ? 1 : 0);
    if (filled) out.push_back(static_cast<char>(BIAS + (chunk << (6 - filled))));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    if (n < 0) throw std::invalid_argument("edge list: negative vertex count");
    if (n > MAX_VERTICES) throw limit_error("edge list: vertex count exceeds limit of 64");
    std::vector<std::pair<int, int>> edges;
    long u;
    while (in >> u) {
        long v;
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw std::invalid_argument("edge list: malformed token");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw std::invalid_argument("empty graph input");
    if (std::isdigit(static_cast<unsigned char>(text[begin]))) return parse_edge_list(text);
    std::size_t end = text.find_last_not_of(" \t\r\n");
    return parse_graph6(text.substr(begin, end - begin + 1));
}

}  // namespace idom
