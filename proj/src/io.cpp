#include "gaidx/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace gaidx {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int body_byte(std::string_view s, size_t i) {
    if (i >= s.size())
        throw Error(Errc::BadGraph6, "truncated graph6 data");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw Error(Errc::BadGraph6, "byte value " + std::to_string(c) + " outside graph6 range");
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(Errc::BadGraph6, "empty input");

    size_t pos = 0;
    long long n;
    if (body_byte(text, 0) == 63) { // '~': multi-byte vertex count
        if (text.size() > 1 && body_byte(text, 1) == 63) {
            n = 0;
            for (pos = 2; pos < 8; ++pos)
                n = (n << 6) | body_byte(text, pos);
        } else {
            n = 0;
            for (pos = 1; pos < 4; ++pos)
                n = (n << 6) | body_byte(text, pos);
        }
    } else {
        n = body_byte(text, 0);
        pos = 1;
    }
    if (n < 1)
        throw Error(Errc::BadGraph6, "vertex count must be >= 1, got " + std::to_string(n));
    if (n > 100000)
        throw Error(Errc::BadGraph6, "vertex count " + std::to_string(n) + " too large");

    const long long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes)
        throw Error(Errc::BadGraph6, "body length mismatch: expected " + std::to_string(nbytes) +
                                         " bytes, got " + std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int ei = 0, ej = 1; // column-major upper-triangle cursor
    for (size_t k = 0; k < nbytes; ++k) {
        int group = body_byte(text, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if (group & (1 << b))
                    throw Error(Errc::BadGraph6, "nonzero padding bits");
                continue;
            }
            if (group & (1 << b))
                g.add_edge_unchecked(ei, ej);
            if (++ei == ej) {
                ei = 0;
                ++ej;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw Error(Errc::BadGraph6, "vertex count too large to encode");
    }

    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<long long> tokens;
    std::vector<int> token_line;
    int line = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            if (c == '-')
                ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start + (c == '-' ? 1u : 0u))
                throw Error(Errc::BadEdgeList, "line " + std::to_string(line) + ": stray '-'");
            tokens.push_back(std::stoll(std::string(text.substr(start, i - start))));
            token_line.push_back(line);
        } else {
            throw Error(Errc::BadEdgeList,
                        "line " + std::to_string(line) + ": unexpected character '" + c + "'");
        }
    }
    if (tokens.size() < 2)
        throw Error(Errc::BadEdgeList, "missing \"n m\" header line");
    const long long n = tokens[0];
    const long long m = tokens[1];
    if (n < 1 || m < 0)
        throw Error(Errc::BadEdgeList, "line " + std::to_string(token_line[0]) +
                                           ": bad header n=" + std::to_string(n) +
                                           " m=" + std::to_string(m));
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw Error(Errc::BadEdgeList, "expected " + std::to_string(2 * m) +
                                           " edge endpoints, found " +
                                           std::to_string(tokens.size() - 2));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long k = 0; k < m; ++k) {
        long long u = tokens[2 + 2 * k], v = tokens[3 + 2 * k];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::BadEdgeList, "line " + std::to_string(token_line[2 + 2 * k]) +
                                               ": vertex out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw Error(Errc::BadEdgeList, e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
    return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        graphs.push_back(parse_graph6(std::string_view(line).substr(a)));
    }
    return graphs;
}

} // namespace gaidx
