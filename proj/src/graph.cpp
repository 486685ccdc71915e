#include "gaidx/graph.hpp"

#include <algorithm>
#include <string>

namespace gaidx {

std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::BadVertex: return "BadVertex";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::BadGraph6: return "BadGraph6";
    case Errc::BadEdgeList: return "BadEdgeList";
    case Errc::BadDegree: return "BadDegree";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::BadParams: return "BadParams";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::BadSpec: return "BadSpec";
    case Errc::NoGraphs: return "NoGraphs";
    }
    return "UnknownError";
}

Graph::Graph(int n) : n_(n), m_(0) {
    if (n < 1)
        throw Error(Errc::BadParams, "vertex count must be positive, got " + std::to_string(n));
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    deg_.assign(static_cast<size_t>(n), 0);
}

void Graph::add_edge_unchecked(int u, int v) {
    row(u)[static_cast<size_t>(v) >> 6] |= 1ull << (v & 63);
    row(v)[static_cast<size_t>(u) >> 6] |= 1ull << (u & 63);
    ++deg_[static_cast<size_t>(u)];
    ++deg_[static_cast<size_t>(v)];
    ++m_;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::BadVertex, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw Error(Errc::DuplicateEdge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
        g.add_edge_unchecked(u, v);
    }
    return g;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(degree(v)));
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.degree_multiset = g.degrees();
    std::sort(s.degree_multiset.begin(), s.degree_multiset.end());
    s.delta = s.degree_multiset.front();
    s.Delta = s.degree_multiset.back();
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int w) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == n;
}

bool is_regular(const Graph& g) {
    const auto& deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; });
}

bool is_degree_bipartition(const Graph& g, int delta, int Delta) {
    if (delta >= Delta)
        return false;
    for (int d : g.degrees())
        if (d != delta && d != Delta)
            return false;
    bool ok = true;
    g.for_each_edge([&](int u, int v) {
        if (g.degree(u) + g.degree(v) != delta + Delta)
            ok = false;
    });
    return ok;
}

} // namespace gaidx
