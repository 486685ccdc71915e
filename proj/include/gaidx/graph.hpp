#ifndef GAIDX_GRAPH_HPP
#define GAIDX_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gaidx/error.hpp"

namespace gaidx {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex (a single 64-bit word
/// when n <= 64, multiple words otherwise), so neighbor and edge iteration
/// cost O(degree) resp. O(m) plus a word scan. Instances are immutable after
/// construction and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }
    int degree(int v) const { return deg_[static_cast<size_t>(v)]; }
    const std::vector<int>& degrees() const noexcept { return deg_; }

    bool has_edge(int u, int v) const {
        return (row(u)[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        const uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                f(w * 64 + b);
            }
        }
    }

    /// Visits each edge once as (u, v) with u < v, ascending in (u, v).
    template <typename F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            const uint64_t* r = row(u);
            for (int w = (u + 1) >> 6; w < words_; ++w) {
                uint64_t bits = r[w];
                if (w == (u + 1) >> 6 && ((u + 1) & 63) != 0)
                    bits &= ~0ull << ((u + 1) & 63);
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    f(u, w * 64 + b);
                }
            }
        }
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    uint64_t* row(int v) { return bits_.data() + static_cast<size_t>(v) * words_; }

    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int words_ = 0; // 64-bit words per adjacency row
    std::vector<uint64_t> bits_;
    std::vector<int> deg_;

    friend class GraphEnumerator;
    friend Graph graph_from_mask(int, uint64_t);
};

struct DegreeSummary {
    int n = 0;
    int m = 0;
    int delta = 0; // minimum degree
    int Delta = 0; // maximum degree
    std::vector<int> degree_multiset; // ascending
};

DegreeSummary degree_summary(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

/// True iff every vertex has degree delta or Delta and every edge joins a
/// degree-delta vertex to a degree-Delta vertex. Requires delta < Delta;
/// returns false otherwise.
bool is_degree_bipartition(const Graph& g, int delta, int Delta);

} // namespace gaidx

#endif
