#include "gaidx/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gaidx {

uint64_t upper_triangle_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11)
        throw Error(Errc::BadParams, "bitmask form requires n <= 11, got " + std::to_string(n));
    uint64_t mask = 0;
    g.for_each_edge([&](int u, int v) { mask |= 1ull << pair_rank(n, u, v); });
    return mask;
}

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int rank = 0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j, ++rank)
            if (mask & (1ull << rank))
                g.add_edge_unchecked(i, j);
    return g;
}

namespace {

// Branch-and-bound over position assignments, filling positions n-1 down
// to 0. Once positions i..n-1 hold vertices, every pair among them is
// decided and occupies the contiguous top rank range [pair_rank(i,i+1), E),
// so partial masks compare directly against the incumbent.
struct CanonSearch {
    const Graph* g;
    int n;
    uint64_t best;
    std::vector<int> perm;  // perm[p] = original vertex placed at position p
    std::vector<char> used; // by original vertex
    std::vector<int> order; // candidate try-order (ascending degree)

    void run(int pos, uint64_t acc) {
        if (pos < 0) {
            if (acc < best)
                best = acc;
            return;
        }
        for (int v : order) {
            if (used[static_cast<size_t>(v)])
                continue;
            uint64_t acc2 = acc;
            for (int q = pos + 1; q < n; ++q)
                if (g->has_edge(v, perm[static_cast<size_t>(q)]))
                    acc2 |= 1ull << pair_rank(n, pos, q);
            // decided bits occupy ranks >= pair_rank(n, pos, pos+1)
            const uint64_t region = pos + 1 < n ? ~((1ull << pair_rank(n, pos, pos + 1)) - 1) : 0;
            if ((acc2 & region) > (best & region))
                continue;
            used[static_cast<size_t>(v)] = 1;
            perm[static_cast<size_t>(pos)] = v;
            run(pos - 1, acc2);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

// One-dimensional Weisfeiler-Leman color refinement; returns per-vertex
// colors renumbered to a shared palette across both graphs.
std::pair<std::vector<int>, std::vector<int>> wl_colors(const Graph& a, const Graph& b) {
    std::vector<int> ca(a.degrees().begin(), a.degrees().end());
    std::vector<int> cb(b.degrees().begin(), b.degrees().end());
    for (int round = 0; round < 8; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        auto refine = [&](const Graph& g, std::vector<int>& colors) {
            std::vector<std::pair<int, std::vector<int>>> sig(static_cast<size_t>(g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::vector<int> nc;
                g.for_each_neighbor(v, [&](int w) { nc.push_back(colors[static_cast<size_t>(w)]); });
                std::sort(nc.begin(), nc.end());
                sig[static_cast<size_t>(v)] = {colors[static_cast<size_t>(v)], std::move(nc)};
            }
            for (int v = 0; v < g.vertex_count(); ++v) {
                auto it = palette.find(sig[static_cast<size_t>(v)]);
                if (it == palette.end())
                    it = palette.emplace(sig[static_cast<size_t>(v)], static_cast<int>(palette.size())).first;
                colors[static_cast<size_t>(v)] = it->second;
            }
        };
        size_t before = 0;
        {
            std::vector<int> all(ca);
            all.insert(all.end(), cb.begin(), cb.end());
            std::sort(all.begin(), all.end());
            before = static_cast<size_t>(std::unique(all.begin(), all.end()) - all.begin());
        }
        refine(a, ca);
        refine(b, cb);
        if (palette.size() == before)
            break;
    }
    (void)na;
    (void)nb;
    return {ca, cb};
}

bool iso_backtrack(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    auto [ca, cb] = wl_colors(a, b);
    {
        std::vector<int> sa(ca), sb(cb);
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    std::vector<int> map_ab(static_cast<size_t>(n), -1), map_ba(static_cast<size_t>(n), -1);
    std::vector<int> class_size(static_cast<size_t>(n) * 2 + 2, 0);
    for (int c : cb)
        ++class_size[static_cast<size_t>(c)];

    std::function<bool(int)> place = [&](int depth) -> bool {
        if (depth == n)
            return true;
        // next a-vertex: most mapped neighbors, then smallest color class
        int pick = -1, best_mapped = -1, best_class = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (map_ab[static_cast<size_t>(v)] != -1)
                continue;
            int mapped = 0;
            a.for_each_neighbor(v, [&](int w) { mapped += map_ab[static_cast<size_t>(w)] != -1; });
            int cls = class_size[static_cast<size_t>(ca[static_cast<size_t>(v)])];
            if (mapped > best_mapped || (mapped == best_mapped && cls < best_class)) {
                pick = v;
                best_mapped = mapped;
                best_class = cls;
            }
        }
        for (int w = 0; w < n; ++w) {
            if (map_ba[static_cast<size_t>(w)] != -1 || cb[static_cast<size_t>(w)] != ca[static_cast<size_t>(pick)])
                continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                int mv = map_ab[static_cast<size_t>(v)];
                if (mv != -1 && a.has_edge(pick, v) != b.has_edge(w, mv))
                    ok = false;
            }
            if (!ok)
                continue;
            map_ab[static_cast<size_t>(pick)] = w;
            map_ba[static_cast<size_t>(w)] = pick;
            if (place(depth + 1))
                return true;
            map_ab[static_cast<size_t>(pick)] = -1;
            map_ba[static_cast<size_t>(w)] = -1;
        }
        return false;
    };
    return place(0);
}

} // namespace

uint64_t canonical_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11)
        throw Error(Errc::BadParams, "canonical bitmask requires n <= 11");
    if (n == 1)
        return 0;
    CanonSearch s;
    s.g = &g;
    s.n = n;
    s.best = ~0ull;
    s.perm.assign(static_cast<size_t>(n), -1);
    s.used.assign(static_cast<size_t>(n), 0);
    s.order.resize(static_cast<size_t>(n));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int x, int y) { return g.degree(x) < g.degree(y); });
    s.run(n - 1, 0);
    return s.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    {
        std::vector<int> da = a.degrees(), db = b.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;
    }
    if (a.vertex_count() <= 10)
        return canonical_mask(a) == canonical_mask(b);
    return iso_backtrack(a, b);
}

} // namespace gaidx
