#pragma once

// Reference computations for tests. Everything here works on a plain
// adjacency matrix and brute-force loops, sharing no code with gdom/.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(int n, const std::vector<std::pair<int, int>>& edges) {
    Matrix a(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
    return a;
}

inline std::vector<int> bfs(const Matrix& a, int s, bool complement = false) {
    const int n = static_cast<int>(a.size());
    std::vector<int> d(n, -1);
    std::deque<int> q{s};
    d[s] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            bool adj = complement ? !a[u][v] : a[u][v];
            if (adj && d[v] < 0) {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    return d;
}

inline bool connected(const Matrix& a, bool complement = false) {
    auto d = bfs(a, 0, complement);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

struct Metrics {
    int radius, diameter, support;
};

inline Metrics metrics(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    int rad = 1 << 30, diam = 0;
    for (int v = 0; v < n; ++v) {
        auto d = bfs(a, v);
        int e = *std::max_element(d.begin(), d.end());
        rad = std::min(rad, e);
        diam = std::max(diam, e);
    }
    int supp = 0;
    for (int v = 0; v < n; ++v) {
        bool s = false;
        for (int u = 0; u < n; ++u)
            if (a[v][u]) {
                int deg = 0;
                for (int w = 0; w < n; ++w) deg += a[u][w];
                if (deg == 1) s = true;
            }
        supp += s;
    }
    return {rad, diam, supp};
}

// Shortest cycle length, 0 if acyclic.
inline int girth(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(n, -1), par(n, -1);
        std::deque<int> q{s};
        d[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < n; ++v) {
                if (!a[u][v]) continue;
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    par[v] = u;
                    q.push_back(v);
                } else if (par[u] != v) {
                    int len = d[u] + d[v] + 1;
                    if (!best || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline bool dominates(const Matrix& a, std::uint64_t set, bool complement) {
    const int n = static_cast<int>(a.size());
    for (int v = 0; v < n; ++v) {
        if (set >> v & 1) continue;
        bool hit = false;
        for (int u = 0; u < n && !hit; ++u)
            if ((set >> u & 1) && u != v && (complement ? !a[u][v] : a[u][v])) hit = true;
        if (!hit) return false;
    }
    return true;
}

inline bool global_dominates(const Matrix& a, std::uint64_t set) {
    return set != 0 && dominates(a, set, false) && dominates(a, set, true);
}

// Minimum over all 2^n subsets.
inline int gamma_g(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    int best = n;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
        if (__builtin_popcountll(s) < best && global_dominates(a, s)) best = __builtin_popcountll(s);
    return best;
}

inline int gamma(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    int best = n;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
        if (__builtin_popcountll(s) < best && dominates(a, s, false)) best = __builtin_popcountll(s);
    return best;
}

inline std::uint64_t mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

// pn(v, S) = { u : N(u) ∩ S = {v} }, open neighborhoods, evaluated by definition.
inline std::vector<int> private_neighbors(const Matrix& a, int v, std::uint64_t s, bool complement) {
    const int n = static_cast<int>(a.size());
    std::vector<int> out;
    for (int u = 0; u < n; ++u) {
        std::uint64_t nbr_in_s = 0;
        for (int w = 0; w < n; ++w)
            if (w != u && (s >> w & 1) && (complement ? !a[u][w] : a[u][w])) nbr_in_s |= std::uint64_t{1} << w;
        if (nbr_in_s == (std::uint64_t{1} << v)) out.push_back(u);
    }
    return out;
}

// Vertices GAD(v) counts, rebuilt from D alone: v, its G-neighbors with no
// G-neighbor in D, and its non-neighbors with no non-neighbor in D.
inline std::uint64_t gad_cover(const Matrix& a, std::uint64_t d, int v) {
    const int n = static_cast<int>(a.size());
    auto in_a = [&](int x) {
        if (d >> x & 1) return false;
        for (int y = 0; y < n; ++y)
            if ((d >> y & 1) && a[x][y]) return false;
        return true;
    };
    auto in_b = [&](int x) {
        if (d >> x & 1) return false;
        for (int y = 0; y < n; ++y)
            if ((d >> y & 1) && y != x && !a[x][y]) return false;
        return true;
    };
    std::uint64_t cover = std::uint64_t{1} << v;
    for (int x = 0; x < n; ++x) {
        if (x == v) continue;
        if ((a[v][x] && in_a(x)) || (!a[v][x] && in_b(x))) cover |= std::uint64_t{1} << x;
    }
    return cover;
}

inline int gad(const Matrix& a, std::uint64_t d, int v) { return __builtin_popcountll(gad_cover(a, d, v)); }

}  // namespace oracle
