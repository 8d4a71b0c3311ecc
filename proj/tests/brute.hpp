#pragma once

// Exhaustive reference implementations, independent of the library. Only
// usable for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Seq = std::vector<int>;

inline Seq sorted_desc(Seq v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Calls f(degrees, edges) for every labelled simple graph on n vertices.
template <class F>
void for_each_graph(int n, F&& f) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<std::pair<int, int>> edges;
    Seq deg(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        std::fill(deg.begin(), deg.end(), 0);
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (mask >> e & 1) {
                edges.push_back(slots[e]);
                ++deg[static_cast<std::size_t>(slots[e].first)];
                ++deg[static_cast<std::size_t>(slots[e].second)];
            }
        f(deg, edges);
    }
}

inline bool two_colourable(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                auto& cv = colour[static_cast<std::size_t>(v)];
                if (cv < 0) {
                    cv = 1 - colour[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (cv == colour[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct Census {
    std::set<Seq> graphical;  // zero-free, nonincreasing
    std::set<Seq> bipartite;  // subset realizable by a bipartite graph
};

// Every zero-free degree sequence of length n, by building every graph.
inline Census census(int n) {
    Census c;
    for_each_graph(n, [&](const Seq& deg, const std::vector<std::pair<int, int>>& edges) {
        if (std::find(deg.begin(), deg.end(), 0) != deg.end()) return;
        Seq d = sorted_desc(deg);
        c.graphical.insert(d);
        if (!c.bipartite.count(d) && two_colourable(n, edges)) c.bipartite.insert(d);
    });
    return c;
}

// Is there a 0/1 matrix with row sums a and column sums b?
inline bool bipartite_realizable(const Seq& a, const Seq& b) {
    long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return false;
    Seq cap = b;
    std::function<bool(std::size_t)> row = [&](std::size_t i) -> bool {
        if (i == a.size()) return std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; });
        // choose a[i] distinct columns with spare capacity
        std::function<bool(std::size_t, int)> pick = [&](std::size_t j, int left) -> bool {
            if (left == 0) return row(i + 1);
            if (j == cap.size() || static_cast<int>(cap.size() - j) < left) return false;
            if (cap[j] > 0) {
                --cap[j];
                if (pick(j + 1, left - 1)) return true;
                ++cap[j];
            }
            return pick(j + 1, left);
        };
        return pick(0, a[i]);
    };
    return row(0);
}

// Part k counts parts >= k, by definition.
inline Seq conjugate(const Seq& p) {
    Seq out;
    for (int k = 1;; ++k) {
        int c = 0;
        for (int x : p) c += x >= k;
        if (c == 0) break;
        out.push_back(c);
    }
    return out;
}

// Literal Havel–Hakimi: repeatedly delete a largest term d and decrement the
// next d largest; count the zeros that remain.
inline int residue(Seq d) {
    for (;;) {
        d = sorted_desc(d);
        if (d.empty() || d[0] == 0) return static_cast<int>(d.size());
        const int top = d[0];
        d.erase(d.begin());
        for (int i = 0; i < top; ++i) --d[static_cast<std::size_t>(i)];
    }
}

// Some positional subset sums to half the total.
inline bool has_even_split(const Seq& d) {
    long total = 0;
    for (int x : d) total += x;
    if (total % 2) return false;
    for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
        long s = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (mask >> i & 1) s += d[i];
        if (s * 2 == total) return true;
    }
    return false;
}

// Distinct submultisets (nonincreasing) of pool with the given sum and size.
inline std::set<Seq> combinations(const Seq& pool, long target, int lo, int hi) {
    std::set<Seq> out;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        Seq pick;
        long s = 0;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) {
                pick.push_back(pool[i]);
                s += pool[i];
            }
        const int k = static_cast<int>(pick.size());
        if (s == target && k >= lo && k <= hi) out.insert(sorted_desc(pick));
    }
    return out;
}

// Emission order for the smallest-terms-first stream: more terms first, then
// more copies of the smallest value, then of the next smallest, and so on.
inline bool smallest_terms_before(const Seq& x, const Seq& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    int top = 0;
    for (int v : x) top = std::max(top, v);
    for (int v : y) top = std::max(top, v);
    for (int v = 0; v <= top; ++v) {
        const auto cx = std::count(x.begin(), x.end(), v);
        const auto cy = std::count(y.begin(), y.end(), v);
        if (cx != cy) return cx > cy;
    }
    return false;
}

// Random partition with up to max_len parts, each in [1, max_part].
inline Seq random_partition(std::mt19937_64& rng, int max_len, int max_part) {
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    Seq p(static_cast<std::size_t>(len));
    for (int& x : p) x = std::uniform_int_distribution<int>(1, max_part)(rng);
    return sorted_desc(p);
}

inline const Census& cached_census(int n) {
    static std::map<int, Census> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, census(n)).first;
    return it->second;
}

}  // namespace brute
