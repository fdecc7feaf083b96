#pragma once

#include <random>
#include <vector>

#include "tverberg/euclid.hpp"
#include "tverberg/graph.hpp"

namespace tvk::test {

inline Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.emplace_back(x);
    return p;
}

inline PointSet random_points(std::size_t dim, std::size_t n, std::mt19937_64& rng, long range = 1000) {
    std::uniform_int_distribution<long> coord(-range, range);
    std::vector<Point> pts(n, Point(dim));
    for (auto& p : pts)
        for (auto& c : p) c = coord(rng);
    return PointSet(dim, std::move(pts));
}

// Independent depth oracle. Every open cell of the arrangement of critical
// normals contains a + b for its two bounding critical normals, or one of +-c
// when the arrangement degenerates to a single line.
inline std::size_t depth_oracle(const Point& p, const PointSet& x) {
    if (p.size() == 1) {
        std::size_t lo = 0, hi = 0;
        for (const auto& q : x.points()) {
            lo += q[0] <= p[0];
            hi += q[0] >= p[0];
        }
        return std::min(lo, hi);
    }
    std::vector<std::pair<Rational, Rational>> rays, crit, cand;
    for (const auto& q : x.points())
        if (q[0] != p[0] || q[1] != p[1]) rays.emplace_back(q[0] - p[0], q[1] - p[1]);
    for (const auto& [a, b] : rays) {
        crit.emplace_back(-b, a);
        crit.emplace_back(b, -a);
        cand.emplace_back(a, b);
        cand.emplace_back(-a, -b);
    }
    for (std::size_t i = 0; i < crit.size(); ++i)
        for (std::size_t j = i + 1; j < crit.size(); ++j) {
            Rational s = crit[i].first + crit[j].first, t = crit[i].second + crit[j].second;
            if (sgn(s) != 0 || sgn(t) != 0) cand.emplace_back(s, t);
        }
    std::size_t best = x.size();
    for (const auto& [ux, uy] : cand) {
        std::size_t count = 0;
        for (const auto& q : x.points()) count += sgn((q[0] - p[0]) * ux + (q[1] - p[1]) * uy) >= 0;
        best = std::min(best, count);
    }
    return best;
}

inline UGraph random_tree(std::size_t n, std::mt19937_64& rng) {
    UGraph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    return g;
}

// Attaches cycles and pendant edges to random existing vertices; every new edge
// closes at most one new cycle, so the result is a cactus.
inline UGraph random_cactus(std::size_t n, std::mt19937_64& rng) {
    UGraph g(1);
    while (g.size() < n) {
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng);
        const std::size_t room = n - g.size();
        const std::size_t len = std::min<std::size_t>(room, std::uniform_int_distribution<std::size_t>(0, 6)(rng));
        if (len < 2) {
            g.add_edge(at, g.add_vertex());
            continue;
        }
        std::size_t prev = at;
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, at);
    }
    return g;
}

inline UGraph path_graph(std::size_t n) {
    UGraph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline UGraph cycle_graph(std::size_t n) {
    UGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline UGraph star_graph(std::size_t leaves) {
    UGraph g(leaves + 1);
    for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace tvk::test
