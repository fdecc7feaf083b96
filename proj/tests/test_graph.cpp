#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace tvk;
using test::cycle_graph;
using test::path_graph;
using test::star_graph;

namespace {

using Ids = std::vector<std::size_t>;

// Closure by repeated pairwise intervals until nothing changes; no tracing.
Ids naive_hull(const UGraph& g, const Ids& a) {
    std::set<std::size_t> h(a.begin(), a.end());
    for (bool grew = true; grew;) {
        grew = false;
        const Ids cur(h.begin(), h.end());
        for (std::size_t x : cur)
            for (std::size_t y : cur)
                for (std::size_t w : interval(g, x, y)) grew |= h.insert(w).second;
    }
    return {h.begin(), h.end()};
}

bool subset(const Ids& a, const Ids& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Ids random_multiset(std::size_t n, std::size_t size, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    Ids u(size);
    for (auto& v : u) v = pick(rng);
    return u;
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("graph construction errors") {
        UGraph g(3);
        g.add_edge(0, 1);
        CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
        CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
        CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
        CHECK_FALSE(g.connected());
        CHECK_THROWS_AS(interval(g, 0, 2), InputError);
        CHECK(bfs_distances(g, 0)[2] == unreachable);
    }

    TEST_CASE("interval worked examples") {
        CHECK(interval(path_graph(3), 0, 2) == Ids{0, 1, 2});
        CHECK(interval(cycle_graph(4), 0, 2) == Ids{0, 1, 2, 3});
        CHECK(interval(cycle_graph(4), 1, 1) == Ids{1});
        CHECK(interval(cycle_graph(5), 0, 2) == Ids{0, 1, 2});
    }

    TEST_CASE("geodetic hull worked examples and traces") {
        CHECK(geodetic_hull(cycle_graph(5), Ids{3}) == Ids{3});
        CHECK(geodetic_hull(cycle_graph(4), Ids{0, 2}) == Ids{0, 1, 2, 3});
        CHECK(geodetic_hull(cycle_graph(6), Ids{0, 2}) == Ids{0, 1, 2});

        // Endpoints of a path close over the whole path in one step.
        const auto t = geodetic_hull_trace(path_graph(5), Ids{0, 4, 4});
        CHECK(t.members == Ids{0, 1, 2, 3, 4});
        CHECK(t.entry == Ids{0, 1, 1, 1, 0});
        CHECK(t.steps == 1);

        // 6-cycle plus a detour 0-6-7-3 of the same length as either arc.
        UGraph g = cycle_graph(6);
        g.add_vertex();
        g.add_vertex();
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        g.add_edge(7, 3);
        const auto two = geodetic_hull_trace(g, Ids{1, 3});
        CHECK(two.members == naive_hull(g, {1, 3}));
    }

    TEST_CASE("hull agrees with naive closure and satisfies the axioms") {
        std::mt19937_64 rng(53);
        for (int round = 0; round < 200; ++round) {
            const std::size_t n = 2 + round % 25;
            const UGraph g = round % 2 ? test::random_cactus(n, rng) : test::random_tree(n, rng);
            Ids a = random_multiset(n, 1 + round % 4, rng);
            const Ids h = geodetic_hull(g, a);
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            CHECK(h == naive_hull(g, a));
            CHECK(subset(a, h));
            CHECK(geodetic_hull(g, h) == h);
            Ids bigger = a;
            bigger.push_back(round % n);
            CHECK(subset(h, geodetic_hull(g, bigger)));
            const auto trace = geodetic_hull_trace(Distances(g), a);
            CHECK(trace.members == h);
            // Every vertex entering at step s > 0 lies between two earlier members.
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (trace.entry[i] == 0) continue;
                bool found = false;
                for (std::size_t x = 0; x < h.size() && !found; ++x)
                    for (std::size_t y = x + 1; y < h.size() && !found; ++y) {
                        if (trace.entry[x] >= trace.entry[i] || trace.entry[y] >= trace.entry[i]) continue;
                        const Ids iv = interval(g, h[x], h[y]);
                        found = std::binary_search(iv.begin(), iv.end(), h[i]);
                    }
                CHECK(found);
            }
        }
    }

    TEST_CASE("tree centerpoint worked examples") {
        CHECK(tree_centerpoint(star_graph(4), Ids{1, 2, 3, 4}) == 0);
        const std::size_t p = tree_centerpoint(path_graph(5), Ids{0, 4});
        CHECK(max_component_load(path_graph(5), Ids{0, 4}, Ids{p}) <= 1);

        std::mt19937_64 rng(59);
        const UGraph t = test::random_tree(200, rng);
        const Ids u = random_multiset(200, 50, rng);
        CHECK(max_component_load(t, u, Ids{tree_centerpoint(t, u)}) <= 25);

        CHECK_THROWS_AS(tree_centerpoint(cycle_graph(4), Ids{0, 1}), InputError);
    }

    TEST_CASE("tree tverberg worked examples") {
        const UGraph star = star_graph(4);
        auto c = tree_tverberg(star, Ids{1, 2, 3, 4});
        CHECK(c.witness == 0);
        CHECK(c.parts.size() == 2);
        CHECK(verify_geodetic_certificate(star, Ids{1, 2, 3, 4}, c));

        const UGraph path = path_graph(5);
        c = tree_tverberg(path, Ids{0, 1, 3, 4});
        // Any vertex leaving at most two elements per component works; the
        // walk from vertex 0 stops at 1.
        CHECK(max_component_load(path, Ids{0, 1, 3, 4}, Ids{c.witness}) <= 2);
        CHECK(c.parts.size() == 2);
        CHECK(verify_geodetic_certificate(path, Ids{0, 1, 3, 4}, c));

        const auto odd = tree_tverberg(path, Ids{0, 1, 4});
        CHECK(odd.size_adjusted);
        CHECK(odd.k_target == 1);
        CHECK(verify_geodetic_certificate(path, Ids{0, 1, 4}, odd));
    }

    TEST_CASE("tree tverberg on random trees with repeated elements") {
        std::mt19937_64 rng(61);
        for (int round = 0; round < 150; ++round) {
            const std::size_t n = 1 + round * 3;
            const UGraph t = test::random_tree(n, rng);
            const std::size_t k = 1 + round % 9;
            const Ids u = random_multiset(n, 2 * k, rng);
            auto c = tree_tverberg(t, u);
            CHECK(c.parts.size() == k);
            attach_hull_traces(t, c);
            std::string why;
            CHECK_MESSAGE(verify_geodetic_certificate(t, u, c, &why), why);
        }
    }

    TEST_CASE("geodetic certificate mutations are rejected") {
        const UGraph star = star_graph(4);
        auto c = tree_tverberg(star, Ids{1, 2, 3, 4});
        attach_hull_traces(star, c);
        REQUIRE(verify_geodetic_certificate(star, Ids{1, 2, 3, 4}, c));
        auto wrong = c;
        wrong.witness = 1;
        CHECK_FALSE(verify_geodetic_certificate(star, Ids{1, 2, 3, 4}, wrong));
        auto dup = c;
        dup.parts[0].push_back(dup.parts[1][0]);
        CHECK_FALSE(verify_geodetic_certificate(star, Ids{1, 2, 3, 4}, dup));
        auto trace = c;
        trace.hull_traces[0].members.pop_back();
        CHECK_FALSE(verify_geodetic_certificate(star, Ids{1, 2, 3, 4}, trace));
        auto range = c;
        range.parts[0][0] = 42;
        CHECK_FALSE(verify_geodetic_certificate(star, Ids{1, 2, 3, 4}, range));
    }

    TEST_CASE("is_cactus worked examples") {
        std::mt19937_64 rng(67);
        CHECK(is_cactus(test::random_tree(30, rng)));
        CHECK(is_cactus(cycle_graph(7)));
        UGraph k4(4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) k4.add_edge(a, b);
        CHECK_FALSE(is_cactus(k4));
        UGraph theta = cycle_graph(4);
        theta.add_edge(0, 2);
        CHECK_FALSE(is_cactus(theta));
        CHECK_FALSE(is_cactus(UGraph(2)));
        for (int i = 0; i < 20; ++i) CHECK(is_cactus(test::random_cactus(5 + i * 7, rng)));
    }

    TEST_CASE("cactus decomposition worked examples") {
        const UGraph path = path_graph(4);
        auto d = cactus_decompose(path);
        CHECK(d.split_graph.edges() == path.edges());
        CHECK(d.block_tree.size() == 4);
        CHECK(d.block_tree.edge_count() == 3);

        // Triangles 0-1-2 and 0-3-4 sharing vertex 0.
        UGraph bow(5);
        for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})
            bow.add_edge(a, b);
        d = cactus_decompose(bow, Ids{0, 0, 1});
        CHECK(d.split_graph.size() == 7);
        CHECK(d.red[0]);
        CHECK(std::count(d.original.begin(), d.original.end(), 0u) == 3);
        CHECK(d.lift == Ids{0, 1, 2, 3, 4});
        REQUIRE(d.block_tree.size() == 3);
        CHECK(d.block_tree.edge_count() == 2);
        CHECK(d.block_tree.neighbors(d.block_of[0]).size() == 2);  // red copy in the middle
        CHECK(d.weight[d.block_of[0]] == 2);
        CHECK(is_tree(d.block_tree));

        d = cactus_decompose(cycle_graph(6));
        CHECK(d.block_tree.size() == 1);
        CHECK(d.cycle[0].size() == 6);

        CHECK_THROWS_AS(cactus_decompose(UGraph(3)), InputError);
    }

    TEST_CASE("cactus decomposition invariants on random cacti") {
        std::mt19937_64 rng(71);
        for (int round = 0; round < 60; ++round) {
            const UGraph g = test::random_cactus(3 + round * 3, rng);
            const Ids u = random_multiset(g.size(), 1 + round % 11, rng);
            const auto d = cactus_decompose(g, u);
            CHECK(is_tree(d.block_tree));
            std::size_t total = 0;
            for (std::size_t w : d.weight) total += w;
            CHECK(total == u.size());
            // Contracting split copies gives back the input graph.
            std::set<std::pair<std::size_t, std::size_t>> back;
            for (auto [a, b] : d.split_graph.edges()) {
                const std::size_t x = d.original[a], y = d.original[b];
                if (x != y) back.insert({std::min(x, y), std::max(x, y)});
            }
            const auto orig = g.edges();
            CHECK(std::set<std::pair<std::size_t, std::size_t>>(orig.begin(), orig.end()) == back);
            // No split vertex lies on two cycles.
            std::vector<int> on_cycle(d.split_graph.size(), 0);
            for (const auto& cyc : d.cycle)
                for (std::size_t v : cyc) ++on_cycle[v];
            CHECK(std::all_of(on_cycle.begin(), on_cycle.end(), [](int c) { return c <= 1; }));
        }
    }

    TEST_CASE("cactus separator pair") {
        const UGraph c6 = cycle_graph(6);
        const Ids all{0, 1, 2, 3, 4, 5};
        const auto [x, y] = cactus_separator_pair(c6, all);
        CHECK(max_component_load(c6, all, Ids{x, y}) <= 3);

        const UGraph star = star_graph(6);
        const Ids leaves{1, 2, 3, 4, 5, 6};
        const auto [p, q] = cactus_separator_pair(star, leaves);
        CHECK(max_component_load(star, leaves, Ids{p, q}) <= 3);
        CHECK((p == 0 || q == 0));

        std::mt19937_64 rng(73);
        for (int round = 0; round < 100; ++round) {
            const UGraph g = test::random_cactus(round == 0 ? 100 : 2 + round, rng);
            const std::size_t k = 1 + round % 6;
            const Ids u = random_multiset(g.size(), 4 * k - 2, rng);
            const auto [a, b] = cactus_separator_pair(g, u);
            CHECK(max_component_load(g, u, Ids{a, b}) <= 2 * k - 1);
        }
    }

    TEST_CASE("cactus tverberg with oracle cross-check") {
        const UGraph c6 = cycle_graph(6);
        const Ids all{0, 1, 2, 3, 4, 5};
        auto c = cactus_tverberg(c6, all);
        CHECK(c.parts.size() >= 2);
        CHECK(verify_geodetic_certificate(c6, all, c));
        CHECK(brute_force_tverberg(c6, all, 2));

        std::mt19937_64 rng(79);
        for (int round = 0; round < 120; ++round) {
            const UGraph g = test::random_cactus(2 + round % 14, rng);
            const std::size_t k = 1 + round % 3;
            const Ids u = random_multiset(g.size(), 4 * k - 2, rng);
            auto cert = cactus_tverberg(g, u);
            std::string why;
            CHECK_MESSAGE(verify_geodetic_certificate(g, u, cert, &why), why);
            CHECK(cert.parts.size() >= k);
            if (u.size() <= 10) CHECK(brute_force_tverberg(g, u, k));
        }

        // Repeated vertex with multiplicity two.
        const Ids rep{2, 2, 0, 3, 4, 5};
        c = cactus_tverberg(c6, rep);
        CHECK(verify_geodetic_certificate(c6, rep, c));
        CHECK(c.parts.size() >= 2);

        const UGraph star = star_graph(6);
        const Ids leaves{1, 2, 3, 4, 5, 6};
        c = cactus_tverberg(star, leaves);
        CHECK(verify_geodetic_certificate(star, leaves, c));
        CHECK(c.parts.size() >= 2);
    }

    TEST_CASE("brute force radon worked examples") {
        auto r = brute_force_radon(path_graph(3), Ids{0, 2});
        CHECK_FALSE(r.exists);
        CHECK(r.count == 0);
        r = brute_force_radon(cycle_graph(4), Ids{0, 1, 2, 3});
        CHECK(r.exists);
        // Opposite pairs, and each vertex against the other three.
        CHECK(r.count == 5);
        CHECK_FALSE(brute_force_radon(path_graph(3), Ids{1}).exists);
        CHECK_THROWS_AS(brute_force_radon(path_graph(3), Ids{1, 1}), InputError);
        Ids many(30);
        std::iota(many.begin(), many.end(), 0);
        CHECK_THROWS_AS(brute_force_radon(path_graph(30), many), CapExceeded);
    }

    TEST_CASE("brute force tverberg worked examples") {
        for (std::size_t k = 2; k <= 4; ++k) {
            const UGraph star = star_graph(2 * k);
            Ids even, odd;
            for (std::size_t v = 1; v <= 2 * k; ++v) even.push_back(v);
            odd.assign(even.begin(), even.end() - 1);
            CHECK(brute_force_tverberg(star, even, k));
            CHECK_FALSE(brute_force_tverberg(star, odd, k));
        }
        CHECK(brute_force_tverberg(path_graph(4), Ids{0, 3}, 1));
        CHECK_FALSE(brute_force_tverberg(path_graph(4), Ids{0, 3}, 3));
        CHECK_THROWS_AS(brute_force_tverberg(path_graph(20), Ids(13, 0), 2), CapExceeded);
    }
}
