#include <doctest.h>

#include "support.hpp"

using namespace tvk;
using tvk::test::pt;

namespace {

Rational dot_row(const std::vector<Rational>& row, const std::vector<Rational>& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * x[i];
    return s;
}

// z inside triangle abc (closed) by orientation signs.
bool in_triangle(const Point& z, const Point& a, const Point& b, const Point& c) {
    auto orient = [](const Point& p, const Point& q, const Point& r) {
        return sgn((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]));
    };
    const int s1 = orient(a, b, z), s2 = orient(b, c, z), s3 = orient(c, a, z);
    const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0, has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    if (has_neg && has_pos) return false;
    if (has_neg || has_pos) return true;
    // Degenerate triangle: z must lie on one of the segments.
    auto on_segment = [](const Point& p, const Point& q, const Point& r) {
        return std::min(p[0], q[0]) <= r[0] && r[0] <= std::max(p[0], q[0]) && std::min(p[1], q[1]) <= r[1] &&
               r[1] <= std::max(p[1], q[1]);
    };
    return on_segment(a, b, z) || on_segment(b, c, z) || on_segment(a, c, z);
}

std::size_t rank_of(Matrix a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < (a.empty() ? 0 : a[0].size()) && rank < a.size(); ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && sgn(a[piv][col]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            const Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_SUITE("numeric") {
    TEST_CASE("rationals parse exactly and canonically") {
        CHECK(parse_rational("6/4") == Rational(3, 2));
        CHECK(parse_rational(" -1.25 ") == Rational(-5, 4));
        CHECK(parse_rational("3e-2") == Rational(3, 100));
        CHECK(parse_rational("0.1") == Rational(1, 10));
        CHECK_THROWS_AS(parse_rational("-2/-1"), InputError);
        CHECK(to_string(parse_rational("10/4")) == "5/2");
        CHECK_THROWS_AS(parse_rational("1/0"), InputError);
        CHECK_THROWS_AS(parse_rational("abc"), InputError);
        CHECK_THROWS_AS(parse_rational(""), InputError);
        CHECK_THROWS_AS(parse_rational("1e999999999"), InputError);
        CHECK(ceil_integer(Rational(75, 2)) == 38);
        CHECK(ceil_integer(Rational(-3, 2)) == -1);
    }

    TEST_CASE("point set ids survive removal") {
        PointSet s(1, {pt({0}), pt({1}), pt({2}), pt({3})});
        const std::size_t gone[] = {1};
        s.remove_ids(gone);
        CHECK(s.size() == 3);
        CHECK(s.ids() == std::vector<std::size_t>{0, 2, 3});
        CHECK(s.by_id(3) == pt({3}));
        CHECK_FALSE(s.contains_id(1));
        CHECK(s.add(pt({9})) == 4);
        CHECK_THROWS_AS(s.add(pt({1, 2})), InputError);
    }

    TEST_CASE("solve_linear worked examples") {
        auto one = solve_linear({{1}}, {2});
        REQUIRE(one.solution);
        CHECK(*one.solution == std::vector<Rational>{2});
        CHECK(one.null_basis.empty());

        auto two = solve_linear({{1, 1}}, {1});
        REQUIRE(two.solution);
        CHECK(dot_row({1, 1}, *two.solution) == 1);
        REQUIRE(two.null_basis.size() == 1);
        CHECK(dot_row({1, 1}, two.null_basis[0]) == 0);
        CHECK(two.null_basis[0] != std::vector<Rational>{0, 0});

        CHECK_FALSE(solve_linear({{1, 0}, {0, 1}, {1, 1}}, {1, 1, 3}).solution);
    }

    TEST_CASE("solve_linear residuals are exactly zero on random systems") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> coef(-5, 5), dim(1, 6);
        for (int round = 0; round < 200; ++round) {
            const int m = dim(rng), n = dim(rng);
            Matrix a(m, std::vector<Rational>(n));
            std::vector<Rational> x0(n), b(m);
            for (auto& row : a)
                for (auto& v : row) v = coef(rng);
            for (auto& v : x0) {
                v = Rational(coef(rng), 1 + std::abs(coef(rng)));
                v.canonicalize();
            }
            for (int i = 0; i < m; ++i) b[i] = dot_row(a[i], x0);
            const auto sol = solve_linear(a, b);
            REQUIRE(sol.solution);
            for (int i = 0; i < m; ++i) CHECK(dot_row(a[i], *sol.solution) == b[i]);
            for (const auto& v : sol.null_basis)
                for (int i = 0; i < m; ++i) CHECK(dot_row(a[i], v) == 0);
            CHECK(sol.null_basis.size() + rank_of(a) == static_cast<std::size_t>(n));
        }
    }

    TEST_CASE("hull_membership worked examples") {
        const PointSet seg(2, {pt({1, 0}), pt({-1, 0})});
        auto in = hull_membership(pt({0, 0}), seg);
        REQUIRE(in.inside);
        CHECK(is_valid_combination(in.combination, seg, pt({0, 0})));
        for (const auto& [id, c] : in.combination.support) CHECK(c == Rational(1, 2));

        const PointSet unit(2, {pt({0, 0}), pt({1, 0})});
        auto out = hull_membership(pt({2, 0}), unit);
        CHECK_FALSE(out.inside);
        REQUIRE(out.separator);
        CHECK(sgn(out.separator->eval(pt({2, 0}))) < 0);
        for (const auto& p : unit.points()) CHECK(sgn(out.separator->eval(p)) > 0);

        const PointSet tri(2, {pt({0, 0}), pt({2, 0}), pt({0, 2})});
        auto edge = hull_membership(pt({1, 1}), tri);
        REQUIRE(edge.inside);
        CHECK(is_valid_combination(edge.combination, tri, pt({1, 1})));
        std::vector<std::pair<std::size_t, Rational>> expect{{1, Rational(1, 2)}, {2, Rational(1, 2)}};
        auto got = edge.combination.support;
        std::sort(got.begin(), got.end());
        CHECK(got == expect);

        CHECK_THROWS_AS(hull_membership(pt({0}), tri), InputError);
    }

    TEST_CASE("hull_membership agrees with a triangle-containment oracle") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> count(1, 7);
        for (int round = 0; round < 300; ++round) {
            const PointSet y = test::random_points(2, count(rng), rng, 6);
            const Point z = test::random_points(2, 1, rng, 7)[0];
            bool oracle = false;
            for (std::size_t a = 0; a < y.size() && !oracle; ++a)
                for (std::size_t b = a; b < y.size() && !oracle; ++b)
                    for (std::size_t c = b; c < y.size() && !oracle; ++c) oracle = in_triangle(z, y[a], y[b], y[c]);
            const auto r = hull_membership(z, y);
            CHECK(r.inside == oracle);
            if (r.inside) {
                CHECK(is_valid_combination(r.combination, y, z));
                CHECK(evaluate(r.combination, y) == z);
            } else {
                REQUIRE(r.separator);
                CHECK(sgn(r.separator->eval(z)) < 0);
                for (const auto& p : y.points()) CHECK(sgn(r.separator->eval(p)) > 0);
            }
        }
    }

    TEST_CASE("hull_membership in higher dimension with degenerate inputs") {
        std::mt19937_64 rng(5);
        for (int round = 0; round < 100; ++round) {
            const std::size_t d = 3 + round % 3;
            PointSet y = test::random_points(d, 6, rng, 4);
            y.add(y[0]);  // duplicate
            // Random convex combination of the first three points is inside.
            Point z(d, Rational(0));
            for (std::size_t j = 0; j < d; ++j) z[j] = (y[0][j] + y[1][j] * 2 + y[2][j] * 3) / 6;
            const auto r = hull_membership(z, y);
            REQUIRE(r.inside);
            CHECK(is_valid_combination(r.combination, y, z));
            // Far away is outside with a checkable separator.
            Point far(d, Rational(100));
            const auto o = hull_membership(far, y);
            REQUIRE_FALSE(o.inside);
            CHECK(sgn(o.separator->eval(far)) < 0);
            for (const auto& p : y.points()) CHECK(sgn(o.separator->eval(p)) > 0);
        }
    }

    TEST_CASE("invalid combinations are rejected") {
        const PointSet seg(1, {pt({0}), pt({2})});
        ConvexCombination cc{{{0, Rational(1, 2)}, {1, Rational(1, 2)}}};
        CHECK(is_valid_combination(cc, seg, pt({1})));
        cc.support[0].second = Rational(1, 3);
        CHECK_FALSE(is_valid_combination(cc, seg, pt({1})));
        ConvexCombination neg{{{0, Rational(-1)}, {1, Rational(2)}}};
        CHECK_FALSE(is_valid_combination(neg, seg, pt({4})));
        ConvexCombination dup{{{0, Rational(1, 2)}, {0, Rational(1, 2)}}};
        CHECK_FALSE(is_valid_combination(dup, seg, pt({0})));
    }
}
