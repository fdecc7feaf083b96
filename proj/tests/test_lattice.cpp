#include <doctest.h>

#include "support.hpp"
#include "tverberg/lattice.hpp"

using namespace tvk;
using tvk::test::pt;

TEST_SUITE("lattice") {
    TEST_CASE("integer centerpoint worked examples") {
        const PointSet two(1, {pt({0}), pt({1})});
        const auto c = integer_centerpoint_bruteforce(two);
        CHECK((c == LatticePoint{0} || c == LatticePoint{1}));
        CHECK(tukey_depth_exact(to_point(c), two) >= 1);

        const PointSet sq(2, {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({2, 2})});
        CHECK(integer_centerpoint_bruteforce(sq) == LatticePoint{1, 1});
        CHECK(tukey_depth_exact(pt({1, 1}), sq) == 2);

        const PointSet same(2, std::vector<Point>(5, pt({4, -3})));
        CHECK(integer_centerpoint_bruteforce(same) == LatticePoint{4, -3});

        CHECK_THROWS_AS(integer_centerpoint_bruteforce(PointSet(2, {Point{Rational(1, 2), Rational(0)}})), InputError);
        CHECK_THROWS_AS(integer_centerpoint_bruteforce(PointSet(3, {pt({0, 0, 0})})), UnsupportedDimension);
        CHECK_THROWS_AS(to_lattice(Point{Rational(1, 3)}), InputError);
        CHECK(is_integral(pt({3, -7})));
    }

    TEST_CASE("lattice depth floor on random sets") {
        std::mt19937_64 rng(107);
        for (int round = 0; round < 60; ++round) {
            const std::size_t d = 1 + round % 2;
            const std::size_t n = 1 + round % 30;
            const PointSet s = test::random_points(d, n, rng, round % 3 ? 4 : 25);
            const Point c = to_point(integer_centerpoint_bruteforce(s));
            const std::size_t depth = tukey_depth_exact(c, s);
            CHECK(depth * (std::size_t{1} << d) >= n);
            CHECK(depth == test::depth_oracle(c, s));
            // It is the lexicographically first deepest point of the box.
            const long r = round % 3 ? 4 : 25;
            LatticePoint first;
            std::size_t top = 0;
            for (long x = -r; x <= r; ++x)
                for (long y = -r; y <= (d == 1 ? -r : r); ++y) {
                    const Point q = d == 1 ? pt({x}) : pt({x, y});
                    const std::size_t dq = tukey_depth_exact(q, s);
                    if (dq > top) top = dq, first = to_lattice(q);
                }
            CHECK(depth == top);
            CHECK(to_lattice(c) == first);
        }
    }

    TEST_CASE("sampled integer centerpoint") {
        std::mt19937_64 rng(109);
        const PointSet s = test::random_points(2, 60, rng, 20);
        const Rational lambda(1, 16), eps(1, 10);
        CHECK(integer_centerpoint_sampled(s, lambda, eps, 4) == integer_centerpoint_sampled(s, lambda, eps, 4));
        CHECK_THROWS_AS(integer_centerpoint_sampled(s, Rational(1, 8), eps, 4), InputError);
        CHECK_THROWS_AS(integer_centerpoint_sampled(s, lambda, Rational(0), 4), InputError);
        const Point c = to_point(integer_centerpoint_sampled(s, lambda, eps, 4));
        CHECK(16 * tukey_depth_exact(c, s) >= 3 * 60);
    }

    TEST_CASE("lattice targets and pipeline") {
        CHECK(theorem3_target(40, 1, Rational(1, 8)) == 15);
        CHECK(theorem3_target(160, 2, Rational(1, 16)) == 15);

        std::vector<Point> line;
        for (int i = 0; i < 40; ++i) line.push_back(pt({(i * 13) % 41 - 20}));
        const PointSet s1(1, line);
        const auto r1 = theorem3_pipeline(s1, Rational(1, 8), Rational(1, 10), 3);
        CHECK(r1.k_target == 15);
        CHECK(r1.k_achieved >= 15);
        CHECK(is_integral(r1.certificate.witness));
        CHECK(verify_certificate(r1.certificate, s1));

        const PointSet same(2, std::vector<Point>(9, pt({2, 5})));
        const auto r2 = theorem3_pipeline(same, Rational(1, 16), Rational(1, 10), 3);
        CHECK(r2.k_achieved == 9);
        CHECK(r2.certificate.witness == pt({2, 5}));
        CHECK(r2.center.method == CenterMethod::exact_sample);
    }
}
