#include <algorithm>
#include <array>
#include <limits>

#include "tverberg/euclid.hpp"

namespace tvk {

namespace {

using Wide = __int128;

int sign_of(Wide v) { return (v > 0) - (v < 0); }
int sign_of(const Integer& v) { return sgn(v); }

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
bool is_zero(const Vec3<T>& a) {
    return sign_of(a[0]) == 0 && sign_of(a[1]) == 0 && sign_of(a[2]) == 0;
}

// Closed halfspaces through the query point are indexed by their inward
// normal u; a ray c counts iff <c,u> >= 0. The minimum is attained for u in an
// open cell of the arrangement of great spheres {u : <c,u> = 0}. Every such
// cell touches a vertex of the arrangement, and is reached from that vertex by
// a lexicographic perturbation along one of the spheres through it.
template <class T>
std::size_t depth_core(const std::vector<Vec3<T>>& rays, const std::vector<std::size_t>& w, std::size_t dim,
                       std::size_t eq, std::size_t cutoff) {
    if (rays.empty()) return eq;
    const std::size_t n = rays.size();

    bool collinear = true;
    for (std::size_t i = 1; i < n && collinear; ++i) collinear = is_zero(cross(rays[0], rays[i]));
    if (collinear) {
        std::size_t pos = 0, neg = 0;
        for (std::size_t i = 0; i < n; ++i) (sign_of(dot(rays[i], rays[0])) > 0 ? pos : neg) += w[i];
        return eq + std::min(pos, neg);
    }

    std::size_t best = std::numeric_limits<std::size_t>::max();
    if (dim == 2) {
        for (std::size_t k = 0; k < n; ++k) {
            const Vec3<T> v{-rays[k][1], rays[k][0], T(0)};
            std::array<std::size_t, 4> count{};
            for (std::size_t x = 0; x < n; ++x) {
                const int sa = sign_of(dot(rays[x], v));
                const int sb = sign_of(dot(rays[x], rays[k]));
                for (int m = 0; m < 4; ++m) {
                    const int s1 = (m & 1) ? -1 : 1, s2 = (m & 2) ? -1 : 1;
                    if (s1 * sa > 0 || (sa == 0 && s2 * sb > 0)) count[m] += w[x];
                }
            }
            for (std::size_t c : count) best = std::min(best, c);
            if (eq + best <= cutoff) return eq + best;
        }
        return eq + best;
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3<T> v = cross(rays[i], rays[j]);
            if (is_zero(v)) continue;
            const std::array<const Vec3<T>*, 2> lines{&rays[i], &rays[j]};
            const std::array<Vec3<T>, 2> tangents{cross(v, rays[i]), cross(v, rays[j])};
            std::array<std::size_t, 16> count{};
            for (std::size_t x = 0; x < n; ++x) {
                const int sv = sign_of(dot(rays[x], v));
                for (int which = 0; which < 2; ++which) {
                    const int st = sign_of(dot(rays[x], tangents[which]));
                    const int sc = sign_of(dot(rays[x], *lines[which]));
                    for (int m = 0; m < 8; ++m) {
                        const int s0 = (m & 1) ? -1 : 1, s1 = (m & 2) ? -1 : 1, s2 = (m & 4) ? -1 : 1;
                        const bool in = s0 * sv > 0 || (sv == 0 && (s1 * st > 0 || (st == 0 && s2 * sc > 0)));
                        if (in) count[which * 8 + m] += w[x];
                    }
                }
            }
            for (std::size_t c : count) best = std::min(best, c);
            if (eq + best <= cutoff) return eq + best;
        }
    }
    return eq + best;
}

}  // namespace

std::size_t tukey_depth_weighted(const Point& p, std::span<const Point> points, std::span<const std::size_t> weights,
                                 std::optional<std::size_t> cutoff) {
    const std::size_t dim = p.size();
    if (dim == 0 || dim > 3)
        throw UnsupportedDimension("exact Tukey depth supports dimensions 1..3, got " + std::to_string(dim));
    if (points.size() != weights.size()) throw InputError("tukey_depth_weighted: weights length mismatch");

    Integer scale = 1;
    for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& q : points) {
        if (q.size() != dim) throw InputError("tukey_depth: dimension mismatch");
        for (const auto& c : q) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    }

    std::size_t eq = 0;
    std::vector<std::pair<Vec3<Integer>, std::size_t>> raw;
    raw.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (weights[i] == 0) continue;
        Vec3<Integer> v{0, 0, 0};
        Integer g = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            Rational diff = (points[i][j] - p[j]) * scale;
            v[j] = diff.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
        }
        if (g == 0) {
            eq += weights[i];
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) v[j] /= g;
        raw.emplace_back(std::move(v), weights[i]);
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Vec3<Integer>> rays;
    std::vector<std::size_t> w;
    bool small = true;
    const Integer limit = Integer(1) << 28;
    for (auto& [v, wt] : raw) {
        if (!rays.empty() && rays.back() == v) {
            w.back() += wt;
            continue;
        }
        for (const auto& c : v)
            if (abs(c) >= limit) small = false;
        rays.push_back(v);
        w.push_back(wt);
    }

    // A zero cutoff never triggers early: depth 0 is already the floor.
    const std::size_t cut = cutoff.value_or(0);
    if (small) {
        std::vector<Vec3<Wide>> fast;
        fast.reserve(rays.size());
        for (const auto& v : rays) fast.push_back({Wide(v[0].get_si()), Wide(v[1].get_si()), Wide(v[2].get_si())});
        return depth_core(fast, w, dim, eq, cut);
    }
    return depth_core(rays, w, dim, eq, cut);
}

std::size_t tukey_depth_exact(const Point& p, const PointSet& x) {
    if (p.size() != x.dim()) throw InputError("tukey_depth_exact: query dimension mismatch");
    std::vector<std::size_t> ones(x.size(), 1);
    return tukey_depth_weighted(p, x.points(), ones);
}

}  // namespace tvk
