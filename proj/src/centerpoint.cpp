#include <algorithm>
#include <cmath>
#include <limits>

#include "tverberg/euclid.hpp"

namespace tvk {

std::size_t default_radon_height(std::size_t n, std::size_t dim) {
    std::size_t h = 1;
    std::size_t leaves = dim + 2;
    while (leaves < n) {
        leaves *= dim + 2;
        ++h;
    }
    return h;
}

Point iterated_radon_point(std::span<const Point> leaves, std::size_t dim) {
    const std::size_t arity = dim + 2;
    std::size_t count = leaves.size();
    while (count > 1 && count % arity == 0) count /= arity;
    if (leaves.empty() || count != 1) throw InputError("iterated_radon_point: leaf count must be a power of dim+2");

    std::vector<Point> level(leaves.begin(), leaves.end());
    while (level.size() > 1) {
        std::vector<Point> next;
        next.reserve(level.size() / arity);
        for (std::size_t i = 0; i < level.size(); i += arity) {
            PointSet group(dim);
            for (std::size_t j = 0; j < arity; ++j) group.add(std::move(level[i + j]));
            next.push_back(radon_partition(group).point);
        }
        level = std::move(next);
    }
    return std::move(level.front());
}

CenterpointEstimate iterated_radon_centerpoint(const PointSet& x, std::size_t height, std::uint64_t seed) {
    const std::size_t d = x.dim();
    if (x.size() < d + 2) throw InputError("iterated_radon_centerpoint needs at least dim+2 points");
    if (height == 0) throw InputError("iterated_radon_centerpoint: height must be positive");

    std::size_t leaves = 1;
    for (std::size_t i = 0; i < height; ++i) {
        if (leaves > std::numeric_limits<std::size_t>::max() / (d + 2) / 64)
            throw InputError("iterated_radon_centerpoint: tree too large");
        leaves *= d + 2;
    }
    Rng rng(seed);
    std::vector<Point> sample;
    sample.reserve(leaves);
    for (std::size_t i = 0; i < leaves; ++i) sample.push_back(x[rng.index(x.size())]);

    const Rational denom(static_cast<unsigned long>((d + 1) * (d + 1)));
    return CenterpointEstimate{iterated_radon_point(sample, d), 1 / denom, CenterMethod::iterated_radon};
}

std::size_t lambda_sample_size(std::size_t dim, const Rational& lambda, const Rational& epsilon,
                               const Rational& constant) {
    if (sgn(lambda) <= 0 || lambda >= 1) throw InputError("lambda must lie in (0, 1)");
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw InputError("epsilon must lie in (0, 1)");
    if (sgn(constant) <= 0) throw InputError("sample constant must be positive");
    const double l = lambda.get_d();
    const double m = constant.get_d() / (l * l) *
                     (static_cast<double>(dim) * std::log(2.0 / l) + std::log(1.0 / epsilon.get_d()));
    if (!(m < 1e9)) throw InputError("lambda-sample size too large");
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(m)));
}

PointSet lambda_sample(const PointSet& x, const Rational& lambda, const Rational& epsilon, std::uint64_t seed,
                       const Rational& constant) {
    if (x.empty()) throw InputError("lambda_sample: empty input");
    const std::size_t m = lambda_sample_size(x.dim(), lambda, epsilon, constant);
    Rng rng(seed);
    PointSet out(x.dim());
    for (std::size_t i = 0; i < m; ++i) out.add(x[rng.index(x.size())]);
    return out;
}

// ---------------------------------------------------------------------------
// Exact low-dimensional centerpoints.

namespace {

Point weighted_median(const std::vector<Point>& sorted, const std::vector<std::size_t>& weights) {
    std::size_t total = 0;
    for (auto w : weights) total += w;
    const std::size_t rank = (total + 1) / 2;  // ceil(total/2)
    std::size_t acc = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        acc += weights[i];
        if (acc >= rank) return sorted[i];
    }
    return sorted.back();
}

// a*x + b*y <= c
struct HalfPlane {
    Rational a, b, c;
};

struct Box {
    Rational xlo, xhi, ylo, yhi;
};

// Lexicographic minimum of (x, y) over box intersected with the halfplanes,
// by Seidel's randomized incremental algorithm.
std::optional<std::pair<Rational, Rational>> lexmin(const std::vector<HalfPlane>& hs, const Box& box) {
    std::vector<HalfPlane> all{{-1, 0, -box.xlo}, {1, 0, box.xhi}, {0, -1, -box.ylo}, {0, 1, box.yhi}};
    all.insert(all.end(), hs.begin(), hs.end());
    Rng rng(0x7e11a5eedULL);
    rng.shuffle(all.begin() + 4, all.end());

    Rational vx = box.xlo, vy = box.ylo;
    for (std::size_t i = 4; i < all.size(); ++i) {
        const HalfPlane& h = all[i];
        if (h.a * vx + h.b * vy <= h.c) continue;

        // The new optimum lies on the line a x + b y = c.
        if (sgn(h.b) != 0) {
            // Parameterise by x; y = (c - a x) / b.
            bool has_lo = false, has_hi = false;
            Rational lo, hi;
            const Rational ya = -h.a / h.b, yc = h.c / h.b;  // y = ya x + yc
            for (std::size_t j = 0; j < i; ++j) {
                const HalfPlane& g = all[j];
                const Rational alpha = g.a + g.b * ya;
                const Rational beta = g.c - g.b * yc;
                const int s = sgn(alpha);
                if (s == 0) {
                    if (sgn(beta) < 0) return std::nullopt;
                    continue;
                }
                Rational bound = beta / alpha;
                if (s > 0) {
                    if (!has_hi || bound < hi) hi = std::move(bound), has_hi = true;
                } else {
                    if (!has_lo || bound > lo) lo = std::move(bound), has_lo = true;
                }
            }
            if (!has_lo) throw std::logic_error("lexmin: unbounded 1-d subproblem");
            if (has_hi && lo > hi) return std::nullopt;
            vx = lo;
            vy = ya * lo + yc;
        } else {
            const Rational x0 = h.c / h.a;
            bool has_lo = false, has_hi = false;
            Rational lo, hi;
            for (std::size_t j = 0; j < i; ++j) {
                const HalfPlane& g = all[j];
                const Rational rhs = g.c - g.a * x0;
                const int s = sgn(g.b);
                if (s == 0) {
                    if (sgn(rhs) < 0) return std::nullopt;
                    continue;
                }
                Rational bound = rhs / g.b;
                if (s > 0) {
                    if (!has_hi || bound < hi) hi = std::move(bound), has_hi = true;
                } else {
                    if (!has_lo || bound > lo) lo = std::move(bound), has_lo = true;
                }
            }
            if (!has_lo) throw std::logic_error("lexmin: unbounded 1-d subproblem");
            if (has_hi && lo > hi) return std::nullopt;
            vx = x0;
            vy = lo;
        }
    }
    return std::make_pair(vx, vy);
}

struct PairCount {
    std::size_t i, j;
    std::size_t left, right, on;
};

template <class T>
std::vector<PairCount> count_sides(const std::vector<std::array<T, 2>>& p, const std::vector<std::size_t>& w) {
    std::vector<PairCount> out;
    const std::size_t n = p.size();
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const T dx = p[j][0] - p[i][0], dy = p[j][1] - p[i][1];
            PairCount pc{i, j, 0, 0, 0};
            for (std::size_t k = 0; k < n; ++k) {
                const T cr = dx * (p[k][1] - p[i][1]) - dy * (p[k][0] - p[i][0]);
                if (cr > 0)
                    pc.left += w[k];
                else if (cr < 0)
                    pc.right += w[k];
                else
                    pc.on += w[k];
            }
            out.push_back(pc);
        }
    }
    return out;
}

// Depth-k region of a weighted planar set: the intersection of all closed
// halfplanes bounded by lines through two data points that carry weight
// greater than total - k.
class TukeyRegions {
public:
    TukeyRegions(std::vector<std::array<Integer, 2>> pts, std::vector<std::size_t> weights)
        : pts_(std::move(pts)), w_(std::move(weights)) {
        for (auto v : w_) total_ += v;
        const Integer limit = Integer(1) << 30;
        bool small = true;
        for (const auto& q : pts_)
            for (const auto& c : q)
                if (abs(c) >= limit) small = false;
        if (small) {
            std::vector<std::array<long long, 2>> fast;
            for (const auto& q : pts_) fast.push_back({q[0].get_si(), q[1].get_si()});
            counts_ = count_sides(fast, w_);
        } else {
            counts_ = count_sides(pts_, w_);
        }
        box_ = Box{pts_[0][0], pts_[0][0], pts_[0][1], pts_[0][1]};
        for (const auto& q : pts_) {
            box_.xlo = std::min(box_.xlo, Rational(q[0]));
            box_.xhi = std::max(box_.xhi, Rational(q[0]));
            box_.ylo = std::min(box_.ylo, Rational(q[1]));
            box_.yhi = std::max(box_.yhi, Rational(q[1]));
        }
    }

    std::size_t total() const { return total_; }

    std::vector<HalfPlane> constraints(std::size_t k) const {
        const std::size_t need = total_ - k + 1;
        std::vector<HalfPlane> hs;
        for (const auto& pc : counts_) {
            const auto& pi = pts_[pc.i];
            const auto& pj = pts_[pc.j];
            const Integer dx = pj[0] - pi[0], dy = pj[1] - pi[1];
            // left closed side: dx (y - yi) - dy (x - xi) >= 0
            if (pc.left + pc.on >= need) hs.push_back({Rational(dy), Rational(-dx), Rational(dy * pi[0] - dx * pi[1])});
            if (pc.right + pc.on >= need)
                hs.push_back({Rational(-dy), Rational(dx), Rational(dx * pi[1] - dy * pi[0])});
        }
        return hs;
    }

    std::optional<std::pair<Rational, Rational>> lowest(std::size_t k) const { return lexmin(constraints(k), box_); }

    std::optional<std::pair<Rational, Rational>> highest(std::size_t k) const {
        auto hs = constraints(k);
        for (auto& h : hs) h.a = -h.a, h.b = -h.b;
        const Box flipped{-box_.xhi, -box_.xlo, -box_.yhi, -box_.ylo};
        auto r = lexmin(hs, flipped);
        if (r) r->first = -r->first, r->second = -r->second;
        return r;
    }

private:
    std::vector<std::array<Integer, 2>> pts_;
    std::vector<std::size_t> w_;
    std::size_t total_ = 0;
    std::vector<PairCount> counts_;
    Box box_;
};

Integer common_denominator(const std::vector<Point>& pts) {
    Integer scale = 1;
    for (const auto& p : pts)
        for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    return scale;
}

// Scaled to integers, optionally with the coordinates swapped.
std::vector<std::array<Integer, 2>> scaled(const std::vector<Point>& distinct, const Integer& scale, bool swap) {
    std::vector<std::array<Integer, 2>> pts;
    pts.reserve(distinct.size());
    for (const auto& p : distinct) {
        Rational x = p[swap ? 1 : 0] * scale, y = p[swap ? 0 : 1] * scale;
        pts.push_back({x.get_num(), y.get_num()});
    }
    return pts;
}

Point planar_center(const std::vector<Point>& distinct, const std::vector<std::size_t>& weights) {
    const Integer scale = common_denominator(distinct);
    auto pts = scaled(distinct, scale, false);

    bool collinear = true;
    for (std::size_t k = 2; k < pts.size() && collinear; ++k) {
        const Integer cr = (pts[1][0] - pts[0][0]) * (pts[k][1] - pts[0][1]) -
                           (pts[1][1] - pts[0][1]) * (pts[k][0] - pts[0][0]);
        collinear = sgn(cr) == 0;
    }
    // Lexicographic order is the order along the line.
    if (collinear) return weighted_median(distinct, weights);

    TukeyRegions regions(std::move(pts), weights);
    const std::size_t total = regions.total();
    std::size_t lo = (total + 2) / 3;  // ceil(total/3): nonempty by the centerpoint theorem
    std::size_t hi = total + 1;
    if (!regions.lowest(lo)) throw std::logic_error("planar_center: centerpoint region is empty");
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (regions.lowest(mid) ? lo : hi) = mid;
    }
    const auto a = *regions.lowest(lo);
    const auto b = *regions.highest(lo);
    return Point{(a.first + b.first) / (2 * scale), (a.second + b.second) / (2 * scale)};
}

}  // namespace

std::optional<std::pair<Point, Point>> detail::depth_region_box(const std::vector<Point>& distinct,
                                                                const std::vector<std::size_t>& weights,
                                                                std::size_t k) {
    if (distinct.empty() || distinct.size() != weights.size())
        throw InputError("depth_region_box: need matching points and weights");
    const std::size_t d = distinct.front().size();
    std::size_t total = 0;
    for (auto w : weights) total += w;
    if (k == 0 || k > total) return std::nullopt;

    if (d == 1) {
        // Points are sorted; depth >= k between the k-th smallest and k-th largest.
        std::size_t acc = 0, lo = 0, hi = 0;
        while ((acc += weights[lo]) < k) ++lo;
        acc = 0;
        hi = distinct.size() - 1;
        while ((acc += weights[hi]) < k) --hi;
        if (distinct[lo][0] > distinct[hi][0]) return std::nullopt;
        return std::make_pair(distinct[lo], distinct[hi]);
    }
    if (d != 2) throw UnsupportedDimension("depth_region_box supports dimensions 1 and 2");
    if (distinct.size() == 1) return std::make_pair(distinct[0], distinct[0]);

    // Extreme points of the region in x come from the lexicographic optima;
    // the same on swapped coordinates gives the y range. Collinear inputs
    // yield a degenerate (segment) region, which the halfplanes describe too.
    const Integer scale = common_denominator(distinct);
    Point lo(2), hi(2);
    for (int axis = 0; axis < 2; ++axis) {
        const TukeyRegions regions(scaled(distinct, scale, axis == 1), weights);
        const auto a = regions.lowest(k);
        if (!a) return std::nullopt;
        const auto b = regions.highest(k);
        lo[axis] = a->first / scale;
        hi[axis] = b->first / scale;
    }
    return std::make_pair(lo, hi);
}

CenterpointEstimate exact_centerpoint_lowdim(const PointSet& x) {
    const std::size_t d = x.dim();
    if (d > 2) throw UnsupportedDimension("exact_centerpoint_lowdim supports dimensions 1 and 2");
    if (x.empty()) throw InputError("exact_centerpoint_lowdim: empty input");

    std::vector<Point> distinct;
    std::vector<std::size_t> weights;
    detail::group_points(x, distinct, weights);

    CenterpointEstimate out;
    out.method = CenterMethod::exact_bruteforce;
    out.target_fraction = Rational(1, static_cast<unsigned long>(d + 1));
    if (distinct.size() == 1)
        out.point = distinct.front();
    else if (d == 1)
        out.point = weighted_median(distinct, weights);
    else
        out.point = planar_center(distinct, weights);
    return out;
}

}  // namespace tvk
