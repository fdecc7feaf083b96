#include "tverberg/lattice.hpp"

#include <algorithm>

namespace tvk {

bool is_integral(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.get_den() == 1; });
}

LatticePoint to_lattice(const Point& p) {
    if (!is_integral(p)) throw InputError("point has non-integer coordinates");
    LatticePoint out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.get_num());
    return out;
}

Point to_point(const LatticePoint& p) {
    Point out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c);
    return out;
}

namespace {

void check_lattice_input(const PointSet& s) {
    if (s.dim() > 2) throw UnsupportedDimension("integer centerpoints support dimensions 1 and 2");
    if (s.empty()) throw InputError("integer centerpoint of an empty set");
    for (const auto& p : s.points())
        if (!is_integral(p)) throw InputError("lattice input contains a non-integer point");
}

void check_lambda(std::size_t dim, const Rational& lambda, const Rational& epsilon) {
    const Rational cap(1, 1UL << (dim + 2));
    if (sgn(lambda) <= 0 || lambda > cap) throw InputError("lambda must lie in (0, 2^-(d+2)]");
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw InputError("epsilon must lie in (0, 1)");
}

}  // namespace

LatticePoint integer_centerpoint_bruteforce(const PointSet& s) {
    check_lattice_input(s);
    std::vector<Point> distinct;
    std::vector<std::size_t> weights;
    detail::group_points(s, distinct, weights);

    const std::size_t d = s.dim();
    LatticePoint lo = to_lattice(distinct.front()), hi = lo;
    for (const auto& p : distinct)
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], p[j].get_num());
            hi[j] = std::max(hi[j], p[j].get_num());
        }

    // Some lattice point has depth >= ceil(|S|/2^d), and the lattice corners
    // around the real centerpoint often do better. Every maximiser lies in the
    // box of the region at the best depth seen, so scanning only there gives
    // the same answer as scanning everything.
    std::size_t known = (s.size() + (std::size_t{1} << d) - 1) >> d;
    const Point center = exact_centerpoint_lowdim(s).point;
    for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
        Point q(d);
        for (std::size_t j = 0; j < d; ++j) {
            const Integer f = -ceil_integer(-center[j]);
            q[j] = (corner >> j) & 1 ? Rational(ceil_integer(center[j])) : Rational(f);
        }
        known = std::max(known, tukey_depth_weighted(q, distinct, weights));
    }
    if (const auto region = detail::depth_region_box(distinct, weights, known)) {
        LatticePoint rlo(d), rhi(d);
        bool nonempty = true;
        for (std::size_t j = 0; j < d; ++j) {
            rlo[j] = std::max(lo[j], ceil_integer(region->first[j]));
            rhi[j] = std::min(hi[j], Integer(-ceil_integer(-region->second[j])));
            nonempty = nonempty && rlo[j] <= rhi[j];
        }
        if (nonempty) lo = rlo, hi = rhi;
    }

    // Odometer over the box in lexicographic order; strict improvement keeps
    // the lexicographically smallest maximiser.
    LatticePoint cur = lo, best;
    std::size_t best_depth = 0;
    bool have = false;
    for (;;) {
        const std::optional<std::size_t> cutoff = have ? std::optional<std::size_t>(best_depth) : std::nullopt;
        const std::size_t depth = tukey_depth_weighted(to_point(cur), distinct, weights, cutoff);
        if (!have || depth > best_depth) {
            best = cur;
            best_depth = depth;
            have = true;
        }
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (cur[j] < hi[j]) {
                ++cur[j];
                break;
            }
            cur[j] = lo[j];
            if (j == 0) return best;
        }
    }
}

LatticePoint integer_centerpoint_sampled(const PointSet& s, const Rational& lambda, const Rational& epsilon,
                                         std::uint64_t seed, const Rational& sample_constant) {
    check_lattice_input(s);
    check_lambda(s.dim(), lambda, epsilon);
    return integer_centerpoint_bruteforce(lambda_sample(s, lambda, epsilon, seed, sample_constant));
}

Integer theorem3_target(std::size_t n, std::size_t dim, const Rational& lambda) {
    const Rational d(static_cast<unsigned long>(dim));
    const Rational inv_pow(1, 1UL << dim);
    return ceil_integer(Rational(static_cast<unsigned long>(n)) / d * (inv_pow - lambda));
}

PipelineResult theorem3_pipeline(const PointSet& s, const Rational& lambda, const Rational& epsilon,
                                 std::uint64_t seed, const PipelineConfig& config) {
    check_lattice_input(s);
    check_lambda(s.dim(), lambda, epsilon);

    PipelineResult best;
    best.k_target = theorem3_target(s.size(), s.dim(), lambda);
    bool have = false;
    for (std::size_t trial = 0; trial < std::max<std::size_t>(config.trial_budget, 1); ++trial) {
        CenterpointEstimate center;
        center.point =
            to_point(integer_centerpoint_sampled(s, lambda, epsilon, derive_seed(seed, trial), config.sample_constant));
        center.method = CenterMethod::exact_sample;
        center.target_fraction = Rational(1, 1UL << s.dim()) - lambda;
        TverbergCertificate cert = greedy_tverberg(center, s);
        if (!have || cert.parts.size() > best.k_achieved) {
            best.k_achieved = cert.parts.size();
            best.certificate = std::move(cert);
            best.center = std::move(center);
            have = true;
        }
        best.trials = trial + 1;
        if (Integer(static_cast<unsigned long>(best.k_achieved)) >= best.k_target) break;
    }
    best.shortfall = Integer(static_cast<unsigned long>(best.k_achieved)) < best.k_target;
    return best;
}

}  // namespace tvk
