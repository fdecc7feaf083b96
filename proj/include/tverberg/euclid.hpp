#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tverberg/numeric.hpp"
#include "tverberg/random.hpp"

namespace tvk {

struct RadonResult {
    Point point;
    std::vector<std::size_t> side_a;  // positive coefficients of the affine dependence
    std::vector<std::size_t> side_b;  // negative and zero coefficients
    ConvexCombination proof_a;
    ConvexCombination proof_b;
};

/// Radon point of exactly dim+2 points via an affine dependence.
RadonResult radon_partition(const PointSet& y);

struct Reduction {
    std::vector<std::size_t> ids;  // ascending point ids, at most dim+1 of them
    std::size_t lp_calls = 0;
};

/// One pass over the points in ascending id order, dropping every point whose
/// removal keeps z in the hull. Throws PreconditionError if z is outside.
Reduction caratheodory_reduce_naive(const Point& z, const PointSet& x);

/// Finds the support one essential point at a time: the shortest prefix of the
/// remaining candidates (with the points found so far) whose hull holds z ends
/// in an essential point. O(d log n) membership tests.
Reduction caratheodory_reduce_bsearch(const Point& z, const PointSet& x);

/// Minimum number of points of x in a closed halfspace containing p.
/// Exact enumeration of the normal-direction arrangement; dim <= 3.
std::size_t tukey_depth_exact(const Point& p, const PointSet& x);

/// Same quantity for a weighted multiset. Stops early and returns a value
/// <= cutoff once the depth is known to be at most cutoff.
std::size_t tukey_depth_weighted(const Point& p, std::span<const Point> points,
                                 std::span<const std::size_t> weights,
                                 std::optional<std::size_t> cutoff = std::nullopt);

enum class CenterMethod { iterated_radon, exact_sample, exact_bruteforce };

const char* to_string(CenterMethod m);

struct CenterpointEstimate {
    Point point;
    Rational target_fraction;
    CenterMethod method = CenterMethod::exact_bruteforce;
};

/// Deepest point for dim 1 (weighted median) and dim 2 (a point of the Tukey
/// median region). Depth is always at least ceil(n/(d+1)).
CenterpointEstimate exact_centerpoint_lowdim(const PointSet& x);

/// Reduces leaves bottom-up through a complete (dim+2)-ary tree of Radon
/// points. leaves.size() must be a power of dim+2.
Point iterated_radon_point(std::span<const Point> leaves, std::size_t dim);

/// Smallest h with (dim+2)^h >= n (at least 1).
std::size_t default_radon_height(std::size_t n, std::size_t dim);

CenterpointEstimate iterated_radon_centerpoint(const PointSet& x, std::size_t height, std::uint64_t seed);

/// ceil((c / lambda^2) * (d ln(2/lambda) + ln(1/epsilon)))
std::size_t lambda_sample_size(std::size_t dim, const Rational& lambda, const Rational& epsilon,
                               const Rational& constant = 8);

/// Uniform sample with replacement; ids are fresh 0..m-1.
PointSet lambda_sample(const PointSet& x, const Rational& lambda, const Rational& epsilon, std::uint64_t seed,
                       const Rational& constant = 8);

struct TverbergCertificate {
    Point witness;
    std::vector<std::vector<std::size_t>> parts;  // point ids
    std::vector<ConvexCombination> proofs;        // one per part
};

/// Peels minimal Caratheodory sets around center.point until it leaves the
/// hull of what remains.
TverbergCertificate greedy_tverberg(const CenterpointEstimate& center, const PointSet& x);

/// Pure recomputation: disjoint parts of known ids, one exact proof per part.
bool verify_certificate(const TverbergCertificate& cert, const PointSet& x, std::string* why = nullptr);

struct PipelineConfig {
    std::size_t trial_budget = 10;
    std::optional<std::size_t> radon_height;  // default_radon_height when unset
    Rational sample_constant = 8;
};

struct PipelineResult {
    TverbergCertificate certificate;
    CenterpointEstimate center;
    Integer k_target;
    std::size_t k_achieved = 0;
    bool shortfall = false;
    std::size_t trials = 0;
};

/// ceil(n / (d (d+1)^2))
Integer theorem1_target(std::size_t n, std::size_t dim);
/// ceil(n (1/(d+1) - lambda) / d)
Integer theorem2_target(std::size_t n, std::size_t dim, const Rational& lambda);

PipelineResult theorem1_pipeline(const PointSet& x, const Rational& epsilon, std::uint64_t seed,
                                 const PipelineConfig& config = {});
PipelineResult theorem2_pipeline(const PointSet& x, const Rational& lambda, const Rational& epsilon,
                                 std::uint64_t seed, const PipelineConfig& config = {});

namespace detail {

/// Groups equal points; output is sorted lexicographically.
void group_points(const PointSet& x, std::vector<Point>& distinct, std::vector<std::size_t>& weights);

/// Bounding box {lo, hi} of the points of depth >= k in a weighted set of
/// dimension 1 or 2; nullopt when that region is empty.
std::optional<std::pair<Point, Point>> depth_region_box(const std::vector<Point>& distinct,
                                                        const std::vector<std::size_t>& weights, std::size_t k);

}  // namespace detail

}  // namespace tvk
