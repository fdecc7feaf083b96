#pragma once

#include <cstdint>
#include <vector>

#include "tverberg/euclid.hpp"

namespace tvk {

using LatticePoint = std::vector<Integer>;

bool is_integral(const Point& p);
LatticePoint to_lattice(const Point& p);  // throws InputError on fractional entries
Point to_point(const LatticePoint& p);

/// Deepest lattice point of the bounding box of s (dim <= 2). Ties go to the
/// lexicographically smallest coordinates. s must hold integer points.
LatticePoint integer_centerpoint_bruteforce(const PointSet& s);

/// Brute-force centerpoint of a lambda-sample of s. 0 < lambda <= 2^-(d+2).
LatticePoint integer_centerpoint_sampled(const PointSet& s, const Rational& lambda, const Rational& epsilon,
                                         std::uint64_t seed, const Rational& sample_constant = 8);

/// ceil((n/d)(1/2^d - lambda))
Integer theorem3_target(std::size_t n, std::size_t dim, const Rational& lambda);

PipelineResult theorem3_pipeline(const PointSet& s, const Rational& lambda, const Rational& epsilon,
                                 std::uint64_t seed, const PipelineConfig& config = {});

}  // namespace tvk
