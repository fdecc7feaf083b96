#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tvk {

// Exact rational; mpq_class keeps numerator/denominator canonical after every
// arithmetic operation (denominator > 0, gcd 1).
using Rational = mpq_class;
using Integer = mpz_class;
using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Parses "p/q", integers and decimals ("-1.25", "3e-2") into an exact
/// rational. Decimal digits are read in base 10; no binary floating point.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Rational ceil_rational(const Rational& r);
Integer ceil_integer(const Rational& r);

/// Points carry a stable id; removing points never renumbers the survivors.
class PointSet {
public:
    explicit PointSet(std::size_t dim);
    PointSet(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const Point& operator[](std::size_t pos) const { return points_[pos]; }
    std::size_t id(std::size_t pos) const { return ids_[pos]; }
    const std::vector<std::size_t>& ids() const { return ids_; }
    const std::vector<Point>& points() const { return points_; }

    bool contains_id(std::size_t id) const;
    const Point& by_id(std::size_t id) const;

    std::size_t add(Point p);
    void remove_ids(std::span<const std::size_t> ids);
    /// Subset with the same ids, in the order given.
    PointSet select(std::span<const std::size_t> ids) const;

private:
    std::size_t dim_;
    std::vector<Point> points_;
    std::vector<std::size_t> ids_;
    std::vector<std::ptrdiff_t> position_;  // id -> position, -1 when removed
};

struct ConvexCombination {
    std::vector<std::pair<std::size_t, Rational>> support;  // (point id, coefficient)
};

/// Returns sum coefficient * point; throws InputError on unknown ids.
Point evaluate(const ConvexCombination& cc, const PointSet& set);
/// Nonnegative, distinct support, exact unit sum, reproduces `target`.
bool is_valid_combination(const ConvexCombination& cc, const PointSet& set, const Point& target);

struct LinearSolution {
    std::optional<std::vector<Rational>> solution;  // nullopt: inconsistent
    std::vector<std::vector<Rational>> null_basis;
};

/// Exact Gauss-Jordan elimination. The particular solution sets free
/// variables to zero.
LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b);

/// Affine function normal . x + offset; for a separator the hull side is
/// strictly positive and the query point strictly negative.
struct Hyperplane {
    std::vector<Rational> normal;
    Rational offset;

    Rational eval(const Point& x) const;
};

struct HullMembership {
    bool inside = false;
    ConvexCombination combination;     // valid when inside
    std::optional<Hyperplane> separator;  // valid when outside
};

/// Phase-1 simplex (Bland's rule) for  sum l_y y = z, sum l_y = 1, l >= 0.
HullMembership hull_membership(const Point& z, const PointSet& y);

}  // namespace tvk
