#include "tverberg/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tvk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_signed_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InputError("malformed number: '" + std::string(whole) + "'");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw InputError("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_signed_integer(trim(s.substr(0, slash)), s);
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!all_digits(den_text)) throw InputError("malformed rational: '" + std::string(s) + "'");
        Integer den(std::string(den_text), 10);
        if (den == 0) throw InputError("zero denominator: '" + std::string(s) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    std::string_view mant = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        Integer ev = parse_signed_integer(s.substr(e + 1), s);
        if (!ev.fits_slong_p() || abs(ev) > 100000) throw InputError("exponent out of range: '" + std::string(s) + "'");
        exponent = ev.get_si();
    }
    bool neg = false;
    if (!mant.empty() && (mant.front() == '+' || mant.front() == '-')) {
        neg = mant.front() == '-';
        mant.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mant.substr(0, dot);
        std::string_view fp = mant.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw InputError("malformed decimal: '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mant)) throw InputError("malformed number: '" + std::string(s) + "'");
        digits = std::string(mant);
    }
    Integer num(digits, 10);
    if (neg) num = -num;
    const long scale = exponent - frac_len;
    Rational r;
    if (scale >= 0) {
        r = Rational(num * pow10(static_cast<unsigned long>(scale)));
    } else {
        r = Rational(num, pow10(static_cast<unsigned long>(-scale)));
        r.canonicalize();
    }
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Integer ceil_integer(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational ceil_rational(const Rational& r) { return Rational(ceil_integer(r)); }

// ---------------------------------------------------------------------------

PointSet::PointSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw InputError("dimension must be positive");
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points) : PointSet(dim) {
    for (auto& p : points) add(std::move(p));
}

bool PointSet::contains_id(std::size_t id) const {
    return id < position_.size() && position_[id] >= 0;
}

const Point& PointSet::by_id(std::size_t id) const {
    if (!contains_id(id)) throw InputError("unknown point id " + std::to_string(id));
    return points_[static_cast<std::size_t>(position_[id])];
}

std::size_t PointSet::add(Point p) {
    if (p.size() != dim_)
        throw InputError("point has dimension " + std::to_string(p.size()) + ", expected " + std::to_string(dim_));
    const std::size_t id = position_.size();
    position_.push_back(static_cast<std::ptrdiff_t>(points_.size()));
    points_.push_back(std::move(p));
    ids_.push_back(id);
    return id;
}

void PointSet::remove_ids(std::span<const std::size_t> ids) {
    for (std::size_t id : ids) {
        if (!contains_id(id)) throw InputError("cannot remove unknown point id " + std::to_string(id));
        position_[id] = -1;
    }
    std::vector<Point> pts;
    std::vector<std::size_t> kept;
    pts.reserve(points_.size());
    for (std::size_t pos = 0; pos < points_.size(); ++pos) {
        if (position_[ids_[pos]] < 0) continue;
        position_[ids_[pos]] = static_cast<std::ptrdiff_t>(pts.size());
        pts.push_back(std::move(points_[pos]));
        kept.push_back(ids_[pos]);
    }
    points_ = std::move(pts);
    ids_ = std::move(kept);
}

PointSet PointSet::select(std::span<const std::size_t> ids) const {
    PointSet out(dim_);
    std::size_t max_id = 0;
    for (std::size_t id : ids) max_id = std::max(max_id, id);
    out.position_.assign(ids.empty() ? 0 : max_id + 1, -1);
    for (std::size_t id : ids) {
        if (out.contains_id(id)) throw InputError("duplicate point id " + std::to_string(id));
        out.position_[id] = static_cast<std::ptrdiff_t>(out.points_.size());
        out.points_.push_back(by_id(id));
        out.ids_.push_back(id);
    }
    return out;
}

// ---------------------------------------------------------------------------

Point evaluate(const ConvexCombination& cc, const PointSet& set) {
    Point acc(set.dim(), Rational(0));
    for (const auto& [id, coef] : cc.support) {
        const Point& p = set.by_id(id);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += coef * p[j];
    }
    return acc;
}

bool is_valid_combination(const ConvexCombination& cc, const PointSet& set, const Point& target) {
    if (target.size() != set.dim() || cc.support.empty()) return false;
    std::set<std::size_t> seen;
    Rational total(0);
    for (const auto& [id, coef] : cc.support) {
        if (!set.contains_id(id) || !seen.insert(id).second || sgn(coef) < 0) return false;
        total += coef;
    }
    if (total != 1) return false;
    return evaluate(cc, set) == target;
}

Rational Hyperplane::eval(const Point& x) const {
    Rational v = offset;
    for (std::size_t j = 0; j < normal.size(); ++j) v += normal[j] * x[j];
    return v;
}

// ---------------------------------------------------------------------------

LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw InputError("solve_linear: right-hand side length mismatch");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw InputError("solve_linear: ragged matrix");

    Matrix aug(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][n] = b[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && sgn(aug[piv][col]) == 0) ++piv;
        if (piv == m) continue;
        std::swap(aug[piv], aug[row]);
        const Rational inv = 1 / aug[row][col];
        for (std::size_t j = col; j <= n; ++j) aug[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || sgn(aug[i][col]) == 0) continue;
            const Rational f = aug[i][col];
            for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }

    LinearSolution out;
    bool consistent = true;
    for (std::size_t i = row; i < m; ++i)
        if (sgn(aug[i][n]) != 0) consistent = false;
    if (consistent) {
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = aug[r][n];
        out.solution = std::move(x);
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -aug[r][free];
        out.null_basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace tvk
