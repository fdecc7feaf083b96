#include <stdexcept>

#include "tverberg/numeric.hpp"

namespace tvk {

namespace {

// Dense phase-1 tableau for  M lambda = r, lambda >= 0  with one artificial
// per row. Artificial columns stay in the tableau so the final reduced costs
// expose the dual (Farkas) multipliers.
class PhaseOneTableau {
public:
    PhaseOneTableau(const Matrix& m, const std::vector<Rational>& r)
        : rows_(m.size()), vars_(m.empty() ? 0 : m[0].size()), cols_(vars_ + rows_),
          t_(rows_, std::vector<Rational>(cols_ + 1, Rational(0))), cost_(cols_ + 1, Rational(0)),
          basis_(rows_), flipped_(rows_, false) {
        for (std::size_t i = 0; i < rows_; ++i) {
            flipped_[i] = sgn(r[i]) < 0;
            for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = flipped_[i] ? Rational(-m[i][j]) : m[i][j];
            t_[i][vars_ + i] = 1;
            t_[i][cols_] = flipped_[i] ? Rational(-r[i]) : r[i];
            basis_[i] = vars_ + i;
            for (std::size_t j = 0; j < vars_; ++j) cost_[j] -= t_[i][j];
            cost_[cols_] -= t_[i][cols_];
        }
    }

    void solve() {
        for (;;) {
            // Bland: lowest-index improving column, lowest-index leaving basic variable.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(cost_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) return;

            std::size_t leave = rows_;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            // Phase-1 objective is bounded below by zero.
            if (leave == rows_) throw std::logic_error("phase-1 simplex reported unbounded");
            pivot(leave, enter);
        }
    }

    bool feasible() const { return sgn(cost_[cols_]) == 0; }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(vars_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < vars_) x[basis_[i]] = t_[i][cols_];
        return x;
    }

    // g with g^T M >= 0 and g^T r < 0 for the original (unflipped) rows.
    std::vector<Rational> farkas() const {
        std::vector<Rational> g(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational v = cost_[vars_ + i] - 1;
            g[i] = flipped_[i] ? Rational(-v) : v;
        }
        return g;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = 1 / t_[row][col];
        auto& pr = t_[row];
        for (std::size_t j = 0; j <= cols_; ++j)
            if (sgn(pr[j]) != 0) pr[j] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || sgn(t_[i][col]) == 0) continue;
            const Rational f = t_[i][col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(pr[j]) != 0) t_[i][j] -= f * pr[j];
        }
        if (sgn(cost_[col]) != 0) {
            const Rational f = cost_[col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(pr[j]) != 0) cost_[j] -= f * pr[j];
        }
        basis_[row] = col;
    }

    std::size_t rows_, vars_, cols_;
    Matrix t_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::vector<bool> flipped_;
};

}  // namespace

HullMembership hull_membership(const Point& z, const PointSet& y) {
    if (y.empty()) throw InputError("hull_membership: empty point set");
    if (z.size() != y.dim())
        throw InputError("hull_membership: query has dimension " + std::to_string(z.size()) + ", set has " +
                         std::to_string(y.dim()));
    const std::size_t d = y.dim();
    const std::size_t n = y.size();

    Matrix m(d + 1, std::vector<Rational>(n));
    std::vector<Rational> r(d + 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = y[j][i];
        m[d][j] = 1;
    }
    for (std::size_t i = 0; i < d; ++i) r[i] = z[i];
    r[d] = 1;

    PhaseOneTableau tab(m, r);
    tab.solve();

    HullMembership out;
    if (tab.feasible()) {
        out.inside = true;
        const auto x = tab.primal();
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(x[j]) > 0) out.combination.support.emplace_back(y.id(j), x[j]);
        return out;
    }

    const auto g = tab.farkas();
    Hyperplane h;
    h.normal.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(d));
    h.offset = g[d];
    // Shift by half the gap so the separation is strict on both sides.
    const Rational at_z = h.eval(z);
    h.offset -= at_z / 2;
    out.separator = std::move(h);
    return out;
}

}  // namespace tvk
