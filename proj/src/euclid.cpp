#include <algorithm>
#include <numeric>
#include <set>

#include "tverberg/euclid.hpp"

namespace tvk {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const char* to_string(CenterMethod m) {
    switch (m) {
        case CenterMethod::iterated_radon: return "iterated-radon";
        case CenterMethod::exact_sample: return "exact-sample";
        case CenterMethod::exact_bruteforce: return "exact-bruteforce";
    }
    return "unknown";
}

RadonResult radon_partition(const PointSet& y) {
    const std::size_t d = y.dim();
    if (y.size() != d + 2)
        throw InputError("radon_partition needs exactly " + std::to_string(d + 2) + " points, got " +
                         std::to_string(y.size()));

    Matrix a(d + 1, std::vector<Rational>(d + 2));
    for (std::size_t j = 0; j < d + 2; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][j] = y[j][i];
        a[d][j] = 1;
    }
    auto sol = solve_linear(a, std::vector<Rational>(d + 1, Rational(0)));
    // More unknowns than equations, so the null space is never trivial.
    std::vector<Rational> c = std::move(sol.null_basis.front());
    if (std::none_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) > 0; }))
        for (auto& v : c) v = -v;

    Rational total(0);
    for (const auto& v : c)
        if (sgn(v) > 0) total += v;

    RadonResult out;
    out.point.assign(d, Rational(0));
    for (std::size_t j = 0; j < d + 2; ++j) {
        if (sgn(c[j]) > 0) {
            const Rational coef = c[j] / total;
            out.side_a.push_back(y.id(j));
            out.proof_a.support.emplace_back(y.id(j), coef);
            for (std::size_t i = 0; i < d; ++i) out.point[i] += coef * y[j][i];
        } else {
            out.side_b.push_back(y.id(j));
            if (sgn(c[j]) < 0) out.proof_b.support.emplace_back(y.id(j), -c[j] / total);
        }
    }
    return out;
}

namespace {

class MembershipOracle {
public:
    MembershipOracle(const Point& z, const PointSet& x) : z_(z), x_(x) {}

    bool contains(std::span<const std::size_t> ids) {
        ++calls_;
        if (ids.empty()) return false;
        return hull_membership(z_, x_.select(ids)).inside;
    }

    std::size_t calls() const { return calls_; }

private:
    const Point& z_;
    const PointSet& x_;
    std::size_t calls_ = 0;
};

std::vector<std::size_t> sorted_ids(const PointSet& x) {
    std::vector<std::size_t> ids = x.ids();
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::optional<Reduction> reduce_bsearch(const Point& z, const PointSet& x) {
    MembershipOracle oracle(z, x);
    std::vector<std::size_t> rest = sorted_ids(x);
    if (!oracle.contains(rest)) return std::nullopt;

    std::vector<std::size_t> essential;
    std::vector<std::size_t> probe;
    auto test_prefix = [&](std::size_t t) {
        probe = essential;
        probe.insert(probe.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(t));
        return oracle.contains(probe);
    };

    for (;;) {
        if (!essential.empty() && test_prefix(0)) break;
        // Invariant: prefix of length hi works, prefix of length lo does not.
        std::size_t lo = 0, hi = rest.size();
        while (hi - lo > 1) {
            const std::size_t mid = lo + (hi - lo) / 2;
            (test_prefix(mid) ? hi : lo) = mid;
        }
        essential.push_back(rest[hi - 1]);
        rest.resize(hi - 1);
    }
    std::sort(essential.begin(), essential.end());
    return Reduction{std::move(essential), oracle.calls()};
}

}  // namespace

Reduction caratheodory_reduce_naive(const Point& z, const PointSet& x) {
    if (z.size() != x.dim()) throw InputError("caratheodory_reduce_naive: dimension mismatch");
    MembershipOracle oracle(z, x);
    std::vector<std::size_t> kept = sorted_ids(x);
    if (!oracle.contains(kept)) throw PreconditionError("caratheodory_reduce_naive: point is outside the hull");

    const std::vector<std::size_t> order = kept;
    std::vector<std::size_t> trial;
    for (std::size_t id : order) {
        if (kept.size() == 1) break;
        trial.clear();
        for (std::size_t k : kept)
            if (k != id) trial.push_back(k);
        if (oracle.contains(trial)) kept = trial;
    }
    return Reduction{std::move(kept), oracle.calls()};
}

Reduction caratheodory_reduce_bsearch(const Point& z, const PointSet& x) {
    if (z.size() != x.dim()) throw InputError("caratheodory_reduce_bsearch: dimension mismatch");
    auto r = reduce_bsearch(z, x);
    if (!r) throw PreconditionError("caratheodory_reduce_bsearch: point is outside the hull");
    return std::move(*r);
}

// ---------------------------------------------------------------------------

TverbergCertificate greedy_tverberg(const CenterpointEstimate& center, const PointSet& x) {
    const Point& z = center.point;
    if (z.size() != x.dim()) throw InputError("greedy_tverberg: dimension mismatch");

    TverbergCertificate cert;
    cert.witness = z;
    PointSet rest = x;
    while (!rest.empty()) {
        auto reduction = reduce_bsearch(z, rest);
        if (!reduction) break;
        auto proof = hull_membership(z, rest.select(reduction->ids));
        if (!proof.inside) throw std::logic_error("greedy_tverberg: reduced set lost the witness");
        rest.remove_ids(reduction->ids);
        cert.parts.push_back(std::move(reduction->ids));
        cert.proofs.push_back(std::move(proof.combination));
    }
    if (cert.parts.empty()) throw PreconditionError("greedy_tverberg: center is outside the hull of the input");
    return cert;
}

bool verify_certificate(const TverbergCertificate& cert, const PointSet& x, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (cert.witness.size() != x.dim()) return fail("witness dimension does not match the points");
    if (cert.parts.empty()) return fail("certificate has no parts");
    if (cert.parts.size() != cert.proofs.size()) return fail("part and proof counts differ");
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto& part = cert.parts[i];
        const std::string tag = "part " + std::to_string(i);
        if (part.empty()) return fail(tag + " is empty");
        for (std::size_t id : part) {
            if (!x.contains_id(id)) return fail(tag + " refers to unknown point " + std::to_string(id));
            if (!used.insert(id).second) return fail("point " + std::to_string(id) + " appears in two parts");
        }
        const std::set<std::size_t> members(part.begin(), part.end());
        for (const auto& term : cert.proofs[i].support)
            if (!members.count(term.first))
                return fail(tag + ": proof uses point " + std::to_string(term.first) + " outside the part");
        if (!is_valid_combination(cert.proofs[i], x, cert.witness))
            return fail(tag + ": proof is not a convex combination equal to the witness");
    }
    return true;
}

// ---------------------------------------------------------------------------

Integer theorem1_target(std::size_t n, std::size_t dim) {
    const Integer d(static_cast<unsigned long>(dim));
    return ceil_integer(Rational(Integer(static_cast<unsigned long>(n)), d * (d + 1) * (d + 1)));
}

Integer theorem2_target(std::size_t n, std::size_t dim, const Rational& lambda) {
    const Rational d(static_cast<unsigned long>(dim));
    return ceil_integer(Rational(static_cast<unsigned long>(n)) * (1 / (d + 1) - lambda) / d);
}

namespace {

template <class CenterFn>
PipelineResult run_trials(const PointSet& x, Integer target, std::uint64_t seed, std::size_t budget,
                          CenterFn&& center_for) {
    PipelineResult best;
    best.k_target = std::move(target);
    bool have = false;
    for (std::size_t trial = 0; trial < std::max<std::size_t>(budget, 1); ++trial) {
        CenterpointEstimate center = center_for(derive_seed(seed, trial));
        TverbergCertificate cert = greedy_tverberg(center, x);
        const std::size_t k = cert.parts.size();
        if (!have || k > best.k_achieved) {
            best.certificate = std::move(cert);
            best.center = std::move(center);
            best.k_achieved = k;
            have = true;
        }
        best.trials = trial + 1;
        if (Integer(static_cast<unsigned long>(best.k_achieved)) >= best.k_target) break;
    }
    best.shortfall = Integer(static_cast<unsigned long>(best.k_achieved)) < best.k_target;
    return best;
}

}  // namespace

PipelineResult theorem1_pipeline(const PointSet& x, const Rational& epsilon, std::uint64_t seed,
                                 const PipelineConfig& config) {
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw InputError("epsilon must lie in (0, 1)");
    const std::size_t d = x.dim();
    if (x.size() < d + 2) throw InputError("theorem1_pipeline needs at least dim+2 points");
    const std::size_t height = config.radon_height.value_or(default_radon_height(x.size(), d));
    return run_trials(x, theorem1_target(x.size(), d), seed, config.trial_budget,
                      [&](std::uint64_t s) { return iterated_radon_centerpoint(x, height, s); });
}

PipelineResult theorem2_pipeline(const PointSet& x, const Rational& lambda, const Rational& epsilon,
                                 std::uint64_t seed, const PipelineConfig& config) {
    const std::size_t d = x.dim();
    if (d > 2) throw UnsupportedDimension("theorem2_pipeline supports dimensions 1 and 2");
    if (sgn(lambda) <= 0 || lambda >= Rational(1, static_cast<unsigned long>(d + 1)))
        throw InputError("lambda must lie in (0, 1/(d+1))");
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw InputError("epsilon must lie in (0, 1)");
    if (x.empty()) throw InputError("theorem2_pipeline: empty input");
    return run_trials(x, theorem2_target(x.size(), d, lambda), seed, config.trial_budget, [&](std::uint64_t s) {
        PointSet sample = lambda_sample(x, lambda, epsilon, s, config.sample_constant);
        CenterpointEstimate c = exact_centerpoint_lowdim(sample);
        c.method = CenterMethod::exact_sample;
        c.target_fraction = Rational(1, static_cast<unsigned long>(d + 1)) - lambda;
        return c;
    });
}

namespace detail {

void group_points(const PointSet& x, std::vector<Point>& distinct, std::vector<std::size_t>& weights) {
    std::vector<const Point*> order;
    order.reserve(x.size());
    for (const auto& p : x.points()) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) { return *a < *b; });
    distinct.clear();
    weights.clear();
    for (const Point* p : order) {
        if (!distinct.empty() && distinct.back() == *p) {
            ++weights.back();
        } else {
            distinct.push_back(*p);
            weights.push_back(1);
        }
    }
}

}  // namespace detail

}  // namespace tvk
