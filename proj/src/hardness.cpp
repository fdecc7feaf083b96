#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "tverberg/hardness.hpp"

namespace tvk {

void validate(const CnfFormula& phi) {
    for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
        const auto& clause = phi.clauses[c];
        if (clause.empty()) throw InputError("clause " + std::to_string(c + 1) + " is empty");
        std::vector<int> seen;
        for (int lit : clause) {
            const auto var = static_cast<std::size_t>(std::abs(lit));
            if (lit == 0 || var > phi.num_vars)
                throw InputError("literal " + std::to_string(lit) + " out of range in clause " + std::to_string(c + 1));
            if (std::find(seen.begin(), seen.end(), lit) != seen.end())
                throw InputError("repeated literal " + std::to_string(lit) + " in clause " + std::to_string(c + 1));
            seen.push_back(lit);
        }
    }
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> declared;
    CnfFormula phi;
    std::vector<int> clause;
    std::size_t line_no = 0;

    auto finish_clause = [&] {
        if (clause.empty()) throw InputError("line " + std::to_string(line_no) + ": empty clause");
        std::vector<int> dedup;
        for (int lit : clause) {
            if (std::find(dedup.begin(), dedup.end(), -lit) != dedup.end())
                throw InputError("line " + std::to_string(line_no) + ": tautological clause contains " +
                                 std::to_string(std::abs(lit)) + " and its negation");
            if (std::find(dedup.begin(), dedup.end(), lit) == dedup.end()) dedup.push_back(lit);
        }
        phi.clauses.push_back(std::move(dedup));
        clause.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok) || tok[0] == 'c') continue;
        if (tok[0] == '%') break;  // SATLIB end marker; what follows is padding
        if (tok == "p") {
            std::string fmt;
            long long v = -1, c = -1;
            std::string extra;
            if (declared || !(tokens >> fmt >> v >> c) || fmt != "cnf" || v <= 0 || c < 0 || (tokens >> extra))
                throw InputError("line " + std::to_string(line_no) + ": malformed header, expected \"p cnf V C\"");
            phi.num_vars = static_cast<std::size_t>(v);
            declared = static_cast<std::size_t>(c);
            continue;
        }
        if (!declared) throw InputError("line " + std::to_string(line_no) + ": clause before the \"p cnf\" header");
        do {
            long long lit = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw InputError("line " + std::to_string(line_no) + ": bad literal \"" + tok + "\"");
            if (lit == 0) {
                finish_clause();
                continue;
            }
            if (static_cast<unsigned long long>(std::llabs(lit)) > phi.num_vars)
                throw InputError("line " + std::to_string(line_no) + ": literal " + tok + " out of range (" +
                                 std::to_string(phi.num_vars) + " variables)");
            clause.push_back(static_cast<int>(lit));
        } while (tokens >> tok);
    }
    if (!declared) throw InputError("missing \"p cnf\" header");
    if (!clause.empty()) throw InputError("last clause is missing its terminating 0");
    if (phi.clauses.size() != *declared)
        throw InputError("header declares " + std::to_string(*declared) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    return phi;
}

std::string to_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& clause : phi.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment) {
    for (const auto& clause : phi.clauses) {
        bool ok = false;
        for (int lit : clause)
            if (assignment[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

namespace {

template <class Fn>
void for_each_assignment(std::size_t n, std::size_t cap, Fn&& fn) {
    if (n > cap || n >= 63)
        throw CapExceeded("model enumeration over " + std::to_string(n) + " variables exceeds the cap " +
                          std::to_string(cap));
    std::vector<bool> a(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
        if (!fn(a)) return;
    }
}

}  // namespace

std::uint64_t count_models(const CnfFormula& phi, std::size_t cap) {
    std::uint64_t count = 0;
    for_each_assignment(phi.num_vars, cap, [&](const std::vector<bool>& a) {
        count += satisfies(phi, a);
        return true;
    });
    return count;
}

bool satisfiable(const CnfFormula& phi, std::size_t cap) {
    bool found = false;
    for_each_assignment(phi.num_vars, cap, [&](const std::vector<bool>& a) {
        found = satisfies(phi, a);
        return !found;
    });
    return found;
}

CnfFormula delete_variables(const CnfFormula& phi, std::span<const std::size_t> vars) {
    CnfFormula out{phi.num_vars, {}};
    for (const auto& clause : phi.clauses) {
        std::vector<int> kept;
        for (int lit : clause)
            if (std::find(vars.begin(), vars.end(), static_cast<std::size_t>(std::abs(lit))) == vars.end())
                kept.push_back(lit);
        out.clauses.push_back(std::move(kept));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::size_t MonotoneCnf::positive_count() const {
    return static_cast<std::size_t>(std::count(polarity.begin(), polarity.end(), Polarity::positive));
}

std::size_t MonotoneCnf::negative_count() const { return polarity.size() - positive_count(); }

namespace {

std::optional<Polarity> polarity_of(const std::vector<int>& clause) {
    const bool all_pos = std::all_of(clause.begin(), clause.end(), [](int l) { return l > 0; });
    const bool all_neg = std::all_of(clause.begin(), clause.end(), [](int l) { return l < 0; });
    if (all_pos) return Polarity::positive;
    if (all_neg) return Polarity::negative;
    return std::nullopt;
}

}  // namespace

bool is_monotone(const CnfFormula& phi) {
    bool pos = false, neg = false;
    for (const auto& clause : phi.clauses) {
        const auto p = polarity_of(clause);
        if (!p) return false;
        (*p == Polarity::positive ? pos : neg) = true;
    }
    return pos && neg;
}

MonotoneCnf monotonize(const CnfFormula& phi) {
    validate(phi);
    const std::size_t n = phi.num_vars;
    MonotoneCnf out;
    const bool split = !std::all_of(phi.clauses.begin(), phi.clauses.end(),
                                    [](const std::vector<int>& c) { return polarity_of(c).has_value(); });
    if (!split) {
        out.formula = phi;
        for (std::size_t i = 1; i <= n; ++i) out.origin.push_back(static_cast<int>(i));
    } else {
        out.formula.num_vars = 2 * n;
        for (std::size_t i = 1; i <= n; ++i) out.origin.push_back(static_cast<int>(i));
        for (std::size_t i = 1; i <= n; ++i) out.origin.push_back(-static_cast<int>(i));
        for (const auto& clause : phi.clauses) {
            std::vector<int> c;
            for (int lit : clause) c.push_back(lit > 0 ? lit : static_cast<int>(n) - lit);
            out.formula.clauses.push_back(std::move(c));
        }
        const int ni = static_cast<int>(n);
        for (int i = 1; i <= ni; ++i) out.formula.clauses.push_back({i, ni + i});
        for (int i = 1; i <= ni; ++i) out.formula.clauses.push_back({-i, -(ni + i)});
    }
    for (const auto& clause : out.formula.clauses) out.polarity.push_back(*polarity_of(clause));

    // Repair a missing polarity with a forced fresh variable.
    for (Polarity want : {Polarity::positive, Polarity::negative}) {
        if (std::find(out.polarity.begin(), out.polarity.end(), want) != out.polarity.end()) continue;
        const int z = static_cast<int>(++out.formula.num_vars);
        out.origin.push_back(0);
        out.formula.clauses.push_back({want == Polarity::positive ? z : -z});
        out.polarity.push_back(want);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class GadgetBuilder {
public:
    GadgetBuilder(GadgetGraph& g) : g_(g) {}

    std::size_t vertex(std::string label, std::optional<std::size_t> height) {
        g_.labels.push_back(std::move(label));
        g_.heights.push_back(height);
        return g_.graph.add_vertex();
    }

    void edge(std::size_t a, std::size_t b) {
        if (!g_.graph.has_edge(a, b)) g_.graph.add_edge(a, b);
    }

private:
    GadgetGraph& g_;
};

}  // namespace

GadgetGraph build_gadget(const MonotoneCnf& phi) {
    validate(phi.formula);
    if (phi.polarity.size() != phi.formula.clauses.size())
        throw InputError("build_gadget: polarity tags do not match the clause list");
    for (std::size_t c = 0; c < phi.polarity.size(); ++c) {
        const auto p = polarity_of(phi.formula.clauses[c]);
        if (!p || *p != phi.polarity[c]) throw InputError("build_gadget: clause " + std::to_string(c + 1) +
                                                          " does not match its polarity tag");
    }
    if (phi.positive_count() == 0 || phi.negative_count() == 0)
        throw InputError("build_gadget: needs at least one clause of each polarity");

    GadgetGraph gad;
    GadgetBuilder b(gad);
    const std::size_t n = phi.formula.num_vars;
    for (std::size_t i = 1; i <= n; ++i) gad.w.push_back(b.vertex("w_" + std::to_string(i), 0));
    gad.w_plus = b.vertex("w+", 0);
    gad.w_minus = b.vertex("w-", 0);
    gad.v0 = b.vertex("v0", std::nullopt);
    gad.W = gad.w;
    gad.W.push_back(gad.w_plus);
    gad.W.push_back(gad.w_minus);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.edge(gad.w[i], gad.w[j]);
    b.edge(gad.w_plus, gad.w_minus);

    for (Polarity side : {Polarity::positive, Polarity::negative}) {
        const std::string s = side == Polarity::positive ? "+" : "-";
        const std::size_t hub = side == Polarity::positive ? gad.w_plus : gad.w_minus;
        std::vector<std::size_t> members{gad.v0};

        std::vector<std::size_t> lit_u, lit_v;
        for (std::size_t i = 1; i <= n; ++i) {
            lit_u.push_back(b.vertex("u_" + std::to_string(i) + s, 1));
            lit_v.push_back(b.vertex("v_" + std::to_string(i) + s, 1));
            b.edge(lit_u.back(), gad.w[i - 1]);
            b.edge(lit_v.back(), gad.w[i - 1]);
            members.push_back(lit_u.back());
            members.push_back(lit_v.back());
        }

        std::vector<std::vector<int>> clauses;
        for (std::size_t c = 0; c < phi.polarity.size(); ++c)
            if (phi.polarity[c] == side) clauses.push_back(phi.formula.clauses[c]);
        const std::size_t count = clauses.size();

        // OR gate per clause; with a single clause c_1 = a_1 is the shared v0.
        std::vector<std::size_t> gate;
        for (std::size_t j = 1; j <= count; ++j) {
            std::vector<std::size_t> occ;
            for (int lit : clauses[j - 1]) {
                const auto i = static_cast<std::size_t>(std::abs(lit));
                const std::string tag = std::to_string(i) + "," + std::to_string(j) + s;
                for (const char* name : {"u_", "v_"}) {
                    const std::size_t o = b.vertex(name + tag, 2);
                    b.edge(o, lit_u[i - 1]);
                    b.edge(o, lit_v[i - 1]);
                    occ.push_back(o);
                    members.push_back(o);
                }
            }
            const std::size_t c =
                count == 1 ? gad.v0 : b.vertex("c_" + std::to_string(j) + s, 3);
            if (c != gad.v0) members.push_back(c);
            for (std::size_t o : occ) b.edge(o, c);
            gate.push_back(c);
        }

        // AND chain a_1 = c_1, a_j ~ a_{j-1}, c_j, ending in v0.
        std::size_t prev = gate.front();
        for (std::size_t j = 2; j <= count; ++j) {
            const std::size_t a = j == count ? gad.v0 : b.vertex("a_" + std::to_string(j) + s, 2 + j);
            if (a != gad.v0) members.push_back(a);
            b.edge(a, prev);
            b.edge(a, gate[j - 1]);
            prev = a;
        }

        for (std::size_t v : members) b.edge(v, hub);
    }
    return gad;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> assignment_to_partition(
    const GadgetGraph& gadget, const std::vector<bool>& assignment) {
    if (assignment.size() != gadget.w.size())
        throw InputError("assignment has " + std::to_string(assignment.size()) + " values, formula has " +
                         std::to_string(gadget.w.size()) + " variables");
    std::vector<std::size_t> plus{gadget.w_plus}, minus{gadget.w_minus};
    for (std::size_t i = 0; i < assignment.size(); ++i) (assignment[i] ? plus : minus).push_back(gadget.w[i]);
    return {plus, minus};
}

Correspondence verify_correspondence(const GadgetGraph& gadget, const MonotoneCnf& phi, std::size_t radon_cap) {
    if (gadget.w.size() != phi.formula.num_vars) throw InputError("verify_correspondence: gadget/formula mismatch");
    Correspondence out;
    out.sat_count = count_models(phi.formula);
    out.radon_count = brute_force_radon(gadget.graph, gadget.W, radon_cap).count;
    out.match = out.sat_count == out.radon_count;
    return out;
}

// ---------------------------------------------------------------------------

PowerFormula formula_power(const CnfFormula& phi, std::size_t ell, std::uint64_t cap) {
    validate(phi);
    if (ell == 0) throw InputError("formula_power: the exponent must be positive");
    const std::uint64_t m = phi.clauses.size();
    std::uint64_t size = ell;
    for (std::size_t j = 0; j < ell && m > 0; ++j) {
        if (size > cap / m) throw CapExceeded("formula_power: l * (#clauses)^l exceeds the cap " + std::to_string(cap));
        size *= m;
    }
    if (m == 0) size = 0;
    if (size > cap) throw CapExceeded("formula_power: l * (#clauses)^l exceeds the cap " + std::to_string(cap));

    const std::size_t n = phi.num_vars;
    PowerFormula out;
    out.formula.num_vars = ell * n;
    for (std::size_t j = 0; j < ell; ++j)
        for (std::size_t i = 1; i <= n; ++i) out.origin.emplace_back(j, i);
    if (m == 0) return out;

    std::vector<std::size_t> tuple(ell, 0);
    for (;;) {
        std::vector<int> clause;
        for (std::size_t j = 0; j < ell; ++j)
            for (int lit : phi.clauses[tuple[j]]) {
                const int var = static_cast<int>(j * n) + std::abs(lit);
                clause.push_back(lit > 0 ? var : -var);
            }
        out.formula.clauses.push_back(std::move(clause));
        std::size_t j = ell;
        while (j > 0 && ++tuple[j - 1] == m) tuple[--j] = 0;
        if (j == 0) break;
    }
    return out;
}

}  // namespace tvk
