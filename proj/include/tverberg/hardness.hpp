#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tverberg/graph.hpp"

namespace tvk {

/// Literals are nonzero ints: +i is x_i, -i is not x_i, for 1 <= i <= num_vars.
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Throws InputError on an empty clause, out-of-range or repeated literals.
void validate(const CnfFormula& phi);

/// DIMACS CNF. Repeated literals in a clause are collapsed; tautological
/// clauses, a clause count differing from the header and a missing final 0
/// are errors.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& phi);

/// assignment[i] is the value of x_{i+1}.
bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment);
std::uint64_t count_models(const CnfFormula& phi, std::size_t cap = 24);
bool satisfiable(const CnfFormula& phi, std::size_t cap = 24);

/// Drops every literal over the given variables (1-based); clauses that become
/// empty stay empty and make the formula unsatisfiable.
CnfFormula delete_variables(const CnfFormula& phi, std::span<const std::size_t> vars);

enum class Polarity { positive, negative };

struct MonotoneCnf {
    CnfFormula formula;
    std::vector<Polarity> polarity;  // per clause
    /// Per variable of the monotone formula: +i stands for x_i of the input,
    /// -i for not x_i, 0 for a fresh variable.
    std::vector<int> origin;

    std::size_t positive_count() const;
    std::size_t negative_count() const;
};

/// Every clause all-positive or all-negative, at least one of each.
bool is_monotone(const CnfFormula& phi);

/// Formulas that already are monotone keep their clauses. Otherwise each not
/// x_i becomes a new y_i = x_{n+i} together with (x_i or y_i) and (not x_i or
/// not y_i). A missing polarity is repaired with a fresh variable and a unit
/// clause that forces it.
MonotoneCnf monotonize(const CnfFormula& phi);

struct GadgetGraph {
    UGraph graph;
    std::vector<std::string> labels;
    std::vector<std::optional<std::size_t>> heights;  // empty for v0
    std::vector<std::size_t> w;                        // w_1..w_n
    std::size_t w_plus = 0, w_minus = 0, v0 = 0;
    std::vector<std::size_t> W;                        // w_1..w_n, w+, w-
};

/// Deterministic: vertices w_1..w_n, w+, w-, v0, then the positive side, then
/// the negative side.
GadgetGraph build_gadget(const MonotoneCnf& phi);

/// W+ = {w+} and the w_i of true variables; W- = {w-} and the rest.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> assignment_to_partition(
    const GadgetGraph& gadget, const std::vector<bool>& assignment);

struct Correspondence {
    std::uint64_t sat_count = 0;
    std::uint64_t radon_count = 0;
    bool match = false;
};

Correspondence verify_correspondence(const GadgetGraph& gadget, const MonotoneCnf& phi, std::size_t radon_cap = 20);

struct PowerFormula {
    CnfFormula formula;
    /// Per new variable v (index v-1): (copy j, input variable i), v = j n + i.
    std::vector<std::pair<std::size_t, std::size_t>> origin;
};

/// One clause per l-tuple of input clauses, the union of the tuple's clauses
/// over disjoint variable copies. Cap bounds l * (#clauses)^l.
PowerFormula formula_power(const CnfFormula& phi, std::size_t ell, std::uint64_t cap = 1u << 22);

}  // namespace tvk
