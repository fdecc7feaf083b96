// tvk: Tverberg partitions in Euclidean space, on the integer lattice and in
// graphs, plus the SAT gadget for geodetic Radon partitions.
//
// Exit codes: 0 success, 1 input/usage error, 2 valid run that missed its
// target (pipeline shortfall, gadget count mismatch). An invalid certificate
// is reported with exit code 1.

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tverberg/io.hpp"
#include "tverberg/lattice.hpp"

namespace {

using namespace tvk;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_shortfall = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TVK_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw InputError("TVK_SEED is not an unsigned integer");
    }
    return 0;
}

struct EuclidArgs {
    std::string points, mode = "t1", lambda, epsilon = "1/10";
    std::optional<std::uint64_t> seed;
    std::size_t trials = 10;
};

int cmd_euclid(const EuclidArgs& a) {
    const PointSet x = parse_points_csv(read_file(a.points));
    const std::size_t d = x.dim();
    const Rational epsilon = parse_rational(a.epsilon);
    const std::uint64_t seed = resolve_seed(a.seed);
    PipelineConfig config;
    config.trial_budget = a.trials;

    PipelineResult r;
    if (a.mode == "t1") {
        r = theorem1_pipeline(x, epsilon, seed, config);
    } else if (a.mode == "t2") {
        const Rational lambda =
            a.lambda.empty() ? Rational(1, 4 * static_cast<unsigned long>(d + 1)) : parse_rational(a.lambda);
        r = theorem2_pipeline(x, lambda, epsilon, seed, config);
    } else {
        const Rational lambda = a.lambda.empty() ? Rational(1, 1UL << (d + 2)) : parse_rational(a.lambda);
        r = theorem3_pipeline(x, lambda, epsilon, seed, config);
    }
    std::cout << certificate_json(r, seed);
    return r.shortfall ? exit_shortfall : exit_ok;
}

struct VerifyArgs {
    std::string certificate, points, graph, u;
};

int cmd_verify(const VerifyArgs& a) {
    const std::string text = read_file(a.certificate);
    const std::string type = certificate_type(text);
    std::string why;
    bool ok = false;
    if (type == "euclid") {
        if (a.points.empty()) throw InputError("verify: a euclid certificate needs --points");
        ok = verify_certificate(parse_certificate_json(text), parse_points_csv(read_file(a.points)), &why);
    } else if (type == "geodetic") {
        if (a.graph.empty() || a.u.empty()) throw InputError("verify: a geodetic certificate needs --graph and --u");
        const UGraph g = parse_edge_list(read_file(a.graph));
        const auto u = parse_id_list(read_file(a.u));
        ok = verify_geodetic_certificate(g, u, parse_geodetic_certificate_json(text), &why);
    } else {
        throw InputError("verify: unknown certificate type \"" + type + "\"");
    }
    if (!ok) {
        std::cerr << "tvk: invalid certificate: " << why << '\n';
        return exit_input;
    }
    std::cerr << "tvk: certificate valid\n";
    return exit_ok;
}

struct GraphArgs {
    std::string graph, u, mode = "tree";
    std::size_t k = 2, cap = 12;
};

int cmd_graph(const GraphArgs& a) {
    const UGraph g = parse_edge_list(read_file(a.graph));
    const auto u = parse_id_list(read_file(a.u));
    if (a.mode == "oracle") {
        const bool exists = brute_force_tverberg(g, u, a.k, a.cap);
        nlohmann::json j{{"format_version", format_version}, {"type", "oracle"}, {"k", a.k}, {"exists", exists}};
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    GeodeticCertificate cert = a.mode == "tree" ? tree_tverberg(g, u) : cactus_tverberg(g, u);
    attach_hull_traces(g, cert);
    std::cout << geodetic_certificate_json(cert, a.mode);
    return cert.parts.size() < cert.k_target ? exit_shortfall : exit_ok;
}

struct GadgetArgs {
    std::string cnf, out = "gadget";
    std::size_t power = 1, cap = 20;
    bool verify = false;
};

int cmd_gadget(const GadgetArgs& a) {
    CnfFormula phi = parse_dimacs(read_file(a.cnf));
    if (a.power > 1) {
        phi = formula_power(phi, a.power).formula;
        write_file(a.out + ".cnf", to_dimacs(phi));
    }
    const MonotoneCnf mono = monotonize(phi);
    const GadgetGraph gadget = build_gadget(mono);
    write_file(a.out + ".edges", format_edge_list(gadget.graph));
    write_file(a.out + ".json", gadget_sidecar_json(gadget));
    if (!a.verify) return exit_ok;

    const Correspondence c = verify_correspondence(gadget, mono, a.cap);
    nlohmann::json j{{"format_version", format_version},
                     {"sat_count", c.sat_count},
                     {"radon_count", c.radon_count},
                     {"match", c.match}};
    std::cout << j.dump(2) << '\n';
    return c.match ? exit_ok : exit_shortfall;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tverberg partitions: Euclidean, lattice and geodetic"};
    app.require_subcommand(1);

    EuclidArgs ea;
    auto* euclid = app.add_subcommand("euclid", "Tverberg certificate for a point set");
    euclid->add_option("points", ea.points, "points CSV")->required();
    euclid->add_option("--mode", ea.mode, "t1 (iterated Radon), t2 (sampled exact centerpoint, d<=2), t3 (lattice, d<=2)")
        ->check(CLI::IsMember({"t1", "t2", "t3"}));
    euclid->add_option("--lambda", ea.lambda, "sample accuracy (default 1/(4(d+1)) for t2, 2^-(d+2) for t3)");
    euclid->add_option("--epsilon", ea.epsilon, "failure probability per trial")->capture_default_str();
    euclid->add_option("--seed", ea.seed, "random seed (default: $TVK_SEED, else 0)");
    euclid->add_option("--trials", ea.trials, "trial budget")->capture_default_str()->check(CLI::PositiveNumber);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "re-check a certificate against its instance");
    verify->add_option("certificate", va.certificate, "certificate JSON")->required();
    verify->add_option("--points", va.points, "points CSV (euclid certificates)");
    verify->add_option("--graph", va.graph, "edge list (geodetic certificates)");
    verify->add_option("--u", va.u, "U id list (geodetic certificates)");

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "geodetic Tverberg partition or oracle verdict");
    graph->add_option("graph", ga.graph, "edge list with \"n m\" header")->required();
    graph->add_option("u", ga.u, "U as an id list (repeats allowed)")->required();
    graph->add_option("--mode", ga.mode, "tree, cactus or oracle")
        ->check(CLI::IsMember({"tree", "cactus", "oracle"}))
        ->capture_default_str();
    graph->add_option("--k", ga.k, "part count for the oracle")->capture_default_str();
    graph->add_option("--cap", ga.cap, "oracle size cap on |U|")->capture_default_str();

    GadgetArgs da;
    auto* gadget = app.add_subcommand("gadget", "gadget graph G(phi) from a DIMACS CNF");
    gadget->add_option("cnf", da.cnf, "DIMACS CNF file")->required();
    gadget->add_option("--power", da.power, "replace phi by phi^l first")->check(CLI::PositiveNumber);
    gadget->add_option("--out", da.out, "output prefix for .edges/.json (and .cnf with --power)")
        ->capture_default_str();
    gadget->add_flag("--verify", da.verify, "compare model count with Radon partition count");
    gadget->add_option("--cap", da.cap, "cap on |W| for the Radon enumeration")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }

    try {
        if (*euclid) return cmd_euclid(ea);
        if (*verify) return cmd_verify(va);
        if (*graph) return cmd_graph(ga);
        return cmd_gadget(da);
    } catch (const std::invalid_argument& e) {  // InputError, UnsupportedDimension
        std::cerr << "tvk: " << e.what() << '\n';
    } catch (const CapExceeded& e) {
        std::cerr << "tvk: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        std::cerr << "tvk: " << e.what() << '\n';
    }
    return exit_input;
}
