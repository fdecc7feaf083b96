#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tverberg/io.hpp"

namespace tvk {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::size_t parse_size(std::string_view tok, const std::string& where) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError(where + ": expected a nonnegative integer, got \"" + std::string(tok) + "\"");
    return v;
}

}  // namespace

PointSet parse_points_csv(std::string_view text) {
    std::optional<std::size_t> dim;
    std::vector<Point> rows;
    std::size_t line_no = 0;
    bool first = true;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::string where = "line " + std::to_string(line_no);
        if (first && line.starts_with("dim=")) {
            dim = parse_size(trim(line.substr(4)), where);
            if (*dim == 0) throw InputError(where + ": dimension must be positive");
            first = false;
            continue;
        }
        first = false;
        Point p;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            const auto cell = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
            try {
                p.push_back(parse_rational(cell));
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!dim) dim = p.size();
        if (p.size() != *dim)
            throw InputError(where + ": point has " + std::to_string(p.size()) + " coordinates, expected " +
                             std::to_string(*dim));
        rows.push_back(std::move(p));
    }
    if (rows.empty()) throw InputError("points file contains no points");
    return PointSet(*dim, std::move(rows));
}

std::string format_points_csv(const PointSet& x) {
    std::string out = "dim=" + std::to_string(x.dim()) + "\n";
    for (const auto& p : x.points()) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out += ',';
            out += to_string(p[j]);
        }
        out += '\n';
    }
    return out;
}

UGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string a, b;
    if (!(in >> a >> b)) throw InputError("graph file: missing \"n m\" header");
    const std::size_t n = parse_size(a, "graph header"), m = parse_size(b, "graph header");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(in >> a >> b))
            throw InputError("graph file: header declares " + std::to_string(m) + " edges, found " + std::to_string(i));
        const std::string where = "graph edge " + std::to_string(i + 1);
        edges.emplace_back(parse_size(a, where), parse_size(b, where));
    }
    if (in >> a) throw InputError("graph file: trailing data after " + std::to_string(m) + " edges");
    return UGraph::from_edges(n, edges);
}

std::string format_edge_list(const UGraph& g) {
    std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<std::size_t> parse_id_list(std::string_view text) {
    std::string s(text);
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<std::size_t> ids;
    std::string tok;
    while (in >> tok) ids.push_back(parse_size(tok, "id list"));
    return ids;
}

// ---------------------------------------------------------------------------

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <class Fn>
auto schema(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": schema mismatch: " + e.what());
    }
}

json integer_json(const Integer& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return v.get_str();
}

std::vector<std::vector<std::size_t>> read_parts(const json& j) {
    return j.at("parts").get<std::vector<std::vector<std::size_t>>>();
}

}  // namespace

std::string certificate_json(const PipelineResult& result, std::uint64_t seed) {
    const auto& cert = result.certificate;
    json j;
    j["format_version"] = format_version;
    j["type"] = "euclid";
    j["dim"] = cert.witness.size();
    json witness = json::array();
    for (const auto& c : cert.witness) witness.push_back(to_string(c));
    j["witness"] = witness;
    j["parts"] = cert.parts;
    json proofs = json::array();
    for (const auto& cc : cert.proofs) {
        json terms = json::array();
        for (const auto& [id, coef] : cc.support) terms.push_back({{"id", id}, {"coef", to_string(coef)}});
        proofs.push_back(terms);
    }
    j["proofs"] = proofs;
    j["k_target"] = integer_json(result.k_target);
    j["k_achieved"] = result.k_achieved;
    j["shortfall_flag"] = result.shortfall;
    j["seed"] = seed;
    j["trials"] = result.trials;
    j["center_method"] = to_string(result.center.method);
    j["center_fraction"] = to_string(result.center.target_fraction);
    return j.dump(2) + "\n";
}

TverbergCertificate parse_certificate_json(std::string_view text) {
    const json j = parse_json(text);
    return schema("euclid certificate", [&] {
        if (j.at("type").get<std::string>() != "euclid") throw InputError("not a euclid certificate");
        TverbergCertificate cert;
        for (const auto& c : j.at("witness")) cert.witness.push_back(parse_rational(c.get<std::string>()));
        cert.parts = read_parts(j);
        for (const auto& terms : j.at("proofs")) {
            ConvexCombination cc;
            for (const auto& t : terms)
                cc.support.emplace_back(t.at("id").get<std::size_t>(), parse_rational(t.at("coef").get<std::string>()));
            cert.proofs.push_back(std::move(cc));
        }
        return cert;
    });
}

std::string geodetic_certificate_json(const GeodeticCertificate& cert, std::string_view mode) {
    json j;
    j["format_version"] = format_version;
    j["type"] = "geodetic";
    j["mode"] = std::string(mode);
    j["witness"] = cert.witness;
    j["parts"] = cert.parts;
    json traces = json::array();
    for (const auto& t : cert.hull_traces) traces.push_back({{"members", t.members}, {"entry", t.entry}});
    j["hull_traces"] = traces;
    j["k_target"] = cert.k_target;
    j["k_achieved"] = cert.parts.size();
    j["shortfall_flag"] = cert.parts.size() < cert.k_target;
    j["size_adjusted"] = cert.size_adjusted;
    return j.dump(2) + "\n";
}

GeodeticCertificate parse_geodetic_certificate_json(std::string_view text) {
    const json j = parse_json(text);
    return schema("geodetic certificate", [&] {
        if (j.at("type").get<std::string>() != "geodetic") throw InputError("not a geodetic certificate");
        GeodeticCertificate cert;
        cert.witness = j.at("witness").get<std::size_t>();
        cert.parts = read_parts(j);
        if (j.contains("hull_traces"))
            for (const auto& t : j.at("hull_traces")) {
                HullTrace h;
                h.members = t.at("members").get<std::vector<std::size_t>>();
                h.entry = t.at("entry").get<std::vector<std::size_t>>();
                for (std::size_t e : h.entry) h.steps = std::max(h.steps, e);
                cert.hull_traces.push_back(std::move(h));
            }
        cert.k_target = j.value("k_target", std::size_t{0});
        cert.size_adjusted = j.value("size_adjusted", false);
        return cert;
    });
}

std::string certificate_type(std::string_view text) {
    const json j = parse_json(text);
    return schema("certificate", [&] {
        if (j.at("format_version").get<int>() != format_version)
            throw InputError("unsupported certificate format_version");
        return j.at("type").get<std::string>();
    });
}

std::string gadget_sidecar_json(const GadgetGraph& gadget) {
    json labels = json::object(), heights = json::object();
    for (std::size_t v = 0; v < gadget.labels.size(); ++v) {
        labels[std::to_string(v)] = gadget.labels[v];
        if (gadget.heights[v]) heights[std::to_string(v)] = *gadget.heights[v];
    }
    json j;
    j["format_version"] = format_version;
    j["n"] = gadget.graph.size();
    j["labels"] = labels;
    j["heights"] = heights;
    j["W"] = gadget.W;
    j["v0"] = gadget.v0;
    return j.dump(2) + "\n";
}

}  // namespace tvk
