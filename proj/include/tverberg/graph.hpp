#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/numeric.hpp"

namespace tvk {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class UGraph {
public:
    explicit UGraph(std::size_t n = 0) : adj_(n) {}

    /// Throws InputError on loops, repeated edges or out-of-range ids.
    static UGraph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    bool has_edge(std::size_t u, std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u < v, sorted

    std::size_t add_vertex();
    void add_edge(std::size_t u, std::size_t v);

    bool connected() const;

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edges_ = 0;
};

inline constexpr std::uint32_t unreachable = UINT32_MAX;

/// BFS distances from src; `unreachable` for other components.
std::vector<std::uint32_t> bfs_distances(const UGraph& g, std::size_t src);

/// All-pairs distances for repeated hull queries on one graph.
class Distances {
public:
    explicit Distances(const UGraph& g);
    std::size_t size() const { return rows_.size(); }
    const std::vector<std::uint32_t>& from(std::size_t v) const { return rows_[v]; }

private:
    std::vector<std::vector<std::uint32_t>> rows_;
};

/// Vertices on some shortest u-v path, ascending. Throws InputError when the
/// graph is disconnected.
std::vector<std::size_t> interval(const UGraph& g, std::size_t u, std::size_t v);

struct HullTrace {
    std::vector<std::size_t> members;  // ascending
    std::vector<std::size_t> entry;    // step at which members[i] entered; 0 for the seed set
    std::size_t steps = 0;             // extension steps that added something
};

/// Least set containing a that is closed under taking intervals. Each step adds
/// every vertex on a shortest path between two current members, so entry steps
/// are the rounds of the closure. Repeated ids in a are allowed.
HullTrace geodetic_hull_trace(const UGraph& g, std::span<const std::size_t> a);
HullTrace geodetic_hull_trace(const Distances& d, std::span<const std::size_t> a);
std::vector<std::size_t> geodetic_hull(const UGraph& g, std::span<const std::size_t> a);
std::vector<std::size_t> geodetic_hull(const Distances& d, std::span<const std::size_t> a);

bool is_tree(const UGraph& g);

/// Vertex p such that no component of G - p holds more than floor(|U|/2)
/// elements of the multiset U. Linear time.
std::size_t tree_centerpoint(const UGraph& g, std::span<const std::size_t> u);

struct GeodeticCertificate {
    std::size_t witness = 0;
    std::vector<std::vector<std::size_t>> parts;  // multisets of vertex ids
    std::vector<HullTrace> hull_traces;           // one per part
    std::size_t k_target = 0;
    bool size_adjusted = false;  // |U| was not of the canonical form
};

/// |U| = 2k gives k parts. Odd |U| is accepted with k = floor(|U|/2).
/// Traces are left empty to keep the construction linear; see attach_hull_traces.
GeodeticCertificate tree_tverberg(const UGraph& g, std::span<const std::size_t> u);

void attach_hull_traces(const UGraph& g, GeodeticCertificate& cert);

/// Parts form a multiset partition of U and the witness lies in the geodetic
/// hull of each part (recomputed, traces are not trusted).
bool verify_geodetic_certificate(const UGraph& g, std::span<const std::size_t> u, const GeodeticCertificate& cert,
                                 std::string* why = nullptr);

/// Connected, and every biconnected block is a single edge or a cycle.
bool is_cactus(const UGraph& g);

struct CactusDecomposition {
    UGraph split_graph;                      // no two cycles share a vertex
    std::vector<bool> red;                   // per split vertex
    std::vector<std::size_t> original;       // split vertex -> input vertex
    std::vector<std::size_t> lift;           // input vertex -> split vertex carrying its U elements
    UGraph block_tree;                       // one node per cycle and per cycle-free split vertex
    std::vector<std::size_t> block_of;       // split vertex -> block tree node
    std::vector<std::vector<std::size_t>> cycle;  // block tree node -> cycle in cyclic order (empty for vertex nodes)
    std::vector<std::size_t> weight;         // block tree node -> number of lifted U elements
};

/// A vertex on c >= 2 cycles becomes c blue copies (one per cycle) joined to a
/// red copy, which keeps the vertex's bridge edges and its U elements.
CactusDecomposition cactus_decompose(const UGraph& g, std::span<const std::size_t> u = {});

/// Vertices x, y such that no component of G - {x, y} holds more than
/// floor(|U|/2) elements of U (2k-1 when |U| = 4k-2). x == y only on graphs
/// with a single vertex.
std::pair<std::size_t, std::size_t> cactus_separator_pair(const UGraph& g, std::span<const std::size_t> u);

/// |U| = 4k-2 gives at least k parts; other sizes use k = floor((|U|+2)/4).
GeodeticCertificate cactus_tverberg(const UGraph& g, std::span<const std::size_t> u);

/// Largest number of U elements in one component of G minus `removed`.
std::size_t max_component_load(const UGraph& g, std::span<const std::size_t> u, std::span<const std::size_t> removed);

struct RadonCount {
    bool exists = false;
    std::uint64_t count = 0;
};

/// Counts unordered bipartitions of the vertex set W (both sides nonempty)
/// whose hulls meet.
RadonCount brute_force_radon(const UGraph& g, std::span<const std::size_t> w, std::size_t cap = 20);

/// Whether some partition of U into exactly k nonempty parts has a vertex
/// common to all part hulls.
bool brute_force_tverberg(const UGraph& g, std::span<const std::size_t> u, std::size_t k, std::size_t cap = 12);

}  // namespace tvk
