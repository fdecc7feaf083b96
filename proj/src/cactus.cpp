#include <algorithm>
#include <map>

#include "graph_detail.hpp"
#include "tverberg/graph.hpp"

namespace tvk {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

// Biconnected blocks as edge lists (iterative Tarjan with an edge stack).
std::vector<std::vector<Edge>> biconnected_blocks(const UGraph& g) {
    const std::size_t n = g.size();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unseen), low(n, 0);
    std::vector<std::vector<Edge>> blocks;
    std::vector<Edge> edges;
    struct Frame {
        std::size_t v, parent, next;
    };
    std::vector<Frame> stack;
    std::size_t clock = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != unseen) continue;
        disc[root] = low[root] = clock++;
        stack.push_back({root, unseen, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const std::size_t w = nb[f.next++];
                if (disc[w] == unseen) {
                    edges.emplace_back(f.v, w);
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edges.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const std::size_t v = f.v, p = f.parent;
            stack.pop_back();
            if (p == unseen) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<Edge> block;
                for (;;) {
                    const Edge e = edges.back();
                    edges.pop_back();
                    block.push_back(e);
                    if (e.first == p && e.second == v) break;
                }
                blocks.push_back(std::move(block));
            }
        }
    }
    return blocks;
}

std::vector<std::size_t> block_vertices(const std::vector<Edge>& block) {
    std::vector<std::size_t> vs;
    for (const auto& [a, b] : block) {
        vs.push_back(a);
        vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Cyclic order of a cycle block, starting at its smallest vertex.
std::vector<std::size_t> cycle_order(const std::vector<Edge>& block) {
    std::map<std::size_t, std::vector<std::size_t>> nb;
    for (const auto& [a, b] : block) {
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    std::vector<std::size_t> order{nb.begin()->first};
    std::size_t prev = order.front(), cur = std::min(nb[prev][0], nb[prev][1]);
    while (cur != order.front()) {
        order.push_back(cur);
        const auto& two = nb[cur];
        const std::size_t next = two[0] == prev ? two[1] : two[0];
        prev = cur;
        cur = next;
    }
    return order;
}

struct Blocks {
    std::vector<std::vector<std::size_t>> cycles;  // cyclic order
    std::vector<Edge> bridges;
};

// nullopt-like signalling through the bool: false when some block is neither
// an edge nor a cycle.
bool classify(const UGraph& g, Blocks& out) {
    for (auto& block : biconnected_blocks(g)) {
        if (block.size() == 1) {
            out.bridges.push_back(block.front());
            continue;
        }
        if (block_vertices(block).size() != block.size()) return false;
        out.cycles.push_back(cycle_order(block));
    }
    return true;
}

}  // namespace

bool is_cactus(const UGraph& g) {
    if (!g.connected()) return false;
    Blocks b;
    return classify(g, b);
}

CactusDecomposition cactus_decompose(const UGraph& g, std::span<const std::size_t> u) {
    detail::check_vertex_ids(g, u, "cactus_decompose");
    Blocks blocks;
    if (!g.connected() || !classify(g, blocks)) throw InputError("cactus_decompose: input is not a cactus");

    const std::size_t n = g.size();
    std::vector<std::size_t> on_cycles(n, 0);
    for (const auto& c : blocks.cycles)
        for (std::size_t v : c) ++on_cycles[v];

    // Split vertices keep their input id for the red copy, so the lift of U is
    // the identity; blue copies get fresh ids.
    CactusDecomposition dec;
    dec.split_graph = UGraph(n);
    dec.red.assign(n, false);
    dec.original.resize(n);
    dec.lift.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        dec.original[v] = v;
        dec.lift[v] = v;
        dec.red[v] = on_cycles[v] >= 2;
    }
    std::vector<std::vector<std::size_t>> split_cycles;
    for (const auto& c : blocks.cycles) {
        std::vector<std::size_t> copy;
        for (std::size_t v : c) {
            if (!dec.red[v]) {
                copy.push_back(v);
                continue;
            }
            const std::size_t blue = dec.split_graph.add_vertex();
            dec.red.push_back(false);
            dec.original.push_back(v);
            dec.split_graph.add_edge(v, blue);
            copy.push_back(blue);
        }
        for (std::size_t i = 0; i < copy.size(); ++i) dec.split_graph.add_edge(copy[i], copy[(i + 1) % copy.size()]);
        split_cycles.push_back(std::move(copy));
    }
    for (const auto& [a, b] : blocks.bridges) dec.split_graph.add_edge(a, b);

    const std::size_t ns = dec.split_graph.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    dec.block_of.assign(ns, none);
    for (std::size_t c = 0; c < split_cycles.size(); ++c) {
        for (std::size_t s : split_cycles[c]) {
            if (dec.block_of[s] != none) throw std::logic_error("cactus_decompose: cycles share a split vertex");
            if (dec.red[s]) throw std::logic_error("cactus_decompose: red vertex on a cycle");
            dec.block_of[s] = c;
        }
        dec.cycle.push_back(split_cycles[c]);
    }
    for (std::size_t s = 0; s < ns; ++s)
        if (dec.block_of[s] == none) {
            dec.block_of[s] = dec.cycle.size();
            dec.cycle.emplace_back();
        }

    dec.block_tree = UGraph(dec.cycle.size());
    for (const auto& [a, b] : dec.split_graph.edges()) {
        const std::size_t x = dec.block_of[a], y = dec.block_of[b];
        if (x == y) continue;
        if (dec.block_tree.has_edge(x, y)) throw std::logic_error("cactus_decompose: block tree has a cycle");
        dec.block_tree.add_edge(x, y);
    }
    if (!is_tree(dec.block_tree)) throw std::logic_error("cactus_decompose: block tree is not a tree");

    dec.weight.assign(dec.cycle.size(), 0);
    for (std::size_t v : u) ++dec.weight[dec.block_of[dec.lift[v]]];
    return dec;
}

// ---------------------------------------------------------------------------

namespace {

// Weighted centroid: every component of T - c weighs at most bound.
std::size_t weighted_centroid(const UGraph& t, const std::vector<std::size_t>& weight, std::size_t bound) {
    const std::size_t n = t.size();
    std::vector<std::size_t> order{0}, parent(n, n), below(weight);
    parent[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (std::size_t w : t.neighbors(order[head]))
            if (parent[w] == n) {
                parent[w] = order[head];
                order.push_back(w);
            }
    for (std::size_t i = n; i-- > 1;) below[parent[order[i]]] += below[order[i]];
    std::size_t c = 0;
    for (;;) {
        std::size_t next = c;
        for (std::size_t w : t.neighbors(c))
            if (w != parent[c] && below[w] > bound) next = w;
        if (next == c) return c;
        c = next;
    }
}

// Subtree weights of the block tree rooted at r.
std::vector<std::size_t> rooted_weights(const UGraph& t, const std::vector<std::size_t>& weight, std::size_t r) {
    const std::size_t n = t.size();
    std::vector<std::size_t> order{r}, parent(n, n), below(weight);
    parent[r] = r;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (std::size_t w : t.neighbors(order[head]))
            if (parent[w] == n) {
                parent[w] = order[head];
                order.push_back(w);
            }
    for (std::size_t i = n; i-- > 1;) below[parent[order[i]]] += below[order[i]];
    return below;
}

}  // namespace

std::pair<std::size_t, std::size_t> cactus_separator_pair(const UGraph& g, std::span<const std::size_t> u) {
    if (u.empty()) throw InputError("cactus_separator_pair: U is empty");
    const CactusDecomposition dec = cactus_decompose(g, u);
    const std::size_t bound = u.size() / 2;
    if (g.size() == 1) return {0, 0};

    auto accept = [&](std::size_t x, std::size_t y) {
        const std::size_t removed[] = {x, y};
        return max_component_load(g, u, removed) <= bound;
    };

    const std::size_t c = weighted_centroid(dec.block_tree, dec.weight, bound);
    const auto& cyc = dec.cycle[c];
    if (cyc.empty()) {
        // A cycle-free split vertex: deleting its input vertex only refines the
        // components of the block tree around it.
        const std::size_t x = dec.original[std::find(dec.block_of.begin(), dec.block_of.end(), c) - dec.block_of.begin()];
        const std::size_t y = x == 0 ? 1 : 0;
        if (accept(x, y)) return {x, y};
    } else {
        // Weight hanging off each cycle vertex, then both open arcs between the
        // chosen pair must stay within the bound.
        const auto below = rooted_weights(dec.block_tree, dec.weight, c);
        std::vector<std::size_t> own(dec.split_graph.size(), 0);
        for (std::size_t v : u) ++own[dec.lift[v]];
        const std::size_t m = cyc.size();
        std::vector<std::size_t> hang(m, 0), prefix(m + 1, 0);
        for (std::size_t i = 0; i < m; ++i) {
            hang[i] = own[cyc[i]];
            for (std::size_t w : dec.split_graph.neighbors(cyc[i]))
                if (dec.block_of[w] != c) hang[i] += below[dec.block_of[w]];
            prefix[i + 1] = prefix[i] + hang[i];
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const std::size_t inner = prefix[j] - prefix[i + 1];
                const std::size_t outer = prefix[m] - prefix[j + 1] + prefix[i];
                if (inner > bound || outer > bound) continue;
                const std::size_t x = dec.original[cyc[i]], y = dec.original[cyc[j]];
                if (accept(x, y)) return {x, y};
            }
    }
    // Not expected to be reached; kept as an exact safety net.
    for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = x + 1; y < g.size(); ++y)
            if (accept(x, y)) return {x, y};
    throw std::logic_error("cactus_separator_pair: no separating pair found");
}

GeodeticCertificate cactus_tverberg(const UGraph& g, std::span<const std::size_t> u) {
    if (u.size() < 2) throw InputError("cactus_tverberg: U needs at least two elements");
    const auto [x, y] = cactus_separator_pair(g, u);
    const std::size_t removed[] = {x, y};
    const auto label = detail::component_labels(g, removed);

    std::vector<std::vector<std::size_t>> groups(g.size());
    for (std::size_t v : u) {
        if (v == x || v == y)
            groups.push_back({v});
        else
            groups[label[v]].push_back(v);
    }
    const auto pairing = detail::pair_across(std::move(groups));

    // Every pair crosses {x, y}, so each of its shortest paths meets x or y.
    const auto dx = bfs_distances(g, x), dy = bfs_distances(g, y);
    std::vector<bool> has_x, has_y;
    std::size_t count_x = 0, count_y = 0;
    for (const auto& [a, b] : pairing.pairs) {
        const auto da = bfs_distances(g, a);
        has_x.push_back(dx[a] + dx[b] == da[b]);
        has_y.push_back(dy[a] + dy[b] == da[b]);
        count_x += has_x.back();
        count_y += has_y.back();
    }
    const bool use_x = count_x >= count_y;

    GeodeticCertificate cert;
    cert.witness = use_x ? x : y;
    cert.k_target = (u.size() + 2) / 4;
    cert.size_adjusted = u.size() % 4 != 2;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < pairing.pairs.size(); ++i) {
        const auto& [a, b] = pairing.pairs[i];
        if (use_x ? has_x[i] : has_y[i])
            cert.parts.push_back({a, b});
        else
            rest.insert(rest.end(), {a, b});
    }
    if (pairing.leftover) rest.push_back(*pairing.leftover);
    if (cert.parts.size() < cert.k_target) throw std::logic_error("cactus_tverberg: pigeonhole step failed");
    // Growing a part keeps the witness in its hull.
    cert.parts.front().insert(cert.parts.front().end(), rest.begin(), rest.end());
    return cert;
}

}  // namespace tvk
