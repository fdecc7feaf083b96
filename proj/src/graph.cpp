#include <algorithm>
#include <queue>

#include "graph_detail.hpp"
#include "tverberg/graph.hpp"

namespace tvk {

UGraph UGraph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    UGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool UGraph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= size() || v >= size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> UGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::size_t UGraph::add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
}

void UGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size())
        throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an out-of-range vertex");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v)
        throw InputError("repeated edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
}

bool UGraph::connected() const {
    if (size() == 0) return false;
    const auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](std::uint32_t x) { return x == unreachable; });
}

std::vector<std::uint32_t> bfs_distances(const UGraph& g, std::size_t src) {
    std::vector<std::uint32_t> dist(g.size(), unreachable);
    std::vector<std::size_t> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t v = queue[head];
        for (std::size_t w : g.neighbors(v))
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

Distances::Distances(const UGraph& g) {
    rows_.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) rows_.push_back(bfs_distances(g, v));
}

std::vector<std::size_t> interval(const UGraph& g, std::size_t u, std::size_t v) {
    const std::size_t ends[] = {u, v};
    detail::check_vertex_ids(g, ends, "interval");
    const auto du = bfs_distances(g, u);
    if (std::any_of(du.begin(), du.end(), [](std::uint32_t x) { return x == unreachable; }))
        throw InputError("interval: graph is disconnected");
    const auto dv = bfs_distances(g, v);
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < g.size(); ++w)
        if (du[w] + dv[w] == du[v]) out.push_back(w);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t not_in_hull = static_cast<std::size_t>(-1);

template <class RowFn>
HullTrace hull_core(std::size_t n, std::span<const std::size_t> a, RowFn&& row) {
    if (a.empty()) throw InputError("geodetic hull of an empty set");
    std::vector<std::size_t> step(n, not_in_hull);
    std::vector<std::size_t> members, frontier;
    for (std::size_t v : a) {
        if (v >= n) throw InputError("geodetic hull: vertex " + std::to_string(v) + " out of range");
        if (step[v] == not_in_hull) {
            step[v] = 0;
            members.push_back(v);
            frontier.push_back(v);
        }
    }

    std::size_t s = 0;
    std::vector<std::size_t> added;
    while (!frontier.empty()) {
        ++s;
        added.clear();
        for (std::size_t x : frontier) {
            const auto& dx = row(x);
            for (std::size_t y : members) {
                const std::uint32_t dxy = dx[y];
                if (dxy == unreachable) throw InputError("geodetic hull: graph is disconnected");
                if (dxy < 2) continue;
                const auto& dy = row(y);
                for (std::size_t w = 0; w < n; ++w)
                    if (step[w] == not_in_hull && dx[w] != unreachable &&
                        std::uint64_t{dx[w]} + dy[w] == dxy) {
                        step[w] = s;
                        added.push_back(w);
                    }
            }
        }
        members.insert(members.end(), added.begin(), added.end());
        frontier = added;
    }

    HullTrace t;
    std::sort(members.begin(), members.end());
    t.members = std::move(members);
    t.entry.reserve(t.members.size());
    for (std::size_t v : t.members) {
        t.entry.push_back(step[v]);
        t.steps = std::max(t.steps, step[v]);
    }
    return t;
}

}  // namespace

HullTrace geodetic_hull_trace(const UGraph& g, std::span<const std::size_t> a) {
    std::vector<std::vector<std::uint32_t>> cache(g.size());
    return hull_core(g.size(), a, [&](std::size_t v) -> const std::vector<std::uint32_t>& {
        if (cache[v].empty()) cache[v] = bfs_distances(g, v);
        return cache[v];
    });
}

HullTrace geodetic_hull_trace(const Distances& d, std::span<const std::size_t> a) {
    return hull_core(d.size(), a, [&](std::size_t v) -> const std::vector<std::uint32_t>& { return d.from(v); });
}

std::vector<std::size_t> geodetic_hull(const UGraph& g, std::span<const std::size_t> a) {
    return geodetic_hull_trace(g, a).members;
}

std::vector<std::size_t> geodetic_hull(const Distances& d, std::span<const std::size_t> a) {
    return geodetic_hull_trace(d, a).members;
}

// ---------------------------------------------------------------------------

namespace detail {

void check_vertex_ids(const UGraph& g, std::span<const std::size_t> ids, const char* what) {
    for (std::size_t v : ids)
        if (v >= g.size())
            throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " out of range (n = " +
                             std::to_string(g.size()) + ")");
}

std::vector<std::size_t> component_labels(const UGraph& g, std::span<const std::size_t> removed) {
    std::vector<std::size_t> label(g.size(), no_component);
    std::vector<bool> gone(g.size(), false);
    for (std::size_t v : removed) gone[v] = true;
    std::size_t next = 0;
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (gone[s] || label[s] != no_component) continue;
        label[s] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t w : g.neighbors(queue[head]))
                if (!gone[w] && label[w] == no_component) {
                    label[w] = next;
                    queue.push_back(w);
                }
        ++next;
    }
    return label;
}

Pairing pair_across(std::vector<std::vector<std::size_t>> groups) {
    // Largest group first; among equal sizes the lower index wins.
    auto cmp = [](const std::pair<std::size_t, std::size_t>& a, const std::pair<std::size_t, std::size_t>& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    };
    std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                        decltype(cmp)>
        heap(cmp);
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (!groups[i].empty()) heap.emplace(groups[i].size(), i);

    Pairing out;
    while (heap.size() >= 2) {
        const auto [sa, a] = heap.top();
        heap.pop();
        const auto [sb, b] = heap.top();
        heap.pop();
        out.pairs.emplace_back(groups[a].back(), groups[b].back());
        groups[a].pop_back();
        groups[b].pop_back();
        if (sa > 1) heap.emplace(sa - 1, a);
        if (sb > 1) heap.emplace(sb - 1, b);
    }
    if (!heap.empty()) {
        // With no group above half the total, at most one element is left here.
        auto& rest = groups[heap.top().second];
        for (; rest.size() >= 2; rest.resize(rest.size() - 2))
            out.pairs.emplace_back(rest[rest.size() - 1], rest[rest.size() - 2]);
        if (!rest.empty()) out.leftover = rest.back();
    }
    return out;
}

}  // namespace detail

std::size_t max_component_load(const UGraph& g, std::span<const std::size_t> u, std::span<const std::size_t> removed) {
    detail::check_vertex_ids(g, u, "max_component_load");
    detail::check_vertex_ids(g, removed, "max_component_load");
    const auto label = detail::component_labels(g, removed);
    std::vector<std::size_t> load(g.size(), 0);
    std::size_t best = 0;
    for (std::size_t v : u)
        if (label[v] != detail::no_component) best = std::max(best, ++load[label[v]]);
    return best;
}

// ---------------------------------------------------------------------------

bool is_tree(const UGraph& g) { return g.size() > 0 && g.edge_count() + 1 == g.size() && g.connected(); }

std::size_t tree_centerpoint(const UGraph& g, std::span<const std::size_t> u) {
    if (!is_tree(g)) throw InputError("tree_centerpoint: input graph is not a tree");
    detail::check_vertex_ids(g, u, "tree_centerpoint");
    if (u.empty()) throw InputError("tree_centerpoint: U is empty");

    const std::size_t n = g.size();
    std::vector<std::size_t> order{0}, parent(n, n), below(n, 0);
    parent[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (std::size_t w : g.neighbors(order[head]))
            if (parent[w] == n) {
                parent[w] = order[head];
                order.push_back(w);
            }
    for (std::size_t v : u) ++below[v];
    for (std::size_t i = n; i-- > 1;) below[parent[order[i]]] += below[order[i]];

    // Walking into a child holding more than half moves the heavy side below
    // us; the part above then holds fewer than half.
    const std::size_t bound = u.size() / 2;
    std::size_t p = 0;
    for (;;) {
        std::size_t next = p;
        for (std::size_t w : g.neighbors(p))
            if (w != parent[p] && below[w] > bound) next = w;
        if (next == p) return p;
        p = next;
    }
}

GeodeticCertificate tree_tverberg(const UGraph& g, std::span<const std::size_t> u) {
    if (u.size() < 2) throw InputError("tree_tverberg: U needs at least two elements");
    const std::size_t p = tree_centerpoint(g, u);
    const std::size_t removed[] = {p};
    const auto label = detail::component_labels(g, removed);

    std::vector<std::vector<std::size_t>> groups(g.size());  // one per component label
    for (std::size_t v : u) {
        if (v == p)
            groups.push_back({v});
        else
            groups[label[v]].push_back(v);
    }
    auto pairing = detail::pair_across(std::move(groups));

    GeodeticCertificate cert;
    cert.witness = p;
    cert.k_target = u.size() / 2;
    cert.size_adjusted = u.size() % 2 != 0;
    for (const auto& [a, b] : pairing.pairs) cert.parts.push_back({a, b});
    if (pairing.leftover) cert.parts.back().push_back(*pairing.leftover);
    return cert;
}

void attach_hull_traces(const UGraph& g, GeodeticCertificate& cert) {
    cert.hull_traces.clear();
    for (const auto& part : cert.parts) cert.hull_traces.push_back(geodetic_hull_trace(g, part));
}

bool verify_geodetic_certificate(const UGraph& g, std::span<const std::size_t> u, const GeodeticCertificate& cert,
                                 std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (cert.witness >= g.size()) return fail("witness vertex out of range");
    if (cert.parts.empty()) return fail("certificate has no parts");
    if (!cert.hull_traces.empty() && cert.hull_traces.size() != cert.parts.size())
        return fail("hull trace count does not match part count");

    std::vector<std::size_t> all, expected(u.begin(), u.end());
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        if (cert.parts[i].empty()) return fail("part " + std::to_string(i) + " is empty");
        for (std::size_t v : cert.parts[i])
            if (v >= g.size()) return fail("part " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v));
        all.insert(all.end(), cert.parts[i].begin(), cert.parts[i].end());
    }
    std::sort(all.begin(), all.end());
    std::sort(expected.begin(), expected.end());
    if (all != expected) return fail("parts do not partition U");

    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const HullTrace t = geodetic_hull_trace(g, cert.parts[i]);
        if (!std::binary_search(t.members.begin(), t.members.end(), cert.witness))
            return fail("witness is not in the hull of part " + std::to_string(i));
        if (!cert.hull_traces.empty() &&
            (cert.hull_traces[i].members != t.members || cert.hull_traces[i].entry != t.entry))
            return fail("hull trace of part " + std::to_string(i) + " does not match the recomputed closure");
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

using Bits = std::vector<std::uint64_t>;

Bits hull_bits(const Distances& d, std::span<const std::size_t> a) {
    Bits b((d.size() + 63) / 64, 0);
    for (std::size_t v : geodetic_hull(d, a)) b[v / 64] |= std::uint64_t{1} << (v % 64);
    return b;
}

bool meets(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

}  // namespace

RadonCount brute_force_radon(const UGraph& g, std::span<const std::size_t> w, std::size_t cap) {
    detail::check_vertex_ids(g, w, "brute_force_radon");
    if (w.size() > cap || w.size() >= 63)
        throw CapExceeded("brute_force_radon: |W| = " + std::to_string(w.size()) + " exceeds the cap " +
                          std::to_string(cap));
    std::vector<std::size_t> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("brute_force_radon: W has repeated vertices");
    if (!g.connected()) throw InputError("brute_force_radon: graph is disconnected");

    RadonCount out;
    if (w.size() < 2) return out;
    const Distances dist(g);
    const std::size_t m = w.size();
    std::vector<std::size_t> side_a, side_b;
    // Element 0 always sits on side A, so each unordered bipartition is seen once.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        side_a.assign(1, w[0]);
        side_b.clear();
        for (std::size_t i = 1; i < m; ++i) ((mask >> (i - 1)) & 1 ? side_b : side_a).push_back(w[i]);
        if (meets(hull_bits(dist, side_a), hull_bits(dist, side_b))) ++out.count;
    }
    out.exists = out.count > 0;
    return out;
}

bool brute_force_tverberg(const UGraph& g, std::span<const std::size_t> u, std::size_t k, std::size_t cap) {
    detail::check_vertex_ids(g, u, "brute_force_tverberg");
    if (k == 0) throw InputError("brute_force_tverberg: k must be positive");
    if (u.size() > cap || u.size() >= 30)
        throw CapExceeded("brute_force_tverberg: |U| = " + std::to_string(u.size()) + " exceeds the cap " +
                          std::to_string(cap));
    if (!g.connected()) throw InputError("brute_force_tverberg: graph is disconnected");
    if (k > u.size()) return false;
    if (k == 1) return true;

    const Distances dist(g);
    const std::size_t m = u.size();
    std::vector<Bits> memo(std::size_t{1} << m);
    std::vector<std::size_t> members;
    auto hull_of = [&](std::uint32_t mask) -> const Bits& {
        Bits& b = memo[mask];
        if (b.empty()) {
            members.clear();
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1) members.push_back(u[i]);
            b = hull_bits(dist, members);
        }
        return b;
    };

    // Restricted growth strings with exactly k blocks.
    std::vector<std::uint32_t> block(k, 0);
    Bits common;
    auto search = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
        if (m - i < k - used) return false;
        if (i == m) {
            common = hull_of(block[0]);
            for (std::size_t j = 1; j < k; ++j) {
                const Bits& h = hull_of(block[j]);
                for (std::size_t t = 0; t < common.size(); ++t) common[t] &= h[t];
            }
            return std::any_of(common.begin(), common.end(), [](std::uint64_t x) { return x != 0; });
        }
        for (std::size_t j = 0; j <= used && j < k; ++j) {
            block[j] |= std::uint32_t{1} << i;
            const bool found = self(self, i + 1, std::max(used, j + 1));
            block[j] &= ~(std::uint32_t{1} << i);
            if (found) return true;
        }
        return false;
    };
    return search(search, 0, 0);
}

}  // namespace tvk
