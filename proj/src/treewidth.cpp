#include "occult/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <unordered_map>

namespace occult {

int TreeDecomposition::width() const {
    int w = 0;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::variant<int, Violation> verify_decomposition(const Graph& g,
                                                  const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return Violation{"tree-structure", "decomposition has no bags"};
    for (const auto& bag : td.bags)
        for (VertexId v : bag)
            if (!g.has_vertex(v))
                return Violation{"bag-content", "unknown vertex " + std::to_string(v)};
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        return Violation{"tree-structure", "tree on " + std::to_string(nb) + " bags needs " +
                                               std::to_string(nb - 1) + " edges"};
    std::vector<std::vector<int>> tadj(static_cast<std::size_t>(nb));
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
            return Violation{"tree-structure", "bad tree edge"};
        tadj[static_cast<std::size_t>(a)].push_back(b);
        tadj[static_cast<std::size_t>(b)].push_back(a);
    }
    {
        std::vector<bool> seen(static_cast<std::size_t>(nb), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int count = 0;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            ++count;
            for (int c : tadj[static_cast<std::size_t>(b)])
                if (!seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = true;
                    q.push(c);
                }
        }
        if (count != nb) return Violation{"tree-structure", "tree is disconnected"};
    }
    for (VertexId v : g.vertices()) {
        bool found = false;
        for (const auto& bag : td.bags)
            if (std::find(bag.begin(), bag.end(), v) != bag.end()) {
                found = true;
                break;
            }
        if (!found)
            return Violation{"vertex-coverage", "vertex " + std::to_string(v) + " in no bag"};
    }
    for (const Edge& e : g.edge_list()) {
        bool found = false;
        for (const auto& bag : td.bags) {
            bool has_u = std::find(bag.begin(), bag.end(), e.first) != bag.end();
            bool has_v = std::find(bag.begin(), bag.end(), e.second) != bag.end();
            if (has_u && has_v) {
                found = true;
                break;
            }
        }
        if (!found)
            return Violation{"edge-cover", "edge (" + std::to_string(e.first) + "," +
                                               std::to_string(e.second) + ") uncovered"};
    }
    // Connectedness: the bags containing v must induce a subtree.
    for (VertexId v : g.vertices()) {
        std::vector<int> holding;
        for (int b = 0; b < nb; ++b)
            if (std::find(td.bags[static_cast<std::size_t>(b)].begin(),
                          td.bags[static_cast<std::size_t>(b)].end(),
                          v) != td.bags[static_cast<std::size_t>(b)].end())
                holding.push_back(b);
        std::set<int> hset(holding.begin(), holding.end());
        std::set<int> seen;
        std::queue<int> q;
        q.push(holding.front());
        seen.insert(holding.front());
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int c : tadj[static_cast<std::size_t>(b)])
                if (hset.count(c) && !seen.count(c)) {
                    seen.insert(c);
                    q.push(c);
                }
        }
        if (seen.size() != hset.size())
            return Violation{"connectedness",
                             "bags of vertex " + std::to_string(v) + " are disconnected"};
    }
    return td.width();
}

namespace {

// --- Dense local view -------------------------------------------------------

struct Dense {
    std::vector<VertexId> ids;             // index -> id
    std::vector<std::set<int>> adj;        // by index
    std::vector<bool> alive;

    int n_alive() const {
        int c = 0;
        for (bool a : alive) c += a;
        return c;
    }
};

Dense make_dense(const Graph& g, const std::vector<VertexId>& comp) {
    Dense d;
    d.ids = comp;
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = static_cast<int>(i);
    d.adj.resize(comp.size());
    d.alive.assign(comp.size(), true);
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (VertexId w : g.neighbors(comp[i])) {
            auto it = index.find(w);
            if (it != index.end()) d.adj[i].insert(it->second);
        }
    return d;
}

bool is_clique(const Dense& d, const std::set<int>& xs) {
    for (int a : xs)
        for (int b : xs)
            if (a < b && !d.adj[static_cast<std::size_t>(a)].count(b)) return false;
    return true;
}

struct ReductionStep {
    enum class Kind { Simplicial, Series } kind;
    int v;
    std::vector<int> nbrs;  // at removal time
};

// Applies simplicial elimination and series contraction to a fixpoint.
// Series contraction is safe once a cycle is known to exist, which holds
// whenever no simplicial vertex remains (min degree >= 2 then).
void reduce(Dense& d, std::vector<ReductionStep>& steps, int& low) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t v = 0; v < d.adj.size(); ++v) {
            if (!d.alive[v]) continue;
            if (is_clique(d, d.adj[v])) {
                low = std::max(low, static_cast<int>(d.adj[v].size()));
                ReductionStep st{ReductionStep::Kind::Simplicial, static_cast<int>(v), {}};
                st.nbrs.assign(d.adj[v].begin(), d.adj[v].end());
                for (int w : st.nbrs) d.adj[static_cast<std::size_t>(w)].erase(static_cast<int>(v));
                d.adj[v].clear();
                d.alive[v] = false;
                steps.push_back(std::move(st));
                progress = true;
            }
        }
        if (progress) continue;
        // No simplicial vertex: min degree >= 2, so the graph has a cycle.
        for (std::size_t v = 0; v < d.adj.size(); ++v) {
            if (!d.alive[v] || d.adj[v].size() != 2) continue;
            auto it = d.adj[v].begin();
            int u = *it++;
            int w = *it;
            low = std::max(low, 2);
            ReductionStep st{ReductionStep::Kind::Series, static_cast<int>(v), {u, w}};
            d.adj[static_cast<std::size_t>(u)].erase(static_cast<int>(v));
            d.adj[static_cast<std::size_t>(w)].erase(static_cast<int>(v));
            d.adj[static_cast<std::size_t>(u)].insert(w);
            d.adj[static_cast<std::size_t>(w)].insert(u);
            d.adj[v].clear();
            d.alive[v] = false;
            steps.push_back(std::move(st));
            progress = true;
            break;
        }
    }
}

int contraction_degeneracy(Dense d) {
    int lb = 0;
    while (true) {
        int v = -1, best_deg = 0;
        for (std::size_t i = 0; i < d.adj.size(); ++i) {
            if (!d.alive[i]) continue;
            int deg = static_cast<int>(d.adj[i].size());
            if (v < 0 || deg < best_deg) {
                v = static_cast<int>(i);
                best_deg = deg;
            }
        }
        if (v < 0) break;
        lb = std::max(lb, best_deg);
        if (best_deg == 0) {
            d.alive[static_cast<std::size_t>(v)] = false;
            continue;
        }
        // Contract into the neighbor sharing the fewest common neighbors.
        int u = -1, best_common = 0;
        for (int w : d.adj[static_cast<std::size_t>(v)]) {
            int common = 0;
            for (int x : d.adj[static_cast<std::size_t>(v)])
                if (x != w && d.adj[static_cast<std::size_t>(w)].count(x)) ++common;
            if (u < 0 || common < best_common) {
                u = w;
                best_common = common;
            }
        }
        for (int w : d.adj[static_cast<std::size_t>(v)]) {
            d.adj[static_cast<std::size_t>(w)].erase(v);
            if (w != u) {
                d.adj[static_cast<std::size_t>(u)].insert(w);
                d.adj[static_cast<std::size_t>(w)].insert(u);
            }
        }
        d.adj[static_cast<std::size_t>(v)].clear();
        d.alive[static_cast<std::size_t>(v)] = false;
    }
    return lb;
}

// --- Elimination-order search over a <= 64 vertex core ------------------------

struct Core {
    int n = 0;
    std::vector<std::uint64_t> adj;  // single-word bitsets
    std::vector<int> index_to_dense;
};

int popcount(std::uint64_t x) { return std::popcount(x); }

std::uint64_t bits_above(int a) {
    return a >= 63 ? 0ull : ~((1ull << (a + 1)) - 1);
}

// Width of the greedy minimum-fill-in elimination order, plus the order.
int min_fill_order(const Core& core, std::vector<int>& order) {
    std::vector<std::uint64_t> adj = core.adj;
    std::uint64_t alive = core.n == 64 ? ~0ull : ((1ull << core.n) - 1);
    order.clear();
    int width = 0;
    while (alive) {
        int best = -1, best_fill = 0, best_deg = 0;
        for (int v = 0; v < core.n; ++v) {
            if (!(alive >> v & 1)) continue;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)] & alive;
            int deg = popcount(nb);
            int fill = 0;
            for (int a = 0; a < core.n; ++a)
                if (nb >> a & 1)
                    fill += popcount(nb & ~adj[static_cast<std::size_t>(a)] & bits_above(a));
            if (best < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        std::uint64_t nb = adj[static_cast<std::size_t>(best)] & alive;
        width = std::max(width, popcount(nb));
        for (int a = 0; a < core.n; ++a)
            if (nb >> a & 1) adj[static_cast<std::size_t>(a)] |= nb & ~(1ull << a);
        alive &= ~(1ull << best);
        order.push_back(best);
    }
    return width;
}

struct EliminationSearch {
    const Core& core;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best_width;
    std::vector<int> best_order;
    std::vector<int> cur_order;
    std::unordered_map<std::uint64_t, int> memo;  // eliminated-set -> best cur_max seen

    EliminationSearch(const Core& c, std::uint64_t limit, int ub,
                      const std::vector<int>& ub_order)
        : core(c), node_limit(limit), best_width(ub), best_order(ub_order) {}

    void run() {
        std::vector<std::uint64_t> adj = core.adj;
        dfs(0, 0, adj);
    }

    void dfs(std::uint64_t eliminated, int cur_max, std::vector<std::uint64_t>& adj) {
        if (exhausted) return;
        if (cur_max >= best_width) return;  // cannot strictly improve
        auto it = memo.find(eliminated);
        if (it != memo.end() && it->second <= cur_max) return;
        memo[eliminated] = cur_max;
        if (++nodes > node_limit) {
            exhausted = true;
            return;
        }
        std::uint64_t all = core.n == 64 ? ~0ull : ((1ull << core.n) - 1);
        std::uint64_t alive = all & ~eliminated;
        if (!alive) {
            best_width = cur_max;
            best_order = cur_order;
            return;
        }
        // Simplicial vertices can be eliminated first without harm.
        for (int v = 0; v < core.n; ++v) {
            if (!(alive >> v & 1)) continue;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)] & alive;
            bool simplicial = true;
            for (int a = 0; a < core.n && simplicial; ++a)
                if (nb >> a & 1)
                    if ((nb & ~adj[static_cast<std::size_t>(a)] & ~(1ull << a)) != 0)
                        simplicial = false;
            if (simplicial) {
                int deg = popcount(nb);
                if (std::max(cur_max, deg) >= best_width) return;
                cur_order.push_back(v);
                dfs(eliminated | (1ull << v), std::max(cur_max, deg), adj);
                cur_order.pop_back();
                return;
            }
        }
        for (int v = 0; v < core.n; ++v) {
            if (exhausted) return;
            if (!(alive >> v & 1)) continue;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)] & alive;
            int deg = popcount(nb);
            if (std::max(cur_max, deg) >= best_width) continue;
            std::vector<std::uint64_t> next = adj;
            for (int a = 0; a < core.n; ++a)
                if (nb >> a & 1) next[static_cast<std::size_t>(a)] |= nb & ~(1ull << a);
            cur_order.push_back(v);
            dfs(eliminated | (1ull << v), std::max(cur_max, deg), next);
            cur_order.pop_back();
        }
    }
};

// Decomposition of the core from an elimination order (bags over dense ids).
void decomposition_from_order(const Core& core, const std::vector<int>& order,
                              std::vector<std::vector<int>>& bags,
                              std::vector<std::pair<int, int>>& edges) {
    std::vector<std::uint64_t> adj = core.adj;
    std::uint64_t alive = core.n == 64 ? ~0ull : ((1ull << core.n) - 1);
    std::vector<std::uint64_t> bag_mask(order.size());
    std::vector<int> position(static_cast<std::size_t>(core.n), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        std::uint64_t nb = adj[static_cast<std::size_t>(v)] & alive;
        bag_mask[i] = nb | (1ull << v);
        for (int a = 0; a < core.n; ++a)
            if (nb >> a & 1) adj[static_cast<std::size_t>(a)] |= nb & ~(1ull << a);
        alive &= ~(1ull << v);
    }
    int base = static_cast<int>(bags.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<int> bag;
        for (int a = 0; a < core.n; ++a)
            if (bag_mask[i] >> a & 1) bag.push_back(core.index_to_dense[static_cast<std::size_t>(a)]);
        bags.push_back(std::move(bag));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        std::uint64_t rest = bag_mask[i] & ~(1ull << v);
        if (!rest) {
            if (i + 1 < order.size())
                edges.emplace_back(base + static_cast<int>(i), base + static_cast<int>(i) + 1);
            continue;
        }
        int first = -1;
        for (int a = 0; a < core.n; ++a)
            if (rest >> a & 1)
                if (first < 0 ||
                    position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(first)])
                    first = a;
        edges.emplace_back(base + static_cast<int>(i),
                           base + position[static_cast<std::size_t>(first)]);
    }
}

struct ComponentResult {
    bool exact = true;
    int low = 0;       // proven lower bound
    int width = 0;     // width of the emitted decomposition (upper bound)
    std::vector<std::vector<VertexId>> bags;
    std::vector<std::pair<int, int>> tree_edges;
    std::uint64_t nodes = 0;
};

ComponentResult solve_component(const Graph& g, const std::vector<VertexId>& comp,
                                std::uint64_t node_limit) {
    ComponentResult res;
    Dense d = make_dense(g, comp);
    std::vector<ReductionStep> steps;
    int low = 0;
    reduce(d, steps, low);

    std::vector<std::vector<int>> dense_bags;  // bags over dense indices
    std::vector<std::pair<int, int>> dense_edges;

    int core_width = 0;
    if (d.n_alive() > 0) {
        // The core survived degree-<=2 reductions, so it has a K_4 subdivision.
        low = std::max(low, 3);
        if (d.n_alive() > 64)
            throw PreconditionError("instance-size",
                                    "reduced core exceeds 64 vertices (" +
                                        std::to_string(d.n_alive()) + ")");
        Core core;
        for (std::size_t i = 0; i < d.adj.size(); ++i)
            if (d.alive[i]) core.index_to_dense.push_back(static_cast<int>(i));
        core.n = static_cast<int>(core.index_to_dense.size());
        std::vector<int> dense_to_core(d.adj.size(), -1);
        for (int i = 0; i < core.n; ++i)
            dense_to_core[static_cast<std::size_t>(core.index_to_dense[static_cast<std::size_t>(i)])] = i;
        core.adj.assign(static_cast<std::size_t>(core.n), 0);
        for (int i = 0; i < core.n; ++i)
            for (int w : d.adj[static_cast<std::size_t>(core.index_to_dense[static_cast<std::size_t>(i)])])
                core.adj[static_cast<std::size_t>(i)] |=
                    1ull << dense_to_core[static_cast<std::size_t>(w)];

        low = std::max(low, contraction_degeneracy(d));

        std::vector<int> ub_order;
        int ub = min_fill_order(core, ub_order);
        std::vector<int> best_order = ub_order;
        if (ub > low) {
            EliminationSearch search(core, node_limit, ub, ub_order);
            search.run();
            res.nodes = search.nodes;
            if (search.exhausted) {
                res.exact = false;
                best_order = search.best_order;
                ub = search.best_width;
            } else {
                ub = search.best_width;
                best_order = search.best_order;
                low = std::max(low, ub);  // search proved optimality
            }
        }
        core_width = ub;
        decomposition_from_order(core, best_order, dense_bags, dense_edges);
    }

    // Undo reductions, attaching one bag per removed vertex.
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        std::vector<int> bag = it->nbrs;
        bag.push_back(it->v);
        std::sort(bag.begin(), bag.end());
        int attach = -1;
        for (std::size_t b = 0; b < dense_bags.size() && attach < 0; ++b) {
            bool all = true;
            for (int w : it->nbrs)
                if (std::find(dense_bags[b].begin(), dense_bags[b].end(), w) ==
                    dense_bags[b].end()) {
                    all = false;
                    break;
                }
            if (all) attach = static_cast<int>(b);
        }
        dense_bags.push_back(bag);
        if (attach >= 0)
            dense_edges.emplace_back(static_cast<int>(dense_bags.size()) - 1, attach);
        else if (dense_bags.size() >= 2)
            dense_edges.emplace_back(static_cast<int>(dense_bags.size()) - 1, 0);
    }

    res.low = low;
    res.width = std::max(core_width, 0);
    for (const auto& bag : dense_bags) {
        std::vector<VertexId> named;
        for (int i : bag) named.push_back(d.ids[static_cast<std::size_t>(i)]);
        std::sort(named.begin(), named.end());
        res.width = std::max(res.width, static_cast<int>(named.size()) - 1);
        res.bags.push_back(std::move(named));
    }
    res.tree_edges = dense_edges;
    if (res.bags.empty()) {
        res.bags.push_back({});
    }
    return res;
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, std::uint64_t node_limit) {
    TreewidthResult out;
    if (g.vertex_count() == 0) {
        out.width = 0;
        out.lower_bound = 0;
        out.upper_bound = 0;
        out.decomposition.bags.push_back({});
        return out;
    }
    bool all_exact = true;
    int low = 0, high = 0;
    for (const auto& comp : connected_components(g)) {
        ComponentResult cr = solve_component(g, comp, node_limit);
        all_exact = all_exact && cr.exact;
        low = std::max(low, cr.exact ? cr.width : cr.low);
        high = std::max(high, cr.width);
        out.nodes_used += cr.nodes;
        int base = static_cast<int>(out.decomposition.bags.size());
        for (auto& bag : cr.bags) out.decomposition.bags.push_back(std::move(bag));
        for (auto [a, b] : cr.tree_edges)
            out.decomposition.tree_edges.emplace_back(base + a, base + b);
        if (base > 0) out.decomposition.tree_edges.emplace_back(base - 1, base);
    }
    out.lower_bound = low;
    out.upper_bound = high;
    if (all_exact) out.width = high;
    return out;
}

int treewidth_lower_bound(const Graph& g) {
    int lb = 0;
    for (const auto& comp : connected_components(g)) {
        Dense d = make_dense(g, comp);
        lb = std::max(lb, contraction_degeneracy(d));
        std::vector<ReductionStep> steps;
        int low = 0;
        reduce(d, steps, low);
        lb = std::max(lb, low);
        if (d.n_alive() > 0) lb = std::max(lb, 3);  // K_4 subdivision survives
    }
    return lb;
}

}  // namespace occult
