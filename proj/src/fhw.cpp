#include "fraccover/fhw.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace fraccover {

namespace {

using Mask = std::uint64_t;

void require_mask_capacity(const Hypergraph& h, const char* what) {
    if (h.vertex_count() > 62)
        throw Error(std::string(what) + " supports at most 62 vertices");
}

Mask to_mask(const IdSet& vertices) {
    Mask m = 0;
    for (int v : vertices) m |= Mask(1) << v;
    return m;
}

IdSet from_mask(Mask m) {
    IdSet out;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

// Adjacency of the primal graph: vertex bit-rows, self bits excluded.
std::vector<Mask> primal_adjacency(const Hypergraph& h) {
    std::vector<Mask> adj(h.vertex_count(), 0);
    for (const auto& e : h.edges()) {
        Mask em = to_mask(e.vertices);
        for (int v : e.vertices) adj[v] |= em & ~(Mask(1) << v);
    }
    return adj;
}

std::vector<Mask> components_of(Mask candidate, const std::vector<Mask>& adj) {
    std::vector<Mask> comps;
    Mask left = candidate;
    while (left) {
        int seed = __builtin_ctzll(left);
        Mask comp = Mask(1) << seed;
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj[v] & candidate;
            }
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

Mask neighborhood(Mask vertex_set, const std::vector<Mask>& adj) {
    Mask n = 0;
    Mask m = vertex_set;
    while (m) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        n |= adj[v];
    }
    return n & ~vertex_set;
}

}  // namespace

TdCheck validate_td(const Hypergraph& h, const TreeDecomposition& td) {
    const int n = static_cast<int>(td.nodes.size());
    if (n == 0) throw Error("tree decomposition has no nodes");
    int root = -1;
    std::vector<std::vector<int>> children(n);
    for (int i = 0; i < n; ++i) {
        const auto& node = td.nodes[i];
        if (node.id != i) throw Error("node ids must be 0..n-1 in order");
        if (node.parent == -1) {
            if (root != -1) throw Error("tree decomposition has several roots");
            root = i;
        } else {
            if (node.parent < 0 || node.parent >= n)
                throw Error("node " + std::to_string(i) + " has an orphan parent id");
            children[node.parent].push_back(i);
        }
        for (int v : node.bag)
            if (v < 0 || v >= h.vertex_count())
                throw Error("bag of node " + std::to_string(i) + " mentions an unknown vertex");
    }
    if (root == -1) throw Error("tree decomposition has no root");
    // Reachability from the root detects parent cycles.
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int ch : children[order[i]]) order.push_back(ch);
    if (static_cast<int>(order.size()) != n)
        throw Error("tree decomposition contains a parent cycle");

    for (const auto& e : h.edges()) {
        bool contained = false;
        for (const auto& node : td.nodes)
            if (is_subset(e.vertices, node.bag)) {
                contained = true;
                break;
            }
        if (!contained)
            return {false, "edge '" + e.name + "' is not contained in any bag"};
    }

    for (int v = 0; v < h.vertex_count(); ++v) {
        std::vector<int> holders;
        for (const auto& node : td.nodes)
            if (set_contains(node.bag, v)) holders.push_back(node.id);
        if (holders.empty())
            return {false, "vertex '" + h.vertex_name(v) + "' appears in no bag"};
        // Walk the tree restricted to the holders.
        std::set<int> holder_set(holders.begin(), holders.end());
        std::vector<int> stack{holders[0]};
        std::set<int> seen{holders[0]};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::vector<int> adjacent = children[u];
            if (td.nodes[u].parent != -1) adjacent.push_back(td.nodes[u].parent);
            for (int w : adjacent)
                if (holder_set.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() != holder_set.size())
            return {false, "vertex '" + h.vertex_name(v) + "' occurs in a disconnected set of bags"};
    }

    for (const auto& [id, witness] : td.witnesses) {
        if (id < 0 || id >= n) throw Error("witness attached to an unknown node");
        if (!is_subset(td.nodes[id].bag, covered_vertices(witness)))
            return {false, "witness of node " + std::to_string(id) + " does not cover its bag"};
    }
    return {true, ""};
}

Rat td_fractional_width(const Hypergraph& h, TreeDecomposition& td) {
    TdCheck check = validate_td(h, td);
    if (!check.ok) throw Error("invalid tree decomposition: " + check.violation);
    Rat width(0);
    td.witnesses.clear();
    for (const auto& node : td.nodes) {
        auto [value, witness] = edge_cover_number(h, node.bag);
        width = std::max(width, value);
        td.witnesses.emplace(node.id, std::move(witness));
    }
    return width;
}

namespace {

// All maximal subsets of the support's vertex union coverable with weight
// <= k using only the support's edges.
void maximal_coverable_sets(const Hypergraph& h, const IdSet& support, const Rat& k,
                            std::set<Mask>& results) {
    IdSet union_vertices;
    for (int e : support) union_vertices = set_union(union_vertices, h.edge(e).vertices);

    auto coverable = [&](const IdSet& X) {
        UnaryLP lp;
        std::map<int, int> var_of_edge;
        for (int e : support) var_of_edge[e] = lp.add_variable(h.edge(e).name);
        for (int v : X) {
            IdSet cvars;
            for (int e : set_intersection(h.edges_containing(v), support))
                cvars.push_back(var_of_edge.at(e));
            lp.add_constraint(h.vertex_name(v), std::move(cvars));
        }
        return solve(lp).optimum <= k;
    };

    std::set<Mask> visited;
    std::vector<IdSet> stack{union_vertices};
    while (!stack.empty()) {
        IdSet X = std::move(stack.back());
        stack.pop_back();
        Mask xm = to_mask(X);
        if (visited.count(xm)) continue;
        visited.insert(xm);
        if (X.empty()) continue;
        if (coverable(X)) {
            results.insert(xm);
            continue;
        }
        for (int v : X) stack.push_back(set_difference(X, {v}));
    }
}

}  // namespace

std::vector<IdSet> enumerate_candidate_bags(const Hypergraph& h, const Rat& k, int q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    require_mask_capacity(h, "candidate bag enumeration");
    if (h.edge_count() == 0) return {};

    // Supports of size exactly min(q,|E|) suffice: enlarging a support can
    // only enlarge the family of coverable sets, and the final filter keeps
    // inclusion-maximal sets only.
    const int t = std::min(q, h.edge_count());
    std::set<Mask> coverable;
    IdSet support;
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(support.size()) == t) {
            maximal_coverable_sets(h, support, k, coverable);
            return;
        }
        for (int e = next; e <= h.edge_count() - (t - static_cast<int>(support.size()));
             ++e) {
            support.push_back(e);
            self(self, e + 1);
            support.pop_back();
        }
    };
    recurse(recurse, 0);

    std::vector<Mask> maximal;
    for (Mask m : coverable) {
        bool dominated = false;
        for (Mask other : coverable)
            if (other != m && (m & other) == m) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(m);
    }
    std::vector<IdSet> out;
    out.reserve(maximal.size());
    for (Mask m : maximal) out.push_back(from_mask(m));
    std::sort(out.begin(), out.end(), [](const IdSet& a, const IdSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

namespace {

struct BlockTree {
    Mask bag = 0;
    std::vector<BlockTree> children;
};

struct SeparatorSearch {
    const std::vector<Mask>& adj;
    const std::vector<Mask>& candidates;
    std::map<std::pair<Mask, Mask>, std::optional<BlockTree>> memo;

    // Is there a rooted partial decomposition of the block (component C,
    // boundary S = N(C)) whose root bag contains S and whose bags stay
    // inside C plus S?
    std::optional<BlockTree> solve(Mask component, Mask boundary) {
        auto key = std::make_pair(component, boundary);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo.emplace(key, std::nullopt);  // cut off reentrant identical calls

        std::set<Mask> tried;
        for (Mask cand : candidates) {
            if ((boundary & ~cand) != 0) continue;  // root bag must contain S
            Mask growth_room = cand & component;
            if (growth_room == 0) continue;
            // Any nonempty subset of the candidate's part inside C may join
            // the boundary to form the root bag; larger bags first.
            Mask sub = growth_room;
            while (true) {
                Mask bag = boundary | sub;
                if (!tried.count(bag)) {
                    tried.insert(bag);
                    if (auto node = try_bag(component, bag)) {
                        memo[key] = node;
                        return node;
                    }
                }
                if (sub == 0) break;
                sub = (sub - 1) & growth_room;
                if (sub == 0) break;
            }
        }
        memo[key] = std::nullopt;
        return std::nullopt;
    }

    std::optional<BlockTree> try_bag(Mask component, Mask bag) {
        BlockTree node;
        node.bag = bag;
        for (Mask comp : components_of(component & ~bag, adj)) {
            Mask sub_boundary = neighborhood(comp, adj);
            if ((sub_boundary & ~bag) != 0)
                throw Error("separator search invariant broken: boundary escapes the bag");
            auto child = solve(comp, sub_boundary);
            if (!child) return std::nullopt;
            node.children.push_back(std::move(*child));
        }
        return node;
    }
};

void flatten(const BlockTree& t, int parent, TreeDecomposition& td) {
    int id = static_cast<int>(td.nodes.size());
    td.nodes.push_back({id, parent, from_mask(t.bag)});
    for (const BlockTree& child : t.children) flatten(child, id, td);
}

}  // namespace

std::optional<TreeDecomposition> td_from_bags(const Hypergraph& h,
                                              const std::vector<IdSet>& bags) {
    if (bags.empty()) throw std::invalid_argument("candidate bag set must be nonempty");
    require_mask_capacity(h, "tree decomposition search");
    TreeDecomposition td;
    if (h.vertex_count() == 0) {
        td.nodes.push_back({0, -1, {}});
        return td;
    }

    std::vector<Mask> candidate_masks;
    candidate_masks.reserve(bags.size());
    for (const IdSet& b : bags) candidate_masks.push_back(to_mask(b));
    std::vector<Mask> adj = primal_adjacency(h);
    SeparatorSearch search{adj, candidate_masks, {}};

    Mask all = (h.vertex_count() == 62) ? ~Mask(0) >> 2
                                        : (Mask(1) << h.vertex_count()) - 1;
    std::vector<BlockTree> roots;
    for (Mask comp : components_of(all, adj)) {
        auto solved = search.solve(comp, 0);
        if (!solved) return std::nullopt;
        roots.push_back(std::move(*solved));
    }
    // One tree per connected component; hang every later root under the
    // first (their vertex sets are disjoint, so conditions are unaffected).
    flatten(roots[0], -1, td);
    for (std::size_t i = 1; i < roots.size(); ++i) flatten(roots[i], 0, td);

    TdCheck check = validate_td(h, td);
    if (!check.ok)
        throw Error("separator search produced an invalid decomposition: " + check.violation);
    return td;
}

std::optional<TreeDecomposition> fhw_leq_k(const Hypergraph& h, const Rat& k, int q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (h.vertex_count() == 0) {
        TreeDecomposition td;
        td.nodes.push_back({0, -1, {}});
        return td;
    }
    std::vector<IdSet> bags = enumerate_candidate_bags(h, k, q);
    if (bags.empty()) return std::nullopt;
    auto td = td_from_bags(h, bags);
    if (!td) return std::nullopt;
    Rat width = td_fractional_width(h, *td);
    if (width > k)
        throw Error("candidate-bag decomposition exceeds the width budget; "
                    "enumeration is broken");
    return td;
}

std::optional<TreeDecomposition> td_bruteforce(
    const Hypergraph& h, const std::function<bool(const IdSet&)>& bag_ok) {
    if (h.vertex_count() > 10)
        throw std::invalid_argument("brute-force oracle is capped at 10 vertices");
    TreeDecomposition td;
    if (h.vertex_count() == 0) {
        td.nodes.push_back({0, -1, {}});
        return td;
    }

    const int n = h.vertex_count();
    std::vector<Mask> adj = primal_adjacency(h);
    const Mask full = (Mask(1) << n) - 1;

    // Vertices reachable from v through eliminated vertices, plus direct
    // neighbors; this is v's bag when eliminated right after `eliminated`.
    auto bag_after = [&](int v, Mask eliminated) {
        Mask seen = Mask(1) << v;
        Mask frontier = seen;
        Mask result = 0;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int u = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj[u];
            }
            next &= ~seen;
            result |= next & ~eliminated;
            next &= eliminated;
            seen |= next;
            frontier = next;
        }
        return result | (Mask(1) << v);
    };

    // feasible[S]: the vertices of S can be eliminated (in some order) with
    // every elimination bag accepted; choice[S] remembers the vertex
    // eliminated last.
    std::vector<char> feasible(std::size_t(1) << n, 0);
    std::vector<signed char> choice(std::size_t(1) << n, -1);
    std::map<Mask, bool> bag_cache;
    auto accepted = [&](Mask bag) {
        auto it = bag_cache.find(bag);
        if (it != bag_cache.end()) return it->second;
        bool ok = bag_ok(from_mask(bag));
        bag_cache.emplace(bag, ok);
        return ok;
    };

    feasible[0] = 1;
    for (Mask s = 1; s <= full; ++s) {
        Mask m = s;
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            Mask rest = s & ~(Mask(1) << v);
            if (!feasible[rest]) continue;
            if (accepted(bag_after(v, rest))) {
                feasible[s] = 1;
                choice[s] = static_cast<signed char>(v);
                break;
            }
        }
    }
    if (!feasible[full]) return std::nullopt;

    std::vector<int> order(n);
    Mask s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(Mask(1) << order[i]);
    }

    // Clique-tree construction along the elimination order: each bag hangs
    // under the bag of its earliest-eliminated later member.
    std::vector<Mask> bag_of(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    Mask eliminated = 0;
    for (int i = 0; i < n; ++i) {
        bag_of[i] = bag_after(order[i], eliminated);
        eliminated |= Mask(1) << order[i];
    }
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n - 1; ++i) {
        Mask rest = bag_of[i] & ~(Mask(1) << order[i]);
        if (rest == 0) {
            parent[i] = n - 1;
            continue;
        }
        int best = -1;
        Mask m = rest;
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            if (best < 0 || position[u] < position[best]) best = u;
        }
        parent[i] = position[best];
    }

    // Contract bags that are subsets of a tree neighbor.
    std::vector<char> alive(n, 1);
    std::vector<int> par(parent);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || par[i] < 0) continue;
            int p = par[i];
            if ((bag_of[i] | bag_of[p]) == bag_of[p]) {
                for (int j = 0; j < n; ++j)
                    if (alive[j] && par[j] == i) par[j] = p;
                alive[i] = 0;
                changed = true;
            } else if ((bag_of[i] | bag_of[p]) == bag_of[i]) {
                // Parent inside child: child takes the parent's place.
                for (int j = 0; j < n; ++j)
                    if (alive[j] && j != i && par[j] == p) par[j] = i;
                par[i] = par[p];
                alive[p] = 0;
                changed = true;
            }
        }
    }

    std::vector<int> new_id(n, -1);
    for (int i = 0; i < n; ++i)
        if (alive[i]) {
            new_id[i] = static_cast<int>(td.nodes.size());
            td.nodes.push_back({new_id[i], -2, from_mask(bag_of[i])});
        }
    for (int i = 0; i < n; ++i)
        if (alive[i])
            td.nodes[new_id[i]].parent = (par[i] < 0) ? -1 : new_id[par[i]];

    TdCheck check = validate_td(h, td);
    if (!check.ok)
        throw Error("elimination oracle produced an invalid decomposition: " +
                    check.violation);
    return td;
}

std::optional<TreeDecomposition> fhw_bruteforce(const Hypergraph& h, const Rat& k) {
    auto td = td_bruteforce(h, [&](const IdSet& bag) {
        return edge_cover_number(h, bag).first <= k;
    });
    if (td) {
        Rat width = td_fractional_width(h, *td);
        if (width > k) throw Error("oracle decomposition exceeds the width budget");
    }
    return td;
}

}  // namespace fraccover
