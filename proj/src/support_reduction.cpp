#include "fraccover/support_reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fraccover {

namespace {

IdSet intersection_of(const Hypergraph& h, const Block& block) {
    IdSet inter = h.edge(block.at(0)).vertices;
    for (std::size_t i = 1; i < block.size() && !inter.empty(); ++i)
        inter = set_intersection(inter, h.edge(block[i]).vertices);
    return inter;
}

std::string block_label(const Hypergraph& h, const Block& block) {
    std::ostringstream out;
    out << "S(";
    for (std::size_t i = 0; i < block.size(); ++i)
        out << (i ? "," : "") << h.edge(block[i]).name;
    out << ")";
    return out.str();
}

long long pow2_checked(long long b) {
    if (b < 0 || b > 62) throw Error("exceptional set too large for n(S,U): |U|=" +
                                     std::to_string(b));
    return 1LL << b;
}

}  // namespace

WellFormedPair::WellFormedPair(const Hypergraph& host, EdgeWeightFunction gamma, int c,
                               std::vector<Block> blocks, IdSet exceptional)
    : host_(&host),
      gamma_(std::move(gamma)),
      c_(c),
      blocks_(std::move(blocks)),
      exceptional_(std::move(exceptional)) {
    if (c_ < 1) throw std::invalid_argument("block arity c must be positive");
    if (!(gamma_.host() == host))
        throw Error("weight function does not live on the pair's hypergraph");
    covered_ = covered_vertices(gamma_);

    if (!is_subset(exceptional_, covered_))
        throw Error("well-formed pair violated: U is not contained in B(gamma)");
    std::vector<Block> seen;
    for (const Block& b : blocks_) {
        if (b.empty()) throw Error("well-formed pair violated: empty block");
        if (static_cast<int>(b.size()) > c_)
            throw Error("well-formed pair violated: block larger than c");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= host.edge_count())
                throw Error("well-formed pair violated: unknown edge in block");
            if (i > 0 && b[i] <= b[i - 1])
                throw Error("blocks must be strictly increasing edge-id sets");
        }
        if (std::find(seen.begin(), seen.end(), b) != seen.end())
            throw Error("well-formed pair violated: duplicate block");
        seen.push_back(b);
    }
    IdSet accounted = block_intersection_union();
    if (!is_subset(set_difference(covered_, exceptional_), accounted))
        throw Error("well-formed pair violated: covered vertex outside U and all "
                    "block intersections");
}

long long WellFormedPair::size() const {
    long long total = pow2_checked(static_cast<long long>(exceptional_.size()));
    for (const Block& b : blocks_) total += static_cast<long long>(b.size());
    return total;
}

IdSet WellFormedPair::block_union() const {
    IdSet u;
    for (const Block& b : blocks_) u = set_union(u, b);
    return u;
}

IdSet WellFormedPair::block_intersection_union() const {
    IdSet u;
    for (const Block& b : blocks_) u = set_union(u, intersection_of(*host_, b));
    return u;
}

EdgeWeightFunction compress_to_target(const Hypergraph& h, const EdgeWeightFunction& gamma,
                                      const IdSet& target) {
    if (!is_subset(target, covered_vertices(gamma)))
        throw Error("compression target is not contained in B(gamma)");
    // Classes keyed by trace on the target; the first edge of each class is
    // its representative and receives the class weight, capped at 1.
    std::map<IdSet, std::pair<int, Rat>> classes;
    std::vector<IdSet> class_order;
    for (int e = 0; e < h.edge_count(); ++e) {
        IdSet trace = set_intersection(h.edge(e).vertices, target);
        if (trace.empty()) continue;
        auto [it, inserted] = classes.emplace(trace, std::make_pair(e, Rat(0)));
        it->second.second += gamma[e];
        if (inserted) class_order.push_back(trace);
    }
    EdgeWeightFunction nu(h);
    for (const IdSet& trace : class_order) {
        const auto& [rep, total] = classes.at(trace);
        nu.set(rep, total > 1 ? Rat(1) : total);
    }
    return nu;
}

WellFormedPair initial_pair(const Hypergraph& h, const EdgeWeightFunction& gamma, int c,
                            const Rat& k) {
    if (gamma.weight() > k)
        throw std::invalid_argument("weight(gamma) exceeds the budget k");
    Rat threshold = Rat(1) / (Rat(2) * Rat(c));
    std::vector<Block> blocks;
    IdSet heavy_union;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (gamma[e] >= threshold) {
            blocks.push_back({e});
            heavy_union = set_union(heavy_union, h.edge(e).vertices);
        }
    }
    IdSet u0 = set_difference(covered_vertices(gamma), heavy_union);
    return WellFormedPair(h, gamma, c, std::move(blocks), std::move(u0));
}

WellFormedPair fold(const WellFormedPair& p, const Block& star) {
    auto it = std::find(p.blocks().begin(), p.blocks().end(), star);
    if (it == p.blocks().end()) throw Error("fold: block is not part of the pair");
    if (static_cast<int>(star.size()) != p.arity())
        throw Error("fold: block size must be exactly c");
    std::vector<Block> blocks;
    blocks.reserve(p.blocks().size() - 1);
    for (const Block& b : p.blocks())
        if (b != star) blocks.push_back(b);
    IdSet u = set_union(p.exceptional(),
                        set_intersection(intersection_of(p.host(), star), p.covered()));
    return WellFormedPair(p.host(), p.gamma(), p.arity(), std::move(blocks), std::move(u));
}

WorkingPartition working_partition(const WellFormedPair& p) {
    IdSet in_blocks = p.block_union();
    std::map<IdSet, WorkingClass> classes;
    std::vector<IdSet> order;
    for (int e = 0; e < p.host().edge_count(); ++e) {
        if (set_contains(in_blocks, e)) continue;
        IdSet trace = set_intersection(p.host().edge(e).vertices, p.exceptional());
        if (trace.empty()) continue;
        auto [it, inserted] = classes.emplace(trace, WorkingClass{trace, {}, e});
        it->second.witnesses.push_back(e);
        if (inserted) order.push_back(trace);
    }
    WorkingPartition part;
    for (const IdSet& trace : order) part.classes.push_back(classes.at(trace));
    return part;
}

IdSet WorkingPartition::representatives() const {
    IdSet out;
    for (const auto& cls : classes) out.push_back(cls.representative);
    return sorted_unique(out);
}

UnaryLP build_lp(const WellFormedPair& p) {
    IdSet vars = set_union(p.block_union(), working_partition(p).representatives());
    UnaryLP lp;
    std::map<int, int> var_of_edge;
    for (int e : vars) var_of_edge[e] = lp.add_variable(p.host().edge(e).name);

    for (const Block& b : p.blocks()) {
        IdSet cvars;
        for (int e : b) cvars.push_back(var_of_edge.at(e));
        lp.add_constraint(block_label(p.host(), b), sorted_unique(std::move(cvars)));
    }
    for (int u : p.exceptional()) {
        IdSet cvars;
        for (int e : set_intersection(p.host().edges_containing(u), vars))
            cvars.push_back(var_of_edge.at(e));
        if (cvars.empty())
            throw InconsistencyError("vertex '" + p.host().vertex_name(u) +
                                     "' of U has no incident LP variable");
        lp.add_constraint("u(" + p.host().vertex_name(u) + ")", std::move(cvars));
    }
    return lp;
}

std::optional<EdgeWeightFunction> certify_perfect(const WellFormedPair& p, const Rat& k) {
    UnaryLP lp = build_lp(p);
    LPSolution sol = solve(lp);

    // Weight-shift bound: the optimum never exceeds weight(gamma) plus the
    // total deficit of the under-weight blocks.
    Rat bound = p.gamma().weight();
    for (const Block& b : p.blocks()) {
        Rat w = p.gamma().sum_over(b);
        if (w < 1) bound += Rat(1) - w;
    }
    if (sol.optimum > bound)
        throw Error("LP(S,U) optimum exceeds the weight-shift bound; solver or pair "
                    "construction is broken");

    if (sol.optimum > k) return std::nullopt;

    EdgeWeightFunction nu(p.host());
    for (std::size_t j = 0; j < lp.variables.size(); ++j)
        nu.set(lp.variables[j], sol.primal[j]);

    // Re-check the certificate independently of the LP bookkeeping.
    for (int u : p.exceptional())
        if (nu.incident_weight(u) < 1)
            throw Error("certificate fails to cover an exceptional vertex");
    for (const Block& b : p.blocks())
        if (nu.sum_over(b) < 1)
            throw Error("certificate fails to satisfy a block constraint");
    if (static_cast<long long>(nu.support().size()) > p.size())
        throw Error("certificate support exceeds n(S,U)");
    return nu;
}

ExtensionChoice choose_extension(const WellFormedPair& p, const Rat& k) {
    if (p.gamma().weight() > k)
        throw std::invalid_argument("weight(gamma) exceeds the budget k");
    if (p.blocks().empty())
        throw Error("extension requires a nonempty block family");
    for (const Block& b : p.blocks())
        if (static_cast<int>(b.size()) >= p.arity())
            throw Error("extension requires every block to have size at most c-1");

    const Block* star = nullptr;
    Rat best_deficit(0);
    for (const Block& b : p.blocks()) {
        Rat deficit = Rat(1) - p.gamma().sum_over(b);
        if (deficit > best_deficit) {
            best_deficit = deficit;
            star = &b;
        }
    }
    if (!star)
        throw Error("no block with positive deficit although the pair is not perfect");

    Rat eps = best_deficit;
    Rat threshold = eps / (Rat(2) * Rat(p.arity()));
    IdSet extending, extending_union;
    for (int e = 0; e < p.host().edge_count(); ++e) {
        if (set_contains(*star, e)) continue;
        if (p.gamma()[e] >= threshold) {
            extending.push_back(e);
            extending_union = set_union(extending_union, p.host().edge(e).vertices);
        }
    }
    IdSet light = set_difference(
        set_intersection(intersection_of(p.host(), *star), p.covered()), extending_union);
    return {*star, std::move(eps), std::move(extending), std::move(light)};
}

WellFormedPair extend(const WellFormedPair& p, const ExtensionChoice& choice) {
    auto it = std::find(p.blocks().begin(), p.blocks().end(), choice.extended_block);
    if (it == p.blocks().end()) throw Error("extend: block is not part of the pair");

    std::vector<Block> blocks;
    for (const Block& b : p.blocks())
        if (b != choice.extended_block) blocks.push_back(b);
    for (int e : choice.extending_set) {
        Block grown = set_union(choice.extended_block, {e});
        if (std::find(blocks.begin(), blocks.end(), grown) == blocks.end())
            blocks.push_back(std::move(grown));
    }
    IdSet u = set_union(p.exceptional(), choice.light_vertices);
    // The constructor re-checks all well-formedness conditions.
    return WellFormedPair(p.host(), p.gamma(), p.arity(), std::move(blocks), std::move(u));
}

BareBonesPair bbp_project(const WellFormedPair& p) {
    BareBonesPair bbp;
    for (const Block& b : p.blocks()) bbp.block_sizes.push_back(static_cast<int>(b.size()));
    std::sort(bbp.block_sizes.begin(), bbp.block_sizes.end());
    bbp.exceptional_count = static_cast<long long>(p.exceptional().size());
    if (bbp.size() != p.size())
        throw Error("bare-bones projection size disagrees with n(S,U)");
    return bbp;
}

long long BareBonesPair::size() const {
    long long total = pow2_checked(exceptional_count);
    for (int s : block_sizes) total += s;
    return total;
}

namespace {

TraceStep make_step(TraceStep::Kind kind, const WellFormedPair& p) {
    BareBonesPair bbp = bbp_project(p);
    TraceStep step;
    step.kind = kind;
    step.n = p.size();
    step.block_sizes = std::move(bbp.block_sizes);
    step.exceptional_count = bbp.exceptional_count;
    return step;
}

}  // namespace

ReduceResult reduce_support(const Hypergraph& h, const EdgeWeightFunction& gamma, int c,
                            const Rat& k, long long cap) {
    if (gamma.weight() > k)
        throw std::invalid_argument("weight(gamma) exceeds the budget k");

    WellFormedPair pair = initial_pair(h, gamma, c, k);
    TransformationTrace trace;
    trace.c = c;
    trace.steps.push_back(make_step(TraceStep::Kind::Init, pair));

    for (long long iter = 0; iter <= cap; ++iter) {
        if (auto nu = certify_perfect(pair, k)) {
            trace.steps.push_back(make_step(TraceStep::Kind::Certify, pair));
            // Condition (3) makes this residual empty for every well-formed
            // pair; a nonempty residual means the state machine is broken.
            IdSet residual = set_difference(
                pair.covered(),
                set_union(pair.exceptional(), pair.block_intersection_union()));
            if (!residual.empty())
                throw Error("perfect pair leaves covered vertices unaccounted for");
            return {std::move(*nu), std::move(trace), pair.size()};
        }

        const Block* full = nullptr;
        for (const Block& b : pair.blocks())
            if (static_cast<int>(b.size()) == c) {
                full = &b;
                break;
            }
        if (full) {
            pair = fold(pair, *full);
            trace.steps.push_back(make_step(TraceStep::Kind::Fold, pair));
        } else {
            ExtensionChoice choice = choose_extension(pair, k);
            pair = extend(pair, choice);
            TraceStep step = make_step(TraceStep::Kind::Extend, pair);
            step.epsilon = choice.epsilon;
            step.extending_set_size = static_cast<int>(choice.extending_set.size());
            step.light_count = static_cast<int>(choice.light_vertices.size());
            trace.steps.push_back(std::move(step));
        }
    }
    throw CapExceededError("support reduction exceeded the iteration cap of " +
                               std::to_string(cap),
                           std::move(trace));
}

namespace {

// Checks A' = A with one occurrence of `removed` taken out and `added_count`
// occurrences of `added` (any count >= 0) put in; nothing else may change.
bool multiset_step_ok(const std::vector<int>& before, const std::vector<int>& after,
                      int removed, int added, long long& added_count) {
    std::map<int, long long> expected;
    for (int x : before) expected[x]++;
    if (expected[removed] <= 0) return false;
    expected[removed]--;
    std::map<int, long long> actual;
    for (int x : after) actual[x]++;
    added_count = actual[added] - expected[added];
    if (added_count < 0) return false;
    expected[added] += added_count;
    for (const auto& [value, count] : expected)
        if (count != actual[value]) return false;
    for (const auto& [value, count] : actual)
        if (count != expected[value]) return false;
    return true;
}

}  // namespace

bool validate_trace(const TransformationTrace& trace) {
    if (trace.c < 1 || trace.steps.empty()) return false;
    if (trace.steps.front().kind != TraceStep::Kind::Init) return false;
    if (trace.steps.back().kind != TraceStep::Kind::Certify) return false;

    for (const TraceStep& s : trace.steps) {
        long long n = 1;
        if (s.exceptional_count < 0 || s.exceptional_count > 62) return false;
        n = 1LL << s.exceptional_count;
        for (int x : s.block_sizes) {
            if (x < 1 || x > trace.c) return false;
            n += x;
        }
        if (n != s.n) return false;
    }

    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        const TraceStep& prev = trace.steps[i - 1];
        const TraceStep& cur = trace.steps[i];
        bool last = (i + 1 == trace.steps.size());
        switch (cur.kind) {
            case TraceStep::Kind::Init:
                return false;
            case TraceStep::Kind::Certify: {
                if (!last) return false;
                if (cur.block_sizes != prev.block_sizes ||
                    cur.exceptional_count != prev.exceptional_count)
                    return false;
                break;
            }
            case TraceStep::Kind::Fold: {
                // Remove one occurrence of c; U may only grow.
                if (cur.exceptional_count < prev.exceptional_count) return false;
                long long added = 0;
                if (!multiset_step_ok(prev.block_sizes, cur.block_sizes, trace.c,
                                      trace.c + 1, added) ||
                    added != 0)
                    return false;
                break;
            }
            case TraceStep::Kind::Extend: {
                // Remove one occurrence of some x < c, add >= 0 occurrences
                // of x+1; U may only grow.
                if (cur.exceptional_count < prev.exceptional_count) return false;
                bool ok = false;
                for (int x = 1; x < trace.c && !ok; ++x) {
                    long long added = 0;
                    ok = multiset_step_ok(prev.block_sizes, cur.block_sizes, x, x + 1,
                                          added);
                }
                if (!ok) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace fraccover
