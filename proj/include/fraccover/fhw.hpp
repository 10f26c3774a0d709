#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fraccover/covers.hpp"

namespace fraccover {

/// A rooted tree of bags. Node ids are their positions in `nodes`; the root
/// has parent -1. When witnesses are present, each one is a fractional edge
/// cover of its node's bag.
struct TreeDecomposition {
    struct Node {
        int id = 0;
        int parent = -1;
        IdSet bag;  // sorted vertex ids
    };
    std::vector<Node> nodes;
    std::map<int, EdgeWeightFunction> witnesses;
};

struct TdCheck {
    bool ok = true;
    std::string violation;
};

/// Checks edge coverage and vertex connectedness exhaustively, reporting the
/// first violated edge or vertex. Malformed trees (cycle, orphan parent,
/// several roots) throw.
TdCheck validate_td(const Hypergraph& h, const TreeDecomposition& td);

/// Maximum over the bags of their fractional edge cover number; fills in the
/// per-bag witnesses. Throws on invalid decompositions.
Rat td_fractional_width(const Hypergraph& h, TreeDecomposition& td);

/// All inclusion-maximal vertex sets coverable with weight at most k by a
/// function supported on at most q edges. Branch and bound per support: start
/// from the support's vertex union and peel single vertices off sets whose
/// restricted cover number exceeds k.
std::vector<IdSet> enumerate_candidate_bags(const Hypergraph& h, const Rat& k, int q);

/// Decides whether h admits a tree decomposition whose every bag is a subset
/// of one of the given sets, and returns one if so. Recursive separator
/// search: pick a root bag, recurse on the connected components of the rest
/// with each component's boundary forced into its subtree root; memoized on
/// (component, boundary).
std::optional<TreeDecomposition> td_from_bags(const Hypergraph& h,
                                              const std::vector<IdSet>& bags);

/// Candidate-bag pipeline for the q-limited width test: enumerate bags, then
/// assemble. A positive answer carries a witness decomposition of width <= k;
/// a negative answer only rules out decompositions whose bags are
/// q-support-coverable within weight k.
std::optional<TreeDecomposition> fhw_leq_k(const Hypergraph& h, const Rat& k, int q);

/// Exhaustive oracle over all tree decompositions in elimination normal form,
/// restricted to bags accepted by the predicate. Dynamic program over subsets
/// of eliminated vertices; exact, requires |V| <= 10.
std::optional<TreeDecomposition> td_bruteforce(
    const Hypergraph& h, const std::function<bool(const IdSet&)>& bag_ok);

/// td_bruteforce with the predicate rho*(bag) <= k.
std::optional<TreeDecomposition> fhw_bruteforce(const Hypergraph& h, const Rat& k);

}  // namespace fraccover
