#pragma once

#include <optional>
#include <vector>

#include "fraccover/covers.hpp"

namespace fraccover {

/// A block: a set of at most c edges, kept as sorted edge ids.
using Block = IdSet;

/// State of the support-reduction loop relative to a fixed weight function
/// gamma: a family S of blocks plus an exceptional vertex set U with
///   (1) U inside B(gamma),
///   (2) every block of size at most c,
///   (3) B(gamma) \ U inside the union of the block intersections.
/// All three conditions are checked on construction.
class WellFormedPair {
public:
    WellFormedPair(const Hypergraph& host, EdgeWeightFunction gamma, int c,
                   std::vector<Block> blocks, IdSet exceptional);

    const Hypergraph& host() const { return *host_; }
    const EdgeWeightFunction& gamma() const { return gamma_; }
    int arity() const { return c_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const IdSet& exceptional() const { return exceptional_; }  // U
    const IdSet& covered() const { return covered_; }          // B(gamma), cached

    /// n(S,U) = sum of block sizes + 2^|U|.
    long long size() const;

    IdSet block_union() const;               // union of all blocks
    IdSet block_intersection_union() const;  // union over blocks of their intersections

private:
    const Hypergraph* host_;
    EdgeWeightFunction gamma_;
    int c_;
    std::vector<Block> blocks_;
    IdSet exceptional_;
    IdSet covered_;
};

/// One equivalence class of edges outside the blocks, grouped by their trace
/// on U. The representative is the smallest witnessing edge in edge order.
struct WorkingClass {
    IdSet trace;      // nonempty subset of U, = e cap U for the witnesses
    IdSet witnesses;  // W_{U'}
    int representative;
};

struct WorkingPartition {
    std::vector<WorkingClass> classes;  // ordered by representative
    IdSet representatives() const;
};

/// The data of one extension step: the deficient block, the positive slack
/// epsilon = 1 - gamma(S*), the heavy extending edges, and the light
/// vertices of the block intersection missed by all of them.
struct ExtensionChoice {
    Block extended_block;
    Rat epsilon;
    IdSet extending_set;
    IdSet light_vertices;
};

/// The (multiset of block sizes, |U|) shadow of a pair; n values agree.
struct BareBonesPair {
    std::vector<int> block_sizes;  // sorted ascending
    long long exceptional_count = 0;
    long long size() const;
};

struct TraceStep {
    enum class Kind { Init, Fold, Extend, Certify } kind;
    long long n = 0;
    std::vector<int> block_sizes;
    long long exceptional_count = 0;
    // Extend steps only:
    Rat epsilon;
    int extending_set_size = -1;
    int light_count = -1;
};

struct TransformationTrace {
    int c = 0;
    std::vector<TraceStep> steps;
};

class CapExceededError : public Error {
public:
    CapExceededError(std::string msg, TransformationTrace trace)
        : Error(std::move(msg)), trace(std::move(trace)) {}
    TransformationTrace trace;
};

/// Groups edges by their trace on B and moves each class's total weight
/// (capped at 1) onto the first edge of the class. The result covers B with
/// support at most 2^|B| and never weighs more than gamma.
EdgeWeightFunction compress_to_target(const Hypergraph& h, const EdgeWeightFunction& gamma,
                                      const IdSet& target);

/// S0 = singletons of the edges weighing at least 1/(2c); U0 = the covered
/// vertices missed by those edges.
WellFormedPair initial_pair(const Hypergraph& h, const EdgeWeightFunction& gamma, int c,
                            const Rat& k);

/// Removes a block of size exactly c, absorbing its covered intersection
/// into U.
WellFormedPair fold(const WellFormedPair& p, const Block& star);

/// Partition of the edges outside the blocks that touch U, by trace on U.
WorkingPartition working_partition(const WellFormedPair& p);

/// LP(S,U): one variable per edge in the block union or among the class
/// representatives; One_S constraints per block, One_u constraints per
/// exceptional vertex.
UnaryLP build_lp(const WellFormedPair& p);

/// Solves LP(S,U); when the optimum is at most k, converts the primal into a
/// certificate nu covering U and every block intersection with weight <= k
/// and support <= n(S,U). The weight-shift bound
/// OPT <= weight(gamma) + sum of positive block deficits is checked on every
/// solve.
std::optional<EdgeWeightFunction> certify_perfect(const WellFormedPair& p, const Rat& k);

/// Picks the block with the largest positive deficit (earliest on ties),
/// sets epsilon to that deficit, and collects the edges of weight at least
/// epsilon/(2c) outside the block plus the light vertices they miss.
ExtensionChoice choose_extension(const WellFormedPair& p, const Rat& k);

/// Replaces the extended block by its one-edge enlargements over the
/// extending set, absorbing the light vertices into U.
WellFormedPair extend(const WellFormedPair& p, const ExtensionChoice& choice);

struct ReduceResult {
    EdgeWeightFunction nu;
    TransformationTrace trace;
    long long final_size = 0;  // n of the certified pair
};

/// The support-reduction loop: starting from the initial pair, repeatedly
/// certify, else fold the first full-size block, else extend; stops at the
/// first certificate. Guarantees weight(nu) <= k, B(gamma) a subset of
/// B(nu), and |support(nu)| <= n of the final pair. Throws CapExceededError
/// (carrying the full trace) if the iteration cap is hit.
ReduceResult reduce_support(const Hypergraph& h, const EdgeWeightFunction& gamma, int c,
                            const Rat& k, long long cap = 1000000);

BareBonesPair bbp_project(const WellFormedPair& p);

/// Replays the bare-bones shadow of a trace: every consecutive step must be
/// a valid bare-bones folding or extension matching its recorded kind, and
/// the final certify step must repeat the last state.
bool validate_trace(const TransformationTrace& trace);

}  // namespace fraccover
