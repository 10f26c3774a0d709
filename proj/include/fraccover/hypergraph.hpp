#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fraccover/errors.hpp"
#include "fraccover/setops.hpp"

namespace fraccover {

/// A finite hypergraph with named vertices and named edges. Vertices are kept
/// in first-occurrence order and edges in insertion order; both orders are
/// part of the value and drive every downstream enumeration. Invariants: no
/// empty edge, no isolated vertex, unique edge names. Two edges may share the
/// same vertex set under distinct names.
class Hypergraph {
public:
    struct Edge {
        std::string name;
        IdSet vertices;  // sorted vertex ids
    };

    Hypergraph() = default;

    /// Builds a hypergraph from (edge name, vertex name list) pairs. Vertex
    /// ids follow first occurrence across the edge list.
    static Hypergraph from_edges(
        const std::vector<std::pair<std::string, std::vector<std::string>>>& edges);

    /// Builds with an explicit vertex order. Every listed vertex must occur
    /// in at least one edge.
    static Hypergraph with_vertices(
        const std::vector<std::string>& vertex_order,
        const std::vector<std::pair<std::string, std::vector<std::string>>>& edges);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    int vertex_id(const std::string& name) const;
    bool has_vertex(const std::string& name) const { return vertex_ids_.count(name) > 0; }

    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_id(const std::string& name) const;
    bool has_edge(const std::string& name) const { return edge_ids_.count(name) > 0; }

    /// Edges incident to vertex v, in edge order.
    const IdSet& edges_containing(int v) const { return incidence_.at(v); }

    IdSet all_vertices() const;
    IdSet all_edges() const;
    int rank() const;  // maximum edge size, 0 when edgeless

    std::vector<std::string> vertex_names_of(const IdSet& vertex_ids) const;
    std::vector<std::string> edge_names_of(const IdSet& edge_ids) const;

    bool operator==(const Hypergraph& other) const;

private:
    std::vector<std::string> vertex_names_;
    std::map<std::string, int> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> edge_ids_;
    std::vector<IdSet> incidence_;

    void finish_construction();
};

/// Dualization result. `dual` has one vertex per original edge (same name,
/// original edge order) and one edge per original vertex, named d_<vertex>.
struct DualMapping {
    const Hypergraph* original = nullptr;
    Hypergraph dual;
    std::map<std::string, std::string> edge_of_vertex;  // v -> f_v
    std::map<std::string, std::string> vertex_of_edge;  // e -> dual vertex
};

struct IntersectionProfile {
    int c = 0;
    int d = 0;
    std::vector<std::string> witness;  // one c-subset of edge names attaining d
};

struct CdCheck {
    bool holds = false;
    std::vector<std::string> witness;  // violating c-subset when holds is false
};

/// Parses the hypergraph file format: lines `NAME(v1,...,vk).` with k >= 1,
/// `%` or `#` comments, blank lines ignored, names matching [A-Za-z0-9_]+.
Hypergraph parse_hypergraph(const std::string& text);

/// Emits the file format; inverse of parse_hypergraph up to comments.
std::string format_hypergraph(const Hypergraph& h);

/// Merges vertices of the same type (identical incident edge sets) into the
/// first vertex of each class. Returns the reduced hypergraph and the map
/// from every original vertex to its retained representative.
std::pair<Hypergraph, std::map<std::string, std::string>> reduce(const Hypergraph& h);

/// Dual hypergraph of a reduced hypergraph. Throws NotReducedError otherwise.
DualMapping dualize(const Hypergraph& h);

/// Largest cardinality of an intersection of c distinct edges, with witness.
/// Exhaustive over all c-subsets, pruning branches whose running
/// intersection is already empty.
IntersectionProfile multi_intersection(const Hypergraph& h, int c);

/// Whether every intersection of c distinct edges has at most d vertices.
CdCheck is_cd(const Hypergraph& h, int c, int d);

}  // namespace fraccover
