#pragma once

#include <utility>
#include <vector>

#include "fraccover/hypergraph.hpp"
#include "fraccover/ratlp.hpp"

namespace fraccover {

/// Weights in [0,1] on the edges of a host hypergraph; unset edges weigh 0.
class EdgeWeightFunction {
public:
    explicit EdgeWeightFunction(const Hypergraph& host)
        : host_(&host), weights_(host.edge_count(), Rat(0)) {}

    const Hypergraph& host() const { return *host_; }
    const Rat& operator[](int e) const { return weights_.at(e); }
    const Rat& get(const std::string& edge_name) const {
        return weights_.at(host_->edge_id(edge_name));
    }
    void set(int e, Rat value);
    void set(const std::string& edge_name, Rat value) {
        set(host_->edge_id(edge_name), std::move(value));
    }

    IdSet support() const;
    Rat weight() const;
    /// Total weight of the edges containing v.
    Rat incident_weight(int v) const;
    /// Total weight of an edge set.
    Rat sum_over(const IdSet& edge_ids) const;

    bool operator==(const EdgeWeightFunction& other) const {
        return host_ == other.host_ && weights_ == other.weights_;
    }

private:
    const Hypergraph* host_;
    std::vector<Rat> weights_;
};

/// Mirror of EdgeWeightFunction on vertices.
class VertexWeightFunction {
public:
    explicit VertexWeightFunction(const Hypergraph& host)
        : host_(&host), weights_(host.vertex_count(), Rat(0)) {}

    const Hypergraph& host() const { return *host_; }
    const Rat& operator[](int v) const { return weights_.at(v); }
    const Rat& get(const std::string& vertex_name) const {
        return weights_.at(host_->vertex_id(vertex_name));
    }
    void set(int v, Rat value);
    void set(const std::string& vertex_name, Rat value) {
        set(host_->vertex_id(vertex_name), std::move(value));
    }

    IdSet support() const;
    Rat weight() const;
    /// Total weight of the vertices of edge e.
    Rat edge_weight(int e) const;

    bool operator==(const VertexWeightFunction& other) const {
        return host_ == other.host_ && weights_ == other.weights_;
    }

private:
    const Hypergraph* host_;
    std::vector<Rat> weights_;
};

/// B(gamma): vertices whose incident weight reaches 1.
IdSet covered_vertices(const EdgeWeightFunction& gamma);

/// B_v(beta): edges whose vertex weight reaches 1.
IdSet covered_edges(const VertexWeightFunction& beta);

/// rho*(X): exact optimum of the covering LP with one variable per edge and
/// one constraint per vertex of X, plus an optimal witness.
std::pair<Rat, EdgeWeightFunction> edge_cover_number(const Hypergraph& h, const IdSet& X);

/// tau*(E'): one variable per vertex, one constraint per edge of E'.
std::pair<Rat, VertexWeightFunction> vertex_cover_number(const Hypergraph& h,
                                                         const IdSet& edge_subset);

/// Dual weight transfer: an edge weight function on m.dual corresponds to the
/// vertex weight function beta(v) = gamma(f_v) on the original hypergraph.
VertexWeightFunction dual_transfer_to_vertex(const DualMapping& m,
                                             const EdgeWeightFunction& gamma_on_dual);

/// Inverse direction of dual_transfer_to_vertex.
EdgeWeightFunction dual_transfer_to_edge(const DualMapping& m,
                                         const VertexWeightFunction& beta_on_original);

/// B^eps(gamma): vertices of incident weight at least eps, 0 < eps <= 1.
IdSet heavy_vertices(const EdgeWeightFunction& gamma, const Rat& eps);

/// d * (2k/eps)^c, the bound on |B^eps(gamma)| when every edge weight is at
/// most eps/(2c) on a (c,d)-hypergraph carrying total weight at most k.
Rat heavy_vertex_bound(int c, int d, const Rat& k, const Rat& eps);

}  // namespace fraccover
