#include "fraccover/covers.hpp"

namespace fraccover {

void EdgeWeightFunction::set(int e, Rat value) {
    if (value < 0 || value > 1)
        throw Error("edge weight out of [0,1]: " + rat_str(value));
    weights_.at(e) = std::move(value);
}

IdSet EdgeWeightFunction::support() const {
    IdSet out;
    for (int e = 0; e < static_cast<int>(weights_.size()); ++e)
        if (weights_[e] != 0) out.push_back(e);
    return out;
}

Rat EdgeWeightFunction::weight() const {
    Rat s(0);
    for (const Rat& w : weights_) s += w;
    return s;
}

Rat EdgeWeightFunction::incident_weight(int v) const {
    Rat s(0);
    for (int e : host_->edges_containing(v)) s += weights_[e];
    return s;
}

Rat EdgeWeightFunction::sum_over(const IdSet& edge_ids) const {
    Rat s(0);
    for (int e : edge_ids) s += weights_.at(e);
    return s;
}

void VertexWeightFunction::set(int v, Rat value) {
    if (value < 0 || value > 1)
        throw Error("vertex weight out of [0,1]: " + rat_str(value));
    weights_.at(v) = std::move(value);
}

IdSet VertexWeightFunction::support() const {
    IdSet out;
    for (int v = 0; v < static_cast<int>(weights_.size()); ++v)
        if (weights_[v] != 0) out.push_back(v);
    return out;
}

Rat VertexWeightFunction::weight() const {
    Rat s(0);
    for (const Rat& w : weights_) s += w;
    return s;
}

Rat VertexWeightFunction::edge_weight(int e) const {
    Rat s(0);
    for (int v : host_->edge(e).vertices) s += weights_[v];
    return s;
}

IdSet covered_vertices(const EdgeWeightFunction& gamma) {
    IdSet out;
    for (int v = 0; v < gamma.host().vertex_count(); ++v)
        if (gamma.incident_weight(v) >= 1) out.push_back(v);
    return out;
}

IdSet covered_edges(const VertexWeightFunction& beta) {
    IdSet out;
    for (int e = 0; e < beta.host().edge_count(); ++e)
        if (beta.edge_weight(e) >= 1) out.push_back(e);
    return out;
}

std::pair<Rat, EdgeWeightFunction> edge_cover_number(const Hypergraph& h, const IdSet& X) {
    UnaryLP lp;
    for (const auto& e : h.edges()) lp.add_variable(e.name);
    for (int v : X) lp.add_constraint(h.vertex_name(v), h.edges_containing(v));
    LPSolution sol = solve(lp);
    EdgeWeightFunction gamma(h);
    for (int e = 0; e < h.edge_count(); ++e) gamma.set(e, sol.primal[e]);
    return {sol.optimum, std::move(gamma)};
}

std::pair<Rat, VertexWeightFunction> vertex_cover_number(const Hypergraph& h,
                                                         const IdSet& edge_subset) {
    UnaryLP lp;
    for (const auto& name : h.vertex_names()) lp.add_variable(name);
    for (int e : edge_subset) lp.add_constraint(h.edge(e).name, h.edge(e).vertices);
    LPSolution sol = solve(lp);
    VertexWeightFunction beta(h);
    for (int v = 0; v < h.vertex_count(); ++v) beta.set(v, sol.primal[v]);
    return {sol.optimum, std::move(beta)};
}

VertexWeightFunction dual_transfer_to_vertex(const DualMapping& m,
                                             const EdgeWeightFunction& gamma_on_dual) {
    if (!m.original) throw Error("dual mapping lost its original hypergraph");
    if (!(gamma_on_dual.host() == m.dual))
        throw Error("weight function does not live on the dual hypergraph of this mapping");
    VertexWeightFunction beta(*m.original);
    for (const auto& [vname, fname] : m.edge_of_vertex)
        beta.set(vname, gamma_on_dual.get(fname));
    return beta;
}

EdgeWeightFunction dual_transfer_to_edge(const DualMapping& m,
                                         const VertexWeightFunction& beta_on_original) {
    if (!m.original) throw Error("dual mapping lost its original hypergraph");
    if (!(beta_on_original.host() == *m.original))
        throw Error("weight function does not live on the original hypergraph of this mapping");
    EdgeWeightFunction gamma(m.dual);
    for (const auto& [vname, fname] : m.edge_of_vertex)
        gamma.set(fname, beta_on_original.get(vname));
    return gamma;
}

IdSet heavy_vertices(const EdgeWeightFunction& gamma, const Rat& eps) {
    if (eps <= 0 || eps > 1)
        throw std::invalid_argument("eps must lie in (0,1], got " + rat_str(eps));
    IdSet out;
    for (int v = 0; v < gamma.host().vertex_count(); ++v)
        if (gamma.incident_weight(v) >= eps) out.push_back(v);
    return out;
}

Rat heavy_vertex_bound(int c, int d, const Rat& k, const Rat& eps) {
    if (c < 1) throw std::invalid_argument("c must be positive");
    if (d < 0) throw std::invalid_argument("d must be non-negative");
    if (k <= 0) throw std::invalid_argument("k must be positive");
    if (eps <= 0 || eps > 1)
        throw std::invalid_argument("eps must lie in (0,1], got " + rat_str(eps));
    return Rat(d) * rat_pow(Rat(2) * k / eps, static_cast<unsigned>(c));
}

}  // namespace fraccover
