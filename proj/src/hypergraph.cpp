#include "fraccover/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fraccover {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

}  // namespace

void Hypergraph::finish_construction() {
    incidence_.assign(vertex_names_.size(), {});
    for (int e = 0; e < edge_count(); ++e)
        for (int v : edges_[e].vertices) incidence_[v].push_back(e);
    for (int v = 0; v < vertex_count(); ++v)
        if (incidence_[v].empty())
            throw Error("isolated vertex '" + vertex_names_[v] + "'");
}

Hypergraph Hypergraph::from_edges(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
    Hypergraph h;
    for (const auto& [name, members] : edges) {
        if (members.empty()) throw Error("empty edge '" + name + "'");
        if (h.edge_ids_.count(name)) throw Error("duplicate edge name '" + name + "'");
        IdSet ids;
        for (const auto& vname : members) {
            auto it = h.vertex_ids_.find(vname);
            int id;
            if (it == h.vertex_ids_.end()) {
                id = static_cast<int>(h.vertex_names_.size());
                h.vertex_names_.push_back(vname);
                h.vertex_ids_.emplace(vname, id);
            } else {
                id = it->second;
            }
            ids.push_back(id);
        }
        h.edge_ids_.emplace(name, static_cast<int>(h.edges_.size()));
        h.edges_.push_back({name, sorted_unique(std::move(ids))});
    }
    h.finish_construction();
    return h;
}

Hypergraph Hypergraph::with_vertices(
    const std::vector<std::string>& vertex_order,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
    Hypergraph h;
    for (const auto& vname : vertex_order) {
        if (h.vertex_ids_.count(vname)) throw Error("duplicate vertex name '" + vname + "'");
        h.vertex_ids_.emplace(vname, static_cast<int>(h.vertex_names_.size()));
        h.vertex_names_.push_back(vname);
    }
    for (const auto& [name, members] : edges) {
        if (members.empty()) throw Error("empty edge '" + name + "'");
        if (h.edge_ids_.count(name)) throw Error("duplicate edge name '" + name + "'");
        IdSet ids;
        for (const auto& vname : members) {
            auto it = h.vertex_ids_.find(vname);
            if (it == h.vertex_ids_.end()) throw Error("unknown vertex '" + vname + "'");
            ids.push_back(it->second);
        }
        h.edge_ids_.emplace(name, static_cast<int>(h.edges_.size()));
        h.edges_.push_back({name, sorted_unique(std::move(ids))});
    }
    h.finish_construction();
    return h;
}

int Hypergraph::vertex_id(const std::string& name) const {
    auto it = vertex_ids_.find(name);
    if (it == vertex_ids_.end()) throw Error("unknown vertex '" + name + "'");
    return it->second;
}

int Hypergraph::edge_id(const std::string& name) const {
    auto it = edge_ids_.find(name);
    if (it == edge_ids_.end()) throw Error("unknown edge '" + name + "'");
    return it->second;
}

IdSet Hypergraph::all_vertices() const {
    IdSet out(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) out[v] = v;
    return out;
}

IdSet Hypergraph::all_edges() const {
    IdSet out(edge_count());
    for (int e = 0; e < edge_count(); ++e) out[e] = e;
    return out;
}

int Hypergraph::rank() const {
    int r = 0;
    for (const auto& e : edges_) r = std::max(r, static_cast<int>(e.vertices.size()));
    return r;
}

std::vector<std::string> Hypergraph::vertex_names_of(const IdSet& vertex_ids) const {
    std::vector<std::string> out;
    out.reserve(vertex_ids.size());
    for (int v : vertex_ids) out.push_back(vertex_name(v));
    return out;
}

std::vector<std::string> Hypergraph::edge_names_of(const IdSet& edge_ids) const {
    std::vector<std::string> out;
    out.reserve(edge_ids.size());
    for (int e : edge_ids) out.push_back(edge(e).name);
    return out;
}

bool Hypergraph::operator==(const Hypergraph& other) const {
    if (vertex_names_ != other.vertex_names_) return false;
    if (edge_count() != other.edge_count()) return false;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].name != other.edges_[e].name ||
            edges_[e].vertices != other.edges_[e].vertices)
            return false;
    return true;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto cut = raw.find_first_of("%#");
        std::string line = (cut == std::string::npos) ? raw : raw.substr(0, cut);

        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        };
        auto read_name = [&]() -> std::string {
            std::size_t start = pos;
            while (pos < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
                ++pos;
            return line.substr(start, pos - start);
        };

        skip_ws();
        if (pos == line.size()) continue;

        std::string edge_name = read_name();
        if (!valid_name(edge_name)) throw ParseError(lineno, "expected edge name");
        skip_ws();
        if (pos >= line.size() || line[pos] != '(')
            throw ParseError(lineno, "expected '(' after edge name '" + edge_name + "'");
        ++pos;
        skip_ws();
        if (pos < line.size() && line[pos] == ')')
            throw ParseError(lineno, "empty edge '" + edge_name + "'");

        std::vector<std::string> members;
        while (true) {
            skip_ws();
            std::string vname = read_name();
            if (!valid_name(vname)) throw ParseError(lineno, "expected vertex name");
            members.push_back(vname);
            skip_ws();
            if (pos < line.size() && line[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < line.size() && line[pos] == ')') {
                ++pos;
                break;
            }
            throw ParseError(lineno, "expected ',' or ')' in edge '" + edge_name + "'");
        }
        skip_ws();
        if (pos >= line.size() || line[pos] != '.')
            throw ParseError(lineno, "expected '.' terminating edge '" + edge_name + "'");
        ++pos;
        skip_ws();
        if (pos != line.size()) throw ParseError(lineno, "trailing characters after '.'");

        for (const auto& [existing, ignored] : edges)
            if (existing == edge_name)
                throw ParseError(lineno, "duplicate edge name '" + edge_name + "'");
        edges.emplace_back(edge_name, std::move(members));
    }
    return Hypergraph::from_edges(edges);
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    for (const auto& e : h.edges()) {
        out << e.name << "(";
        for (std::size_t i = 0; i < e.vertices.size(); ++i) {
            if (i) out << ",";
            out << h.vertex_name(e.vertices[i]);
        }
        out << ").\n";
    }
    return out.str();
}

std::pair<Hypergraph, std::map<std::string, std::string>> reduce(const Hypergraph& h) {
    // Vertices are of the same type iff their incident edge sets coincide.
    std::map<IdSet, int> representative_of_type;
    std::map<std::string, std::string> class_map;
    std::vector<int> rep(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto [it, inserted] = representative_of_type.emplace(h.edges_containing(v), v);
        rep[v] = it->second;
        class_map[h.vertex_name(v)] = h.vertex_name(it->second);
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::vector<std::string> members;
        IdSet seen;
        for (int v : e.vertices) {
            int r = rep[v];
            if (!set_contains(seen, r)) {
                seen = set_union(seen, {r});
                members.push_back(h.vertex_name(r));
            }
        }
        edges.emplace_back(e.name, std::move(members));
    }
    return {Hypergraph::from_edges(edges), std::move(class_map)};
}

DualMapping dualize(const Hypergraph& h) {
    for (int v1 = 0; v1 < h.vertex_count(); ++v1)
        for (int v2 = v1 + 1; v2 < h.vertex_count(); ++v2)
            if (h.edges_containing(v1) == h.edges_containing(v2))
                throw NotReducedError("hypergraph is not reduced: vertices '" +
                                      h.vertex_name(v1) + "' and '" + h.vertex_name(v2) +
                                      "' have the same incident edge set");

    std::vector<std::string> dual_vertices;
    dual_vertices.reserve(h.edge_count());
    for (const auto& e : h.edges()) dual_vertices.push_back(e.name);

    std::vector<std::pair<std::string, std::vector<std::string>>> dual_edges;
    dual_edges.reserve(h.vertex_count());
    DualMapping m;
    for (int v = 0; v < h.vertex_count(); ++v) {
        std::string fname = "d_" + h.vertex_name(v);
        dual_edges.emplace_back(fname, h.edge_names_of(h.edges_containing(v)));
        m.edge_of_vertex[h.vertex_name(v)] = fname;
    }
    for (const auto& e : h.edges()) m.vertex_of_edge[e.name] = e.name;
    m.original = &h;
    m.dual = Hypergraph::with_vertices(dual_vertices, dual_edges);
    return m;
}

namespace {

void enumerate_intersections(const Hypergraph& h, int c, int next, int depth,
                             const IdSet& current, IdSet& chosen, int& best,
                             IdSet& best_witness) {
    if (depth == c) {
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_witness = chosen;
        }
        return;
    }
    for (int e = next; e <= h.edge_count() - (c - depth); ++e) {
        IdSet inter = (depth == 0) ? h.edge(e).vertices
                                   : set_intersection(current, h.edge(e).vertices);
        if (inter.empty()) continue;  // every completion of this prefix has size 0
        chosen.push_back(e);
        enumerate_intersections(h, c, e + 1, depth + 1, inter, chosen, best, best_witness);
        chosen.pop_back();
    }
}

}  // namespace

IntersectionProfile multi_intersection(const Hypergraph& h, int c) {
    if (c < 1 || c > h.edge_count())
        throw std::invalid_argument("c must satisfy 1 <= c <= |E|, got c=" + std::to_string(c));
    int best = -1;
    IdSet witness, chosen;
    enumerate_intersections(h, c, 0, 0, {}, chosen, best, witness);
    if (best < 0) {
        // All c-subsets intersect emptily; report the first subset.
        best = 0;
        for (int e = 0; e < c; ++e) witness.push_back(e);
    }
    return {c, best, h.edge_names_of(witness)};
}

CdCheck is_cd(const Hypergraph& h, int c, int d) {
    if (d < 0) throw std::invalid_argument("d must be non-negative");
    IntersectionProfile p = multi_intersection(h, c);
    if (p.d <= d) return {true, {}};
    return {false, p.witness};
}

}  // namespace fraccover
