// Python bindings for the main operations. Exact rationals cross the
// boundary as "p/q" strings; structured results (decompositions, traces)
// cross as plain dicts/lists converted from their JSON forms.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fraccover/fhw.hpp"
#include "fraccover/json_io.hpp"
#include "fraccover/support_reduction.hpp"

namespace py = pybind11;
using namespace fraccover;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items())
                out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

EdgeWeightFunction weights_from_dict(const Hypergraph& h, const py::dict& weights) {
    EdgeWeightFunction gamma(h);
    for (const auto& [key, value] : weights)
        gamma.set(key.cast<std::string>(), rat_parse(value.cast<std::string>()));
    return gamma;
}

VertexWeightFunction vweights_from_dict(const Hypergraph& h, const py::dict& weights) {
    VertexWeightFunction beta(h);
    for (const auto& [key, value] : weights)
        beta.set(key.cast<std::string>(), rat_parse(value.cast<std::string>()));
    return beta;
}

py::dict weights_to_dict(const EdgeWeightFunction& gamma) {
    py::dict out;
    for (int e : gamma.support())
        out[py::str(gamma.host().edge(e).name)] = rat_str(gamma[e]);
    return out;
}

py::dict vweights_to_dict(const VertexWeightFunction& beta) {
    py::dict out;
    for (int v : beta.support())
        out[py::str(beta.host().vertex_name(v))] = rat_str(beta[v]);
    return out;
}

py::object td_to_py(const Hypergraph& h, const std::optional<TreeDecomposition>& td) {
    if (!td) return py::none();
    TreeDecomposition copy = *td;
    Rat width = td_fractional_width(h, copy);
    return json_to_py(td_to_json(h, copy, width));
}

}  // namespace

PYBIND11_MODULE(_fraccover, m) {
    m.doc() = "fractional hypergraph covers, support reduction, and fhw checking";

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_static("parse", &parse_hypergraph, py::arg("text"))
        .def_property_readonly("vertices",
                               [](const Hypergraph& h) { return h.vertex_names(); })
        .def_property_readonly("edges",
                               [](const Hypergraph& h) {
                                   py::dict out;
                                   for (const auto& e : h.edges())
                                       out[py::str(e.name)] = h.vertex_names_of(e.vertices);
                                   return out;
                               })
        .def("format", &format_hypergraph)
        .def("rank", &Hypergraph::rank)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(" + std::to_string(h.vertex_count()) + " vertices, " +
                   std::to_string(h.edge_count()) + " edges)";
        });

    m.def("parse", &parse_hypergraph, py::arg("text"));

    m.def("reduce", [](const Hypergraph& h) {
        auto [r, cls] = reduce(h);
        return py::make_tuple(r, cls);
    });

    py::class_<DualMapping>(m, "DualMapping")
        .def_property_readonly("dual", [](const DualMapping& m_) { return m_.dual; })
        .def_readonly("edge_of_vertex", &DualMapping::edge_of_vertex)
        .def_readonly("vertex_of_edge", &DualMapping::vertex_of_edge);

    m.def("dualize", &dualize, py::keep_alive<0, 1>());

    m.def("multi_intersection", [](const Hypergraph& h, int c) {
        IntersectionProfile p = multi_intersection(h, c);
        return py::make_tuple(p.d, p.witness);
    });

    m.def("is_cd", [](const Hypergraph& h, int c, int d) {
        CdCheck check = is_cd(h, c, d);
        return py::make_tuple(check.holds, check.witness);
    });

    m.def("covered_vertices", [](const Hypergraph& h, const py::dict& weights) {
        return h.vertex_names_of(covered_vertices(weights_from_dict(h, weights)));
    });

    m.def("covered_edges", [](const Hypergraph& h, const py::dict& weights) {
        return h.edge_names_of(covered_edges(vweights_from_dict(h, weights)));
    });

    m.def("edge_cover_number",
          [](const Hypergraph& h, const std::optional<std::vector<std::string>>& vertices) {
              IdSet X;
              if (vertices)
                  for (const auto& name : *vertices) X.push_back(h.vertex_id(name));
              else
                  X = h.all_vertices();
              auto [rho, gamma] = edge_cover_number(h, sorted_unique(std::move(X)));
              return py::make_tuple(rat_str(rho), weights_to_dict(gamma));
          },
          py::arg("h"), py::arg("vertices") = py::none());

    m.def("vertex_cover_number", [](const Hypergraph& h) {
        auto [tau, beta] = vertex_cover_number(h, h.all_edges());
        return py::make_tuple(rat_str(tau), vweights_to_dict(beta));
    });

    m.def("heavy_vertices", [](const Hypergraph& h, const py::dict& weights,
                               const std::string& eps) {
        return h.vertex_names_of(heavy_vertices(weights_from_dict(h, weights), rat_parse(eps)));
    });

    m.def("heavy_vertex_bound", [](int c, int d, const std::string& k, const std::string& eps) {
        return rat_str(heavy_vertex_bound(c, d, rat_parse(k), rat_parse(eps)));
    });

    m.def("compress_to_target", [](const Hypergraph& h, const py::dict& weights,
                                   const std::vector<std::string>& target) {
        IdSet B;
        for (const auto& name : target) B.push_back(h.vertex_id(name));
        EdgeWeightFunction nu =
            compress_to_target(h, weights_from_dict(h, weights), sorted_unique(std::move(B)));
        return weights_to_dict(nu);
    });

    m.def("reduce_support",
          [](const Hypergraph& h, const py::dict& weights, int c, const std::string& k,
             long long cap) {
              ReduceResult res =
                  reduce_support(h, weights_from_dict(h, weights), c, rat_parse(k), cap);
              py::dict out;
              out["nu"] = weights_to_dict(res.nu);
              out["weight"] = rat_str(res.nu.weight());
              out["support_size"] = res.nu.support().size();
              out["final_pair_size"] = res.final_size;
              out["trace"] = json_to_py(trace_to_json(res.trace));
              return out;
          },
          py::arg("h"), py::arg("weights"), py::arg("c"), py::arg("k"),
          py::arg("cap") = 1000000);

    m.def("enumerate_candidate_bags",
          [](const Hypergraph& h, const std::string& k, int q) {
              py::list out;
              for (const IdSet& bag : enumerate_candidate_bags(h, rat_parse(k), q))
                  out.append(h.vertex_names_of(bag));
              return out;
          });

    m.def("fhw_leq_k", [](const Hypergraph& h, const std::string& k, int q) {
        return td_to_py(h, fhw_leq_k(h, rat_parse(k), q));
    });

    m.def("fhw_bruteforce", [](const Hypergraph& h, const std::string& k) {
        return td_to_py(h, fhw_bruteforce(h, rat_parse(k)));
    });
}
