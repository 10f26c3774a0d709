#include "fraccover/json_io.hpp"

namespace fraccover {

namespace {

template <class WeightFn>
Json weights_object(const WeightFn& fn, const std::vector<std::string>& names,
                    const IdSet& support) {
    Json weights = Json::object();
    for (int i : support) weights[names[i]] = rat_str(fn[i]);
    return weights;
}

}  // namespace

Json weight_function_to_json(const EdgeWeightFunction& gamma) {
    std::vector<std::string> names;
    for (const auto& e : gamma.host().edges()) names.push_back(e.name);
    Json j;
    j["weights"] = weights_object(gamma, names, gamma.support());
    j["weight"] = rat_str(gamma.weight());
    j["support_size"] = gamma.support().size();
    return j;
}

Json weight_function_to_json(const VertexWeightFunction& beta) {
    Json j;
    j["weights"] = weights_object(beta, beta.host().vertex_names(), beta.support());
    j["weight"] = rat_str(beta.weight());
    j["support_size"] = beta.support().size();
    return j;
}

EdgeWeightFunction edge_weight_function_from_json(const Hypergraph& h, const Json& j) {
    EdgeWeightFunction gamma(h);
    for (const auto& [name, value] : j.at("weights").items())
        gamma.set(name, rat_parse(value.get<std::string>()));
    return gamma;
}

VertexWeightFunction vertex_weight_function_from_json(const Hypergraph& h, const Json& j) {
    VertexWeightFunction beta(h);
    for (const auto& [name, value] : j.at("weights").items())
        beta.set(name, rat_parse(value.get<std::string>()));
    return beta;
}

Json td_to_json(const Hypergraph& h, const TreeDecomposition& td, const Rat& width) {
    Json nodes = Json::array();
    for (const auto& node : td.nodes) {
        Json n;
        n["id"] = node.id;
        n["parent"] = (node.parent < 0) ? Json(nullptr) : Json(node.parent);
        n["bag"] = h.vertex_names_of(node.bag);
        auto it = td.witnesses.find(node.id);
        if (it != td.witnesses.end()) {
            Json cover = Json::object();
            for (int e : it->second.support())
                cover[h.edge(e).name] = rat_str(it->second[e]);
            n["cover"] = cover;
            n["bag_width"] = rat_str(edge_cover_number(h, node.bag).first);
        }
        nodes.push_back(n);
    }
    Json j;
    j["nodes"] = nodes;
    j["width"] = rat_str(width);
    return j;
}

TreeDecomposition td_from_json(const Hypergraph& h, const Json& j) {
    TreeDecomposition td;
    for (const auto& n : j.at("nodes")) {
        TreeDecomposition::Node node;
        node.id = n.at("id").get<int>();
        node.parent = n.at("parent").is_null() ? -1 : n.at("parent").get<int>();
        IdSet bag;
        for (const auto& name : n.at("bag")) bag.push_back(h.vertex_id(name.get<std::string>()));
        node.bag = sorted_unique(std::move(bag));
        td.nodes.push_back(std::move(node));
        if (n.contains("cover")) {
            EdgeWeightFunction witness(h);
            for (const auto& [name, value] : n.at("cover").items())
                witness.set(name, rat_parse(value.get<std::string>()));
            td.witnesses.emplace(td.nodes.back().id, std::move(witness));
        }
    }
    return td;
}

Json trace_to_json(const TransformationTrace& trace) {
    Json steps = Json::array();
    for (const TraceStep& s : trace.steps) {
        Json step;
        switch (s.kind) {
            case TraceStep::Kind::Init: step["kind"] = "init"; break;
            case TraceStep::Kind::Fold: step["kind"] = "fold"; break;
            case TraceStep::Kind::Extend: step["kind"] = "extend"; break;
            case TraceStep::Kind::Certify: step["kind"] = "certify"; break;
        }
        step["n"] = s.n;
        step["A"] = s.block_sizes;
        step["b"] = s.exceptional_count;
        if (s.kind == TraceStep::Kind::Extend) {
            step["epsilon"] = rat_str(s.epsilon);
            step["extending_set_size"] = s.extending_set_size;
            step["light_count"] = s.light_count;
        }
        steps.push_back(step);
    }
    return steps;
}

}  // namespace fraccover
