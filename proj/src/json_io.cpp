#include "cobase/json_io.hpp"

#include "cobase/lpm.hpp"
#include "cobase/r10.hpp"

namespace cobase {

using nlohmann::json;

namespace {

Mask mask_from_json_list(const json& j, int n) {
    std::vector<int> elems;
    for (const auto& e : j) elems.push_back(e.get<int>());
    return mask_from_elements(elems, n);
}

}  // namespace

Matroid matroid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("matroid description needs a type field");
    std::string type = j.at("type").get<std::string>();

    if (type == "uniform") return uniform_matroid(j.at("n").get<int>(), j.at("r").get<int>());
    if (type == "gf2") {
        std::vector<std::string> rows = j.at("rows").get<std::vector<std::string>>();
        if (rows.empty()) throw std::invalid_argument("gf2 matroid needs rows");
        int n = static_cast<int>(rows[0].size());
        std::vector<Mask> bits;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n)
                throw std::invalid_argument("gf2 rows must share a length");
            bits.push_back(mask_from_string(r));
        }
        return gf2_matroid(n, bits);
    }
    if (type == "graphic") {
        std::vector<std::pair<int, int>> edges;
        int nv = 0;
        for (const auto& e : j.at("edges")) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            edges.emplace_back(u, v);
            nv = std::max({nv, u + 1, v + 1});
        }
        if (j.contains("vertices")) nv = j.at("vertices").get<int>();
        return graphic_matroid(nv, edges);
    }
    if (type == "transversal") {
        int n = j.at("n").get<int>();
        std::vector<Mask> sets;
        for (const auto& s : j.at("sets")) sets.push_back(mask_from_json_list(s, n));
        return transversal_matroid(n, sets);
    }
    if (type == "lpm")
        return lpm_matroid(make_path_pair(j.at("upper").get<std::string>(),
                                          j.at("lower").get<std::string>()));
    if (type == "wheel") return wheel_matroid(j.at("n").get<int>());
    if (type == "whirl") return whirl_matroid(j.at("n").get<int>());
    if (type == "necklace") return necklace_matroid(j.at("n").get<int>());
    if (type == "r10") return r10_matroid();
    if (type == "dual") return dual(matroid_from_json(j.at("of")));
    if (type == "sum") {
        const auto& parts = j.at("parts");
        if (parts.empty()) throw std::invalid_argument("sum needs parts");
        Matroid acc = matroid_from_json(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = direct_sum(acc, matroid_from_json(parts[i]));
        return acc;
    }
    if (type == "minor") {
        Matroid inner = matroid_from_json(j.at("of"));
        Mask contract = j.contains("contract")
                            ? mask_from_json_list(j.at("contract"), inner.size())
                            : 0;
        Mask del = j.contains("delete") ? mask_from_json_list(j.at("delete"), inner.size()) : 0;
        return minor(inner, contract, del);
    }
    if (type == "series_ext")
        return series_extend(matroid_from_json(j.at("of")), j.at("element").get<int>());
    if (type == "parallel_ext")
        return parallel_extend(matroid_from_json(j.at("of")), j.at("element").get<int>());
    if (type == "explicit") {
        int n = j.at("n").get<int>();
        std::vector<Mask> bases;
        for (const auto& b : j.at("bases")) bases.push_back(mask_from_json_list(b, n));
        return explicit_matroid(n, bases);
    }
    throw std::invalid_argument("unknown matroid type '" + type + "'");
}

Matroid matroid_from_string(const std::string& text) {
    json j = json::parse(text);
    return matroid_from_json(j);
}

json report_to_json(const PropertyReport& rep) {
    return json{{"property", property_name(rep.property)},
                {"verdict", verdict_name(rep.verdict)},
                {"witness", rep.witness},
                {"elapsed_ms", rep.elapsed_ms},
                {"nodes_expanded", rep.nodes_expanded}};
}

std::string graph_to_dot(const BCGraph& g) {
    std::string out = "graph bc {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" +
               mask_to_string(g.vertices[v], g.ground_size) + "\"];\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        for (int w : g.adj[v])
            if (w > static_cast<int>(v))
                out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) + ";\n";
    out += "}\n";
    return out;
}

std::string model_to_dot(const StitchedModel& model) {
    std::string out = "graph model {\n  node [style=filled];\n";
    for (std::size_t i = 0; i < model.verts.size(); ++i) {
        const auto& v = model.verts[i];
        std::string color = v.copy > 0 ? "lightblue" : (v.copy < 0 ? "lightyellow" : "gray");
        std::string shape = is_lean(v.bits, model.n) ? "doublecircle" : "circle";
        out += "  v" + std::to_string(i) + " [label=\"" +
               model_vertex_to_string(model.n, v) + "\", fillcolor=" + color +
               ", shape=" + shape + "];\n";
    }
    for (std::size_t i = 0; i < model.verts.size(); ++i)
        for (int j : model.adj[i])
            if (j > static_cast<int>(i))
                out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

std::string model_vertex_to_string(int n, ModelVertex v) {
    char sign = v.copy > 0 ? '+' : (v.copy < 0 ? '-' : '=');
    return sign + mask_to_string(v.bits, n);
}

ModelVertex model_vertex_from_string(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("model vertex needs a sign and bits");
    int copy;
    switch (text[0]) {
        case '+': copy = 1; break;
        case '-': copy = -1; break;
        case '=': copy = 0; break;
        default: throw std::invalid_argument("model vertex must start with +, - or =");
    }
    return ModelVertex{mask_from_string(text.substr(1)), copy};
}

json certificate_to_json(int n, WWKind kind, const HamCertificate& cert) {
    StitchedModel model = build_model(n, kind);
    json path = json::array();
    for (int idx : cert.cover.paths[0])
        path.push_back(model_vertex_to_string(n, model.verts[static_cast<std::size_t>(idx)]));
    return json{{"kind", kind == WWKind::Wheel ? "wheel" : "whirl"},
                {"n", n},
                {"case", cert.case_label},
                {"vertices", cert.cover.paths[0].size()},
                {"path", path},
                {"search_log", cert.log},
                {"nodes_expanded", cert.nodes}};
}

}  // namespace cobase
