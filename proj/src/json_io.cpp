#include "tcc/json_io.hpp"

namespace tcc {

namespace {
const Int k53 = Int(1) << 53;
}

json int_json(const Int& v) {
    if (v < k53 && v > -k53) return json(v.get_si());
    return json(v.get_str());
}

Int parse_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw bad_input("not a decimal integer string: " + j.dump());
        }
    }
    throw bad_input("expected an integer (number or decimal string), got " + j.dump());
}

json intvec_json(const VecZ& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

VecZ parse_intvec(const json& j) {
    if (!j.is_array()) throw bad_input("expected an array of integers, got " + j.dump());
    VecZ v;
    for (const auto& e : j) v.push_back(parse_int(e));
    return v;
}

json rat_json(const Rat& v) {
    if (is_integer(v)) return int_json(Int(v.get_num()));
    return json(to_string(v));
}

ParsedInput parse_input_json(const json& j) {
    ParsedInput out;
    if (!j.is_object()) throw bad_input("input must be a JSON object");
    if (j.contains("vertices")) {
        if (!j.contains("dim")) throw bad_input("diagram input needs a \"dim\" field");
        long dim = parse_int(j.at("dim")).get_si();
        std::vector<VecZ> pts;
        for (const auto& row : j.at("vertices")) {
            VecZ p = parse_intvec(row);
            if (static_cast<long>(p.size()) != dim)
                throw bad_input("vertex " + row.dump() + " does not have dim = " + std::to_string(dim) +
                                " coordinates");
            pts.push_back(std::move(p));
        }
        out.diagram_points = std::move(pts);
        return out;
    }
    if (j.contains("normals")) {
        std::vector<VecZ> ns;
        for (const auto& row : j.at("normals")) ns.push_back(parse_intvec(row));
        out.cone_normals = std::move(ns);
        return out;
    }
    throw bad_input("input must contain either \"vertices\" (diagram) or \"normals\" (cone)");
}

json diagram_json(const ToricDiagram& d) {
    json j;
    j["dim"] = d.dim;
    json verts = json::array();
    for (const auto& v : d.vertices) verts.push_back(intvec_json(v));
    j["vertices"] = verts;
    json facets = json::array();
    for (const auto& f : d.facets) {
        json fj;
        fj["vertices"] = f.verts;
        fj["normal"] = intvec_json(f.normal);
        fj["offset"] = int_json(f.offset);
        facets.push_back(fj);
    }
    j["facets"] = facets;
    return j;
}

json cone_json(const MomentCone& c) {
    json j;
    json ns = json::array();
    for (const auto& nu : c.normals) ns.push_back(intvec_json(nu));
    j["normals"] = ns;
    j["edges"] = c.edges;
    if (c.gorenstein) j["gorenstein_certificate"] = intvec_json(*c.gorenstein);
    return j;
}

json betti_json(const BettiTable& t) {
    json j;
    j["degree_cap"] = t.degree_cap;
    j["pi1_order"] = int_json(t.pi1_order);
    json total = json::object();
    for (const auto& [deg, cnt] : t.total) total[deg.get_str()] = cnt;
    j["total"] = total;
    json per_class = json::array();
    for (const auto& [cls, m] : t.per_class) {
        json cj;
        cj["class"] = int_json(cls);
        json counts = json::object();
        for (const auto& [deg, cnt] : m) counts[deg.get_str()] = cnt;
        cj["counts"] = counts;
        per_class.push_back(cj);
    }
    j["per_class"] = per_class;
    j["divergent_edges"] = t.divergent_edges;
    return j;
}

json lens_form_json(const LensNormalForm& f) {
    json j;
    j["n"] = f.n;
    j["p"] = int_json(f.p);
    j["alpha_bar"] = intvec_json(f.alpha_bar);
    j["alpha0"] = int_json(f.alpha0);
    j["a_n"] = int_json(f.a_n);
    j["weights"] = intvec_json(f.weights);
    j["rebuilt_weights"] = intvec_json(f.rebuilt_weights());
    return j;
}

}  // namespace tcc
