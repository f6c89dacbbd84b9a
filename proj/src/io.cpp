#include "melonic/io.hpp"

#include <stdexcept>

namespace melonic {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json to_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return Json{{"basis", std::string(basis_name(p.basis()))}, {"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const Json& j) {
    const Json& b = field(j, "basis");
    if (!b.is_string()) bad("basis must be a string");
    const Basis basis = parse_basis(b.get<std::string>());
    const Json& cs = field(j, "coeffs");
    if (!cs.is_array()) bad("coeffs must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& c : cs) {
        if (c.is_string()) {
            const auto s = c.get<std::string>();
            const std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos)
                bad("coefficient \"" + s + "\" is not a decimal integer");
            coeffs.emplace_back(s[0] == '+' ? s.substr(1) : s);
        } else if (c.is_number_integer()) {
            coeffs.emplace_back(c.get<long long>());
        } else {
            bad("coefficients must be decimal strings");
        }
    }
    return IntPoly(basis, std::move(coeffs));
}

Json to_json(const GrothendieckClass& u) {
    Json j = to_json(u.poly);
    j["edges"] = u.edges;
    return j;
}

GrothendieckClass class_from_json(const Json& j) {
    GrothendieckClass u;
    u.poly = change_basis(poly_from_json(j), Basis::T);
    u.edges = as_int(field(j, "edges"), "edges");
    return u;
}

Json to_json(const MelonicConstruction& c) {
    Json stages = Json::array();
    for (const auto& s : c.stages) stages.push_back(Json{{"banana", s.banana}, {"parent", s.parent}, {"slot", s.slot}});
    return Json{{"stages", std::move(stages)}};
}

MelonicConstruction construction_from_json(const Json& j) {
    const Json& st = field(j, "stages");
    if (!st.is_array()) bad("stages must be an array");
    MelonicConstruction c;
    for (const auto& s : st) {
        Stage stage;
        const Json& b = field(s, "banana");
        if (!b.is_array()) bad("banana must be an array");
        for (const auto& a : b) stage.banana.push_back(as_int(a, "banana entry"));
        stage.parent = as_int(field(s, "parent"), "parent");
        stage.slot = as_int(field(s, "slot"), "slot");
        c.stages.push_back(std::move(stage));
    }
    return c;
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    return Json{{"vertices", g.vertex_count}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    Graph g;
    g.vertex_count = as_int(field(j, "vertices"), "vertices");
    if (g.vertex_count < 1) bad("vertices must be positive");
    const Json& es = field(j, "edges");
    if (!es.is_array()) bad("edges must be an array");
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2) bad("each edge must be a pair");
        const int u = as_int(e[0], "endpoint"), v = as_int(e[1], "endpoint");
        if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) bad("endpoint out of range");
        g.edges.emplace_back(u, v);
    }
    return g;
}

}  // namespace melonic
