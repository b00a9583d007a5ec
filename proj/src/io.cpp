#include "spin4/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace spin4 {

using nlohmann::json;

json complex_to_json(const OrderedComplex& cx) {
    json verts = json::array();
    for (int v = 0; v < cx.num_vertices(); ++v)
        verts.push_back({{"id", v}, {"rank", cx.rank(v)}});
    json simps = json::object();
    for (int d = 1; d <= cx.dim(); ++d) {
        json list = json::array();
        for (const Simplex& s : cx.simplices(d)) {
            json tuple = json::array();
            for (int i = 0; i < s.size(); ++i) tuple.push_back(s[i]);
            list.push_back(std::move(tuple));
        }
        simps[std::to_string(d)] = std::move(list);
    }
    return {{"vertices", std::move(verts)}, {"simplices", std::move(simps)}};
}

std::unique_ptr<OrderedComplex> complex_from_json(const json& j) {
    auto cx = std::make_unique<OrderedComplex>();
    std::vector<std::pair<int, int>> verts;  // (id, rank)
    for (const auto& v : j.at("vertices"))
        verts.emplace_back(v.at("id").get<int>(), v.at("rank").get<int>());
    std::sort(verts.begin(), verts.end());
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].first != (int)i)
            throw std::invalid_argument("complex_from_json: vertex ids must be 0..n-1");
        cx->add_vertex(verts[i].second);
    }
    for (const auto& [key, list] : j.at("simplices").items()) {
        (void)key;
        for (const auto& tuple : list) {
            std::vector<std::int32_t> vs;
            for (const auto& x : tuple) vs.push_back(x.get<std::int32_t>());
            cx->add_simplex(std::span<const std::int32_t>(vs));
        }
    }
    cx->finalize();
    return cx;
}

namespace {

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::Z2: return "Z2";
        case Ring::Z: return "Z";
        case Ring::Zn: return "Zn";
        case Ring::QZ: return "QZ";
    }
    throw std::logic_error("ring_name: bad ring");
}

Ring ring_from_name(const std::string& s) {
    if (s == "Z2") return Ring::Z2;
    if (s == "Z") return Ring::Z;
    if (s == "Zn") return Ring::Zn;
    if (s == "QZ") return Ring::QZ;
    throw std::invalid_argument("ring_from_name: unknown ring " + s);
}

QZ qz_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("qz_from_string: expected num/den");
    return QZ(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json simplex_to_json(const Simplex& s) {
    json tuple = json::array();
    for (int i = 0; i < s.size(); ++i) tuple.push_back(s[i]);
    return tuple;
}

Simplex simplex_from_json(const json& tuple, const OrderedComplex& cx) {
    std::vector<std::int32_t> vs;
    for (const auto& x : tuple) vs.push_back(x.get<std::int32_t>());
    Simplex s = cx.canon(std::span<const std::int32_t>(vs));
    if (!cx.contains(s)) throw std::invalid_argument("cochain_from_json: unknown simplex");
    return s;
}

}  // namespace

json cochain_to_json(const Cochain& c) {
    json values = json::array();
    if (c.ring() == Ring::QZ) {
        // Sorted for canonical output.
        std::vector<std::pair<Simplex, QZ>> entries(c.qsupport().begin(), c.qsupport().end());
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [s, v] : entries)
            values.push_back({simplex_to_json(s), v.str()});
    } else {
        std::vector<std::pair<Simplex, long long>> entries(c.isupport().begin(),
                                                           c.isupport().end());
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [s, v] : entries)
            values.push_back({simplex_to_json(s), v});
    }
    json j = {{"degree", c.degree()}, {"ring", ring_name(c.ring())}, {"values", values}};
    if (c.ring() == Ring::Zn) j["modulus"] = c.modulus();
    return j;
}

Cochain cochain_from_json(const json& j, const OrderedComplex& cx) {
    Ring ring = ring_from_name(j.at("ring").get<std::string>());
    long long mod = ring == Ring::Zn ? j.at("modulus").get<long long>() : 0;
    Cochain c(&cx, j.at("degree").get<int>(), ring, mod);
    for (const auto& entry : j.at("values")) {
        Simplex s = simplex_from_json(entry.at(0), cx);
        if (ring == Ring::QZ) c.set(s, qz_from_string(entry.at(1).get<std::string>()));
        else c.set(s, entry.at(1).get<long long>());
    }
    return c;
}

json triple_to_json(const Triple& t) {
    return {{"kind", "triple"},
            {"w", cochain_to_json(t.w)},
            {"p", cochain_to_json(t.p)},
            {"a", cochain_to_json(t.a)}};
}

Triple triple_from_json(const json& j, const OrderedComplex& cx) {
    if (j.at("kind") != "triple") throw std::invalid_argument("triple_from_json: wrong kind");
    return {cochain_from_json(j.at("w"), cx), cochain_from_json(j.at("p"), cx),
            cochain_from_json(j.at("a"), cx)};
}

json relation_to_json(const RelationPair& r) {
    return {{"kind", "relation"},
            {"c", cochain_to_json(r.c)},
            {"r", cochain_to_json(r.r)}};
}

RelationPair relation_from_json(const json& j, const OrderedComplex& cx) {
    if (j.at("kind") != "relation")
        throw std::invalid_argument("relation_from_json: wrong kind");
    return {cochain_from_json(j.at("c"), cx), cochain_from_json(j.at("r"), cx)};
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_json_file: cannot open " + path);
    out << j.dump();
    if (!out) throw std::runtime_error("write_json_file: write failed for " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_json_file: cannot open " + path);
    return json::parse(in);
}

} // namespace spin4
