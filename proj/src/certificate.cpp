#include "packcolor/certificate.hpp"

#include <stdexcept>

#include "packcolor/subdivision.hpp"

namespace packcolor {

nlohmann::json certificate_json(const Graph& g, const PackingColoring& c) {
    nlohmann::json doc;
    doc["schedule"] = c.schedule().values();
    doc["classes"] = c.classes();
    doc["valid"] = !verify(g, c).has_value();
    return doc;
}

nlohmann::json lifted_certificate_json(const SubdivisionMap& m, const PackingColoring& c) {
    auto doc = certificate_json(m.subdivided(), c);
    auto lineage = nlohmann::json::array();
    for (std::size_t s = 0; s < m.subdivided().order(); ++s) {
        if (auto e = m.edge_of(static_cast<Vertex>(s))) {
            lineage.push_back({{"midpoint", {e->u, e->v}}});
        } else {
            lineage.push_back({{"original", s}});
        }
    }
    doc["lineage"] = std::move(lineage);
    return doc;
}

PackingColoring coloring_from_json(const nlohmann::json& doc, std::size_t order) {
    if (!doc.is_object() || !doc.contains("schedule") || !doc.contains("classes")) {
        throw std::invalid_argument("certificate must be an object with \"schedule\" and \"classes\"");
    }
    const auto& sched = doc.at("schedule");
    const auto& classes = doc.at("classes");
    if (!sched.is_array() || !classes.is_array()) {
        throw std::invalid_argument("certificate \"schedule\" and \"classes\" must be arrays");
    }
    std::vector<int> values;
    for (const auto& s : sched) {
        if (!s.is_number_integer()) throw std::invalid_argument("schedule entries must be integers");
        values.push_back(s.get<int>());
    }
    std::vector<std::vector<Vertex>> members;
    for (const auto& cls : classes) {
        if (!cls.is_array()) throw std::invalid_argument("each class must be an array");
        auto& out = members.emplace_back();
        for (const auto& v : cls) {
            if (!v.is_number_integer()) throw std::invalid_argument("class members must be integers");
            out.push_back(v.get<Vertex>());
        }
    }
    return PackingColoring::from_classes(PackingSchedule(std::move(values)), order, members);
}

}  // namespace packcolor
