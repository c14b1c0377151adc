#include "powsem/json_io.hpp"

namespace powsem {

using nlohmann::json;

json to_json(const NaturalSet& x) { return json(x.elements()); }

json to_json(const NumericalSemigroup& s) {
    json j;
    if (s.generators()) {
        j["generators"] = *s.generators();
        j["monoid"] = s.contains_zero();
    } else {
        j["gaps"] = s.gaps();
        j["contains_zero"] = s.contains_zero();
    }
    return j;
}

json to_json(const WindowCarrier& w) {
    return json{{"semigroup", to_json(w.semigroup())},
                {"bound", w.bound()},
                {"reduced", w.reduced()},
                {"size", w.size()}};
}

json to_json(const MeasuredParams& p) {
    return json{{"s", p.s}, {"t", p.t}, {"a", p.a}, {"b", p.b}};
}

json to_json(const SearchReport& r) {
    json j;
    j["semigroup"] = to_json(r.semigroup);
    j["bound"] = r.bound;
    j["reduced"] = r.reduced;
    j["mode"] = r.mode;
    j["filters"] = r.filters;
    json survivors = json::array();
    for (const auto& s : r.survivors) {
        json table = json::array();
        for (const auto& [src, dst] : s.table) {
            table.push_back(json::array({to_json(src), to_json(dst)}));
        }
        survivors.push_back(json{{"class", s.classification}, {"table", std::move(table)}});
    }
    j["survivors"] = std::move(survivors);
    j["constraints_checked"] = r.constraints_checked;
    j["nodes_explored"] = r.nodes_explored;
    j["branches_rejected"] = r.branches_rejected;
    j["rejection_witnesses"] = r.rejection_witnesses;
    if (r.note) j["note"] = *r.note;
    return j;
}

json to_json(const ObstructionWitness& w) {
    return json{{"m", w.m},
                {"set", to_json(w.set)},
                {"sigma_image", to_json(w.sigma_image)},
                {"missing", w.missing}};
}

json to_json(const PropertyResult& p) {
    json j{{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}};
    if (!p.passed) j["witness"] = p.witness;
    return j;
}

json to_json(const PropertySuiteReport& r) {
    json props = json::array();
    for (const auto& p : r.properties) props.push_back(to_json(p));
    return json{{"search", to_json(r.search)},
                {"properties", std::move(props)},
                {"all_passed", r.all_passed}};
}

} // namespace powsem
