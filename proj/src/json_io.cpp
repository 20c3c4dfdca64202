#include "qaoa/json_io.hpp"

#include <map>
#include <vector>

#include <json.hpp>

namespace qaoa {

std::string model_to_json(const IsingModel& model) {
    nlohmann::json j;
    j["vertices"] = model.vertices();
    auto couplings = nlohmann::json::array();
    for (const auto& [key, value] : model.couplings())
        couplings.push_back({key.first, key.second, value});
    j["couplings"] = std::move(couplings);
    j["offset"] = model.offset();
    return j.dump();
}

IsingModel model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("couplings") ||
        !j.contains("offset"))
        throw ParseError("model JSON needs vertices, couplings and offset");

    std::vector<int> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer()) throw ParseError("vertex id must be an integer");
        vertices.push_back(v.get<int>());
    }
    std::map<VertexPair, double> couplings;
    for (const auto& triple : j["couplings"]) {
        if (!triple.is_array() || triple.size() != 3)
            throw ParseError("coupling entries must be [i, j, J] triples");
        couplings[make_pair_key(triple[0].get<int>(), triple[1].get<int>())] +=
            triple[2].get<double>();
    }
    try {
        return IsingModel(std::move(vertices), couplings,
                          j["offset"].get<double>());
    } catch (const InvalidModelError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace qaoa
