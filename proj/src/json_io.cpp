#include "poltan/json_io.hpp"

#include <set>
#include <stdexcept>

namespace poltan {

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json j;
    j["variables"] = ideal.universe.names;
    auto& gens = j["generators"] = nlohmann::json::array();
    for (const auto& g : ideal.generators) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : g.entries()) mono.push_back({v, e});
        gens.push_back(std::move(mono));
    }
    return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw std::invalid_argument("ideal JSON needs 'variables' and 'generators'");

    Universe universe;
    for (const auto& name : j.at("variables")) {
        if (!name.is_string()) throw std::invalid_argument("variable names must be strings");
        universe.names.push_back(name.get<std::string>());
    }
    std::set<std::string> distinct(universe.names.begin(), universe.names.end());
    if (static_cast<int>(distinct.size()) != universe.size())
        throw std::invalid_argument("variable names must be distinct");

    std::vector<Monomial> gens;
    for (const auto& mono : j.at("generators")) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& entry : mono) {
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("monomial entries are [variable, exponent] pairs");
            pairs.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>());
        }
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return minimalize(std::move(gens), std::move(universe));
}

}  // namespace poltan
