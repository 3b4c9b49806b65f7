// JSON (de)serialization for certificates, bases and Betti tables. Rationals
// travel as "p/q" strings, bit-exact.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "symideal/certificate.hpp"
#include "symideal/groebner.hpp"
#include "symideal/poly_text.hpp"
#include "symideal/resolution.hpp"

namespace symideal {

using nlohmann::json;

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["variables"] = c.target.variables().names();
    j["target"] = c.target.to_text();
    j["pairs"] = json::array();
    for (const auto& [generator, cofactor] : c.pairs)
        j["pairs"].push_back({{"generator", generator.to_text()}, {"cofactor", cofactor.to_text()}});
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    VariableSet vars(j.at("variables").get<std::vector<std::string>>());
    Certificate c;
    c.target = parse_polynomial(j.at("target").get<std::string>(), vars);
    for (const auto& pair : j.at("pairs"))
        c.pairs.emplace_back(parse_polynomial(pair.at("generator").get<std::string>(), vars),
                             parse_polynomial(pair.at("cofactor").get<std::string>(), vars));
    return c;
}

inline json basis_to_json(const GroebnerBasis& g, const VariableSet& vars) {
    json j;
    j["variables"] = vars.names();
    j["order"] = g.order.to_string();
    j["reduced"] = g.reduced;
    j["elements"] = json::array();
    for (const auto& p : g.elements) j["elements"].push_back(p.to_text());
    return j;
}

inline GroebnerBasis basis_from_json(const json& j) {
    VariableSet vars(j.at("variables").get<std::vector<std::string>>());
    GroebnerBasis g;
    g.order = MonomialOrder::from_string(j.at("order").get<std::string>());
    g.reduced = j.value("reduced", false);
    for (const auto& e : j.at("elements"))
        g.elements.push_back(parse_polynomial(e.get<std::string>(), vars, g.order));
    return g;
}

inline json generators_to_json(const std::vector<Polynomial>& gens, const VariableSet& vars) {
    json j;
    j["variables"] = vars.names();
    j["generators"] = json::array();
    for (const auto& g : gens) j["generators"].push_back(g.to_text());
    return j;
}

inline Ideal ideal_from_json(const json& j) {
    VariableSet vars(j.at("variables").get<std::vector<std::string>>());
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(parse_polynomial(g.get<std::string>(), vars));
    return Ideal(vars, std::move(gens));
}

inline json betti_to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [key, value] : t.entries)
        entries.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    return json{{"entries", entries}};
}

inline BettiTable betti_from_json(const json& j) {
    BettiTable t;
    for (const auto& e : j.at("entries"))
        t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("value").get<long long>();
    return t;
}

}  // namespace symideal
