#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isobaric/lattice.hpp"
#include "isobaric/solver.hpp"
#include "isobaric/strings.hpp"
#include "isobaric/weights.hpp"

namespace isobaric {

using nlohmann::json;

// Rationals travel as lowest-terms strings ("3", "-1/2"); plain JSON integers
// are accepted on input.

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

inline json to_json(const ExponentVector& a) { return json(a.entries()); }

inline ExponentVector exponent_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty exponent array");
    return ExponentVector(j.get<std::vector<int>>());
}

inline json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [alpha, c] : p.terms())
        terms.push_back({{"alpha", to_json(alpha)}, {"coeff", to_json(c)}});
    return {{"degree", p.degree()}, {"k", p.var_count()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("k") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs degree, k and terms");
    int degree = j.at("degree").get<int>();
    int k = j.at("k").get<int>();
    Polynomial::TermMap terms;
    for (const auto& t : j.at("terms")) {
        ExponentVector alpha = exponent_from_json(t.at("alpha"));
        Rational c = rational_from_json(t.at("coeff"));
        auto [it, inserted] = terms.emplace(std::move(alpha), std::move(c));
        if (!inserted) throw std::invalid_argument("polynomial JSON repeats an exponent vector");
    }
    return Polynomial(degree, k, std::move(terms));
}

inline json to_json(const WeightVector& w) {
    json entries = json::array();
    for (const auto& e : w.entries()) entries.push_back(to_json(e));
    return entries;
}

inline WeightVector weights_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight vector JSON must be an array");
    std::vector<Rational> e;
    for (const auto& x : j) e.push_back(rational_from_json(x));
    return WeightVector(std::move(e));
}

inline json to_json(const NamedWeight& w) {
    json tag;
    switch (w.tag) {
        case NamedWeight::Tag::unit: tag = "unit"; break;
        case NamedWeight::Tag::natural: tag = "natural"; break;
        case NamedWeight::Tag::hook: tag = {{"hook", w.hook_r}}; break;
        case NamedWeight::Tag::custom: tag = "custom"; break;
    }
    return {{"tag", std::move(tag)}, {"entries", to_json(w.weights)}};
}

inline NamedWeight named_weight_from_json(const json& j) {
    WeightVector entries = weights_from_json(j.at("entries"));
    const json& tag = j.at("tag");
    if (tag.is_object() && tag.contains("hook"))
        return {NamedWeight::Tag::hook, tag.at("hook").get<int>(), std::move(entries)};
    std::string name = tag.get<std::string>();
    if (name == "unit") return {NamedWeight::Tag::unit, 0, std::move(entries)};
    if (name == "natural") return {NamedWeight::Tag::natural, 0, std::move(entries)};
    if (name == "custom") return {NamedWeight::Tag::custom, 0, std::move(entries)};
    throw std::invalid_argument("unknown weight tag: " + name);
}

inline json to_json(const OperatorSpec& spec) {
    json a = json::array();
    for (const auto& x : spec.a) a.push_back(to_json(x));
    return {{"a", std::move(a)}, {"m", to_json(spec.m)}};
}

inline OperatorSpec operator_spec_from_json(const json& j) {
    OperatorSpec spec;
    for (const auto& x : j.at("a")) spec.a.push_back(rational_from_json(x));
    spec.m = rational_from_json(j.at("m"));
    return spec;
}

inline json to_json(const WeightedString& ws) {
    json elements = json::array();
    for (std::size_t i = 0; i < ws.family.elements.size(); ++i)
        elements.push_back(
            {{"alpha", to_json(ws.family.elements[i])}, {"coeff", to_json(ws.coeffs[i])}});
    return {{"generator", to_json(ws.family.generator)}, {"elements", std::move(elements)}};
}

inline WeightedString weighted_string_from_json(const json& j) {
    WeightedString ws{expand_string(exponent_from_json(j.at("generator"))), {}};
    const json& elements = j.at("elements");
    if (elements.size() != ws.family.elements.size())
        throw std::invalid_argument("weighted string JSON has the wrong element count");
    std::size_t i = 0;
    for (const auto& e : elements) {
        if (exponent_from_json(e.at("alpha")) != ws.family.elements[i])
            throw std::invalid_argument("weighted string JSON elements do not match the string");
        ws.coeffs.push_back(rational_from_json(e.at("coeff")));
        ++i;
    }
    return ws;
}

inline json to_json(const LatticeGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes) nodes.push_back(to_json(n));
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({to_json(a), to_json(b)});
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

inline json to_json(const DiffLattice& lat) {
    json j = to_json(lat.graph);
    j["root"] = to_json(lat.root);
    return j;
}

inline json to_json(const KernelReport& rep) {
    json basis = json::array();
    for (const auto& w : rep.basis) basis.push_back(to_json(w));
    return {{"spec", to_json(rep.spec)},    {"nullspace", std::move(basis)},
            {"class", to_string(rep.cls)},  {"N", rep.N},
            {"k", rep.k},                   {"unconstrained", rep.unconstrained}};
}

}  // namespace isobaric
