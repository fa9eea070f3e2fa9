#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "pattern_algebra.hpp"
#include "species.hpp"

namespace phc {

// {"species":"per","terms":[{"object":"321","coeff":3}, ...]}, terms sorted
// by (size, word).
template <Species S>
nlohmann::ordered_json to_json(const PatternExpr<S>& x) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [a, c] : x.terms()) terms.push_back({{"object", a.to_string()}, {"coeff", c}});
    return {{"species", std::string(S::tag)}, {"terms", std::move(terms)}};
}

template <Species S>
PatternExpr<S> pattern_expr_from_json(const nlohmann::ordered_json& j) {
    const std::string tag = j.at("species").get<std::string>();
    if (tag != S::tag) throw std::invalid_argument("species mismatch: expected " + std::string(S::tag) + ", got " + tag);
    PatternExpr<S> x;
    for (const auto& t : j.at("terms")) x.add(S::parse(t.at("object").get<std::string>()), t.at("coeff").get<Coeff>());
    return x;
}

template <Species S>
nlohmann::ordered_json coproduct_to_json(const S& a) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& [l, r] : coproduct(a)) pairs.push_back({{"left", l.to_string()}, {"right", r.to_string()}});
    return {{"species", std::string(S::tag)}, {"object", a.to_string()}, {"pairs", std::move(pairs)}};
}

} // namespace phc
