#include "cantorval/json_io.hpp"

#include <stdexcept>

namespace cantorval {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
    }
    return *it;
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

}  // namespace

json to_json(const Rational& value) { return to_fraction_string(value); }

json to_json(const Interval& value) {
    return json::array({to_fraction_string(value.lo), to_fraction_string(value.hi)});
}

json to_json(const IntervalSet& value) {
    json parts = json::array();
    for (const Interval& part : value.intervals()) parts.push_back(to_json(part));
    return json{{"intervals", std::move(parts)}};
}

json to_json(const MultigeometricSeries& value) {
    json coeffs = json::array();
    for (const Rational& k : value.coeffs()) coeffs.push_back(to_fraction_string(k));
    return json{{"coeffs", std::move(coeffs)}, {"ratio", to_fraction_string(value.ratio())}};
}

json to_json(const KakeyaVerdict& value) {
    return json{{"kind", to_string(value.kind)},
                {"witness_transient", value.witness_transient},
                {"witness_residues_mod_m", value.witness_residues_mod_m}};
}

json to_json(const Similarity& value) {
    return json{{"ratio", to_fraction_string(value.ratio)},
                {"shift", to_fraction_string(value.shift)}};
}

json to_json(const Ifs& value) {
    json maps = json::array();
    for (const Similarity& map : value.maps()) maps.push_back(to_json(map));
    return json{{"maps", std::move(maps)}};
}

json to_json(const DigitWord& value) {
    return json{{"digits", value.digits},
                {"alphabet", value.alphabet == DigitAlphabet::Full ? "full" : "restricted"},
                {"l", value.l}};
}

json to_json(const GridCount& value) {
    return json{{"depth", value.depth}, {"count", value.count}};
}

Rational rational_from_json(const json& j) {
    return parse_rational(require_string(j, "rational"));
}

Interval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("interval: expected a two-element array");
    }
    return Interval(rational_from_json(j[0]), rational_from_json(j[1]));
}

IntervalSet interval_set_from_json(const json& j) {
    const json& parts = require_field(j, "intervals", "interval set");
    if (!parts.is_array()) throw std::invalid_argument("interval set: 'intervals' must be an array");
    std::vector<Interval> raw;
    raw.reserve(parts.size());
    for (const json& p : parts) raw.push_back(interval_from_json(p));
    return normalize(std::move(raw));
}

MultigeometricSeries series_from_json(const json& j) {
    const json& coeffs = require_field(j, "coeffs", "series");
    if (!coeffs.is_array()) throw std::invalid_argument("series: 'coeffs' must be an array");
    std::vector<Rational> k;
    k.reserve(coeffs.size());
    for (const json& c : coeffs) k.push_back(rational_from_json(c));
    return MultigeometricSeries(std::move(k), rational_from_json(require_field(j, "ratio", "series")));
}

KakeyaVerdict verdict_from_json(const json& j) {
    KakeyaVerdict v;
    const std::string kind = require_string(require_field(j, "kind", "verdict"), "verdict kind");
    if (kind == "FiniteUnionOfIntervals")
        v.kind = SubsumTopology::FiniteUnionOfIntervals;
    else if (kind == "CantorSet")
        v.kind = SubsumTopology::CantorSet;
    else if (kind == "NotKakeya")
        v.kind = SubsumTopology::NotKakeya;
    else
        throw std::invalid_argument("verdict: unknown kind '" + kind + "'");
    v.witness_transient =
        require_field(j, "witness_transient", "verdict").get<std::vector<std::size_t>>();
    v.witness_residues_mod_m =
        require_field(j, "witness_residues_mod_m", "verdict").get<std::vector<std::size_t>>();
    return v;
}

Ifs ifs_from_json(const json& j) {
    const json& maps = require_field(j, "maps", "ifs");
    if (!maps.is_array()) throw std::invalid_argument("ifs: 'maps' must be an array");
    std::vector<Similarity> out;
    out.reserve(maps.size());
    for (const json& m : maps) {
        out.emplace_back(rational_from_json(require_field(m, "ratio", "ifs map")),
                         rational_from_json(require_field(m, "shift", "ifs map")));
    }
    return Ifs(std::move(out));
}

DigitWord digit_word_from_json(const json& j) {
    DigitWord w;
    w.digits = require_field(j, "digits", "digit word").get<std::vector<unsigned>>();
    const std::string alphabet =
        require_string(require_field(j, "alphabet", "digit word"), "digit word alphabet");
    if (alphabet == "full")
        w.alphabet = DigitAlphabet::Full;
    else if (alphabet == "restricted")
        w.alphabet = DigitAlphabet::Restricted;
    else
        throw std::invalid_argument("digit word: unknown alphabet '" + alphabet + "'");
    w.l = require_field(j, "l", "digit word").get<unsigned>();
    return w;
}

}  // namespace cantorval
