#ifndef CANTORVAL_JSON_IO_HPP
#define CANTORVAL_JSON_IO_HPP

#include "cantorval/box_dimension.hpp"
#include "cantorval/family.hpp"
#include "cantorval/ifs.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/series.hpp"

#include <json.hpp>

namespace cantorval {

// Wire formats, shared by every module and the CLI:
//   Rational      "p/q" in lowest terms ("5/3", "-1/2", "0/1")
//   IntervalSet   {"intervals": [["p/q", "r/s"], ...]} in normalized order
//   series        {"coeffs": ["p/q", ...], "ratio": "p/q"}
//   verdict       {"kind": ..., "witness_transient": [...],
//                  "witness_residues_mod_m": [...]}
//   IFS           {"maps": [{"ratio": "p/q", "shift": "p/q"}, ...]}
//   digit word    {"digits": [...], "alphabet": "full"|"restricted", "l": n}
//   grid count    {"depth": n, "count": N}

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Interval& value);
nlohmann::json to_json(const IntervalSet& value);
nlohmann::json to_json(const MultigeometricSeries& value);
nlohmann::json to_json(const KakeyaVerdict& value);
nlohmann::json to_json(const Similarity& value);
nlohmann::json to_json(const Ifs& value);
nlohmann::json to_json(const DigitWord& value);
nlohmann::json to_json(const GridCount& value);

Rational rational_from_json(const nlohmann::json& j);
Interval interval_from_json(const nlohmann::json& j);
IntervalSet interval_set_from_json(const nlohmann::json& j);
MultigeometricSeries series_from_json(const nlohmann::json& j);
KakeyaVerdict verdict_from_json(const nlohmann::json& j);
Ifs ifs_from_json(const nlohmann::json& j);
DigitWord digit_word_from_json(const nlohmann::json& j);

}  // namespace cantorval

#endif
