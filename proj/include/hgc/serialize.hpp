#pragma once

#include <string>

#include <json.hpp>

#include "hgc/classify.hpp"
#include "hgc/params.hpp"
#include "hgc/series.hpp"
#include "hgc/suites.hpp"

namespace hgc {

// insertion order is kept, so documents come out field-for-field identical
using Json = nlohmann::ordered_json;

Json to_json(cd v);  // [re, im]
Json to_json(const PolyC& p);
Json to_json(const EquationParams& p);
Json to_json(const EvalResult& r);
Json to_json(const NormalFormReport& r);
Json to_json(const Check& c);
Json to_json(const SuiteResult& s);

// Like Json::dump, but every floating value is printed with %.15e and
// non-finite values become the strings "inf", "-inf", "nan".
std::string dump(const Json& j, int indent = 2);

// %.15e
std::string fmt(double v);

} // namespace hgc
