#pragma once

#include "json.hpp"
#include "ks/bounds.hpp"
#include "ks/generators.hpp"
#include "ks/subord.hpp"

namespace ks {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);  // [re, im]
Json to_json(const PowerSeries& s);
Json to_json(const ClassMember& m);
Json to_json(const SubordinationVerdict& v);
Json to_json(const StankiewiczResult& r);

// Accepts [re, im], a number, or a complex literal string.
Complex complex_from_json(const Json& j);

}  // namespace ks
