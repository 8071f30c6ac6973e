#pragma once

#include "bsurf/bounds.hpp"
#include "bsurf/euler.hpp"
#include "bsurf/growth.hpp"
#include "bsurf/io.hpp"

namespace bsurf {

// {"name", "sheets": [sector...], "gluings": [[sheet, side, sheet, side]...],
//  "boundary": [edge...], "corners": {"1": n, "2": n, "3": n}}
DiscInstance instance_from_json(const Json& doc);
Json instance_to_json(const DiscInstance& a);
DiscInstance load_instance(const std::string& path);

// {"crossings": [{"sector": s, "sign": 1 | -1}, ...]}
std::vector<LoopCrossing> loop_from_json(const Json& doc);
std::vector<LoopCrossing> load_loop(const std::string& path);

// {"r_max": n, "s0": n, "s1": n}; integers or decimal strings, missing keys keep defaults
CeilingParams params_from_json(const Json& doc, CeilingParams defaults);
Json params_to_json(const CeilingParams& p);

// "1,2,3"
Weights parse_weights(const std::string& text);
Json weights_json(const Weights& w);
Weights weights_from_json(const Json& v, const std::string& where);

Json integer_json(const Integer& z);
Integer integer_from_json(const Json& v, const std::string& where);

Json iso_to_json(const IsoCertificate& c);
IsoCertificate iso_from_json(const Json& payload);

} // namespace bsurf
