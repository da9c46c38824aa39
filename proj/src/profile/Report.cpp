#include "opa/profile/Report.h"

namespace opa::profile {

using nlohmann::json;

json toJson(const Violation& v, Engine engine) {
  json evidence = json::array();
  for (const auto& t : v.evidence) evidence.push_back(t.toNTriples());
  return {{"engine", engineName(engine)},
          {"rule", ruleName(v.rule)},
          {"focus", v.focus.toNTriples()},
          {"evidence", std::move(evidence)},
          {"message", v.message}};
}

json verdictReport(const std::string& source, const Verdict* direct, const Verdict* query,
                   const std::vector<std::string>& letters) {
  json violations = json::array();
  for (const Verdict* v : {direct, query}) {
    if (!v) continue;
    for (const auto& violation : v->violations) violations.push_back(toJson(violation, v->engine));
  }
  json out;
  out["source"] = source;
  out["member_direct"] = direct ? json(direct->member) : json(nullptr);
  out["member_query"] = query ? json(query->member) : json(nullptr);
  out["divergence"] = direct && query ? json(direct->member != query->member) : json(nullptr);
  out["violations"] = std::move(violations);
  out["letters"] = letters;
  return out;
}

}  // namespace opa::profile
