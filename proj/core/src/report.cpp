#include "lapdom/report.hpp"

namespace lapdom {

nlohmann::json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_d();
}

void to_json(nlohmann::json& j, const GraphClass& cls) {
  j = {{"connected", cls.connected},   {"isolate_free", cls.isolate_free}, {"components", cls.components},
       {"cyclomatic", cls.cyclomatic}, {"is_tree", cls.is_tree},           {"is_forest", cls.is_forest},
       {"max_degree", cls.max_degree}};
}

void to_json(nlohmann::json& j, const Check& check) {
  j = nlohmann::json::object();
  j["name"] = check.name;
  if (check.skipped()) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["holds"] = nullptr;
    j["equality"] = nullptr;
    j["skipped_reason"] = *check.skipped_reason;
  } else {
    j["lhs"] = rational_json(check.lhs);
    j["rhs"] = rational_json(check.rhs);
    j["holds"] = check.holds;
    j["equality"] = check.equality;
    j["skipped_reason"] = nullptr;
  }
}

void to_json(nlohmann::json& j, const TheoremReport& report) {
  j = nlohmann::json::object();
  j["graph_id"] = report.graph_id;
  j["n"] = report.n;
  j["m"] = report.m;
  j["class"] = report.cls;
  j["checks"] = report.checks;
  j["all_pass"] = report.all_pass;
}

}  // namespace lapdom
