#include "oscriesz/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oscriesz {

json RunConfig::to_json() const {
  return json{{"suite", suite},   {"alpha", alpha},
              {"a", a},           {"jmax", jmax},
              {"p", p},           {"delta", delta},
              {"n", n},           {"seed", seed},
              {"grid_scale", grid_scale}, {"tol_ratio", tol_ratio},
              {"format", format}};
}

CaseRecord make_case(json inputs, double observed, double bound) {
  CaseRecord c;
  c.inputs = std::move(inputs);
  c.observed = observed;
  c.bound_or_oracle = bound;
  c.ratio = (bound != 0.0) ? observed / bound : (observed == 0.0 ? 0.0 : 1e300);
  c.pass = std::isfinite(c.ratio) && c.ratio <= 1.0;
  return c;
}

void Report::finalize() {
  pass = true;
  worst_ratio = 0.0;
  for (const CaseRecord& c : cases) {
    pass = pass && c.pass;
    if (std::isfinite(c.ratio)) worst_ratio = std::fmax(worst_ratio, c.ratio);
  }
}

json Report::to_json() const {
  json jcases = json::array();
  for (const CaseRecord& c : cases)
    jcases.push_back(json{{"inputs", c.inputs},
                          {"observed", c.observed},
                          {"bound_or_oracle", c.bound_or_oracle},
                          {"ratio", c.ratio},
                          {"pass", c.pass}});
  return json{{"suite", config.suite},
              {"params", config.to_json()},
              {"cases", jcases},
              {"summary", json{{"pass", pass},
                               {"worst_ratio", worst_ratio},
                               {"n_cases", cases.size()}}}};
}

std::string Report::to_json_string() const { return to_json().dump(2) + "\n"; }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string inputs_flat(const json& inputs) {
  std::ostringstream os;
  bool first = true;
  for (auto it = inputs.begin(); it != inputs.end(); ++it) {
    if (!first) os << ';';
    first = false;
    os << it.key() << '=' << it.value().dump();
  }
  return os.str();
}

}  // namespace

std::string Report::to_csv_string() const {
  std::ostringstream os;
  os << "case,inputs,observed,bound_or_oracle,ratio,pass\n";
  std::size_t i = 0;
  for (const CaseRecord& c : cases) {
    os << i++ << ',' << csv_escape(inputs_flat(c.inputs)) << ','
       << json(c.observed).dump() << ',' << json(c.bound_or_oracle).dump()
       << ',' << json(c.ratio).dump() << ',' << (c.pass ? "true" : "false")
       << '\n';
  }
  return os.str();
}

}  // namespace oscriesz
