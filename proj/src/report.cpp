// Copyright 2026 The subsum Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subsum/report.hpp"

#include <sstream>

namespace subsum::report {

using nlohmann::json;

json to_json(const bounds::BoundResult& b) {
  json j{{"theorem_id", bounds::theorem_string(b.theorem)},
         {"case", bounds::case_string(b)},
         {"value", b.value}};
  j["params"] = {{"k", b.params.k}, {"n", b.params.n}, {"p", b.params.p},
                 {"r", b.params.r}, {"alpha", b.params.alpha}, {"m", b.params.m}};
  return j;
}

json to_json(const verifier::CampaignReport& rep) {
  const auto& u = rep.universe;
  json universe{{"kind", u.kind}};
  if (u.kind == "fp") {
    universe["p"] = u.prime;
  } else {
    universe["max_abs"] = u.max_abs;
    universe["k"] = {u.k_min, u.k_max};
    if (u.kind == "sequences") universe["r"] = {u.r_min, u.r_max};
    universe["alpha"] = u.alphas;
    universe["oracle"] = u.oracle;
  }

  json minima = json::array();
  for (const auto& cell : rep.minima) {
    json c{{"k", cell.k}};
    if (u.kind == "sequences") c["r"] = cell.r;
    c["alpha"] = cell.alpha;
    c["size"] = cell.size;
    c["witnesses"] = cell.witnesses;
    minima.push_back(std::move(c));
  }

  json tight = json::object();
  for (const auto& [id, n] : rep.tight_by_theorem) tight[id] = n;

  return json{
      {"universe", universe},
      {"counts",
       {{"instances", rep.counts.instances},
        {"pairs", rep.counts.pairs},
        {"checks", rep.counts.checks},
        {"violations", rep.counts.violations},
        {"oracle_checks", rep.counts.oracle_checks},
        {"oracle_mismatches", rep.counts.oracle_mismatches}}},
      {"tight_by_theorem", tight},
      {"minima", minima},
      {"elapsed_ms", static_cast<std::int64_t>(rep.elapsed_ms)},
  };
}

std::string to_csv(const verifier::CampaignReport& rep) {
  std::ostringstream os;
  os << "instance,r,alpha,size,theorem_id,case,bound,tight,violation\n";
  for (const auto& rec : rep.records) {
    // Literals contain commas, so they are quoted.
    const std::string prefix = "\"" + rec.instance + "\"," +
                               std::to_string(rec.r) + "," +
                               std::to_string(rec.alpha) + "," +
                               std::to_string(rec.sigma_size) + ",";
    if (rec.bounds.empty()) {
      os << prefix << ",,,," << (rec.violation ? 1 : 0) << "\n";
      continue;
    }
    for (const auto& c : rec.bounds) {
      os << prefix << bounds::theorem_string(c.bound.theorem) << ","
         << bounds::case_string(c.bound) << "," << c.bound.value << ","
         << (c.tight ? 1 : 0) << "," << (c.violated ? 1 : 0) << "\n";
    }
  }
  return os.str();
}

}  // namespace subsum::report
