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

#pragma once

#include <string>

#include "json.hpp"
#include "subsum/bounds.hpp"
#include "subsum/verifier.hpp"

// JSON and CSV serialization of campaign reports.
namespace subsum::report {

// {universe, counts:{instances, checks, violations, ...},
//  tight_by_theorem:{id:count}, minima:[{k, alpha, size, witnesses[]}],
//  elapsed_ms}
nlohmann::json to_json(const verifier::CampaignReport& report);
nlohmann::json to_json(const bounds::BoundResult& bound);

// Header "instance,r,alpha,size,theorem_id,case,bound,tight,violation" and
// one row per (record, bound); a record without bounds gets one row with
// the bound columns empty.
std::string to_csv(const verifier::CampaignReport& report);

}  // namespace subsum::report
