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

#include "subsum/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <tuple>

#include "subsum/engine.hpp"
#include "subsum/error.hpp"
#include "subsum/oracle.hpp"

namespace subsum::verifier {

namespace {

constexpr std::int64_t kSaturated = std::int64_t{1} << 62;

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(kSaturated)) return kSaturated;
  }
  return static_cast<std::int64_t>(c + 0.5L);
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::vector<std::int64_t> alphas_for(const AlphaPolicy& policy,
                                     std::int64_t len) {
  std::vector<std::int64_t> out;
  if (policy.all) {
    for (std::int64_t a = 0; a <= len; ++a) out.push_back(a);
  } else {
    for (auto a : policy.values) {
      if (a >= 0 && a <= len) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::string describe_alphas(const AlphaPolicy& policy) {
  if (policy.all) return "all";
  std::string s;
  for (auto a : policy.values) s += (s.empty() ? "" : ",") + std::to_string(a);
  return s;
}

void validate(const SweepOptions& o, bool sequences) {
  if (o.max_abs < 0) throw Error(ErrorCode::kInvalidArgument, "max_abs must be >= 0");
  if (o.k_min < 1 || o.k_max < o.k_min) {
    throw Error(ErrorCode::kInvalidArgument, "k range must satisfy 1 <= k_min <= k_max");
  }
  if (sequences && (o.r_min < 1 || o.r_max < o.r_min)) {
    throw Error(ErrorCode::kInvalidArgument, "r range must satisfy 1 <= r_min <= r_max");
  }
  if (o.workers < 1) throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
}

// Everything one instance contributes to a campaign.
struct Outcome {
  std::vector<VerificationRecord> records;  // instance field left empty
  std::int64_t oracle_mismatches = 0;
};

Outcome evaluate(const Instance& instance, const std::vector<std::int64_t>& alphas,
                 bool use_oracle) {
  Outcome out;
  const auto all = engine::sigma_all_of(instance, SumMode::kAtLeast);
  const auto* seq = std::get_if<RepSequence>(&instance);
  const bool oracle_ok =
      use_oracle && (seq ? oracle::seq_callable(*seq)
                         : oracle::set_callable(std::get<IntegerSet>(instance)));
  for (auto alpha : alphas) {
    VerificationRecord rec;
    rec.r = multiplicity_of(instance);
    rec.alpha = alpha;
    rec.sigma_size = all[alpha].size();
    if (oracle_ok) {
      const SumSet truth =
          seq ? oracle::oracle_sigma_seq(*seq, alpha, SumMode::kAtLeast)
              : oracle::oracle_sigma_set(std::get<IntegerSet>(instance), alpha,
                                         SumMode::kAtLeast);
      rec.oracle_checked = true;
      if (truth != all[alpha]) ++out.oracle_mismatches;
    }
    for (auto& b : bounds::applicable_bounds(instance, alpha)) {
      BoundCheck check{b, rec.sigma_size == b.value, b.value > rec.sigma_size};
      rec.violation = rec.violation || check.violated;
      rec.bounds.push_back(std::move(check));
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

template <typename Work>
void run_parallel(std::size_t count, int workers, Work&& work) {
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (n == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          work(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

CampaignReport run_campaign(const SweepOptions& o, bool sequences) {
  validate(o, sequences);
  const std::int64_t cost = sweep_cost(o, sequences);
  if (cost > o.budget) {
    throw Error(ErrorCode::kBudget,
                "sweep needs " + std::to_string(cost) +
                    " instance-alpha pairs, budget is " +
                    std::to_string(o.budget));
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<Instance> instances;
  for (int k = o.k_min; k <= o.k_max; ++k) {
    for (int r = sequences ? o.r_min : 1; r <= (sequences ? o.r_max : 1); ++r) {
      for (auto& elems : k_subsets(-o.max_abs, o.max_abs, k)) {
        auto set = IntegerSet::from_elements(std::move(elems));
        if (sequences) {
          instances.emplace_back(RepSequence(std::move(set), r));
        } else {
          instances.emplace_back(std::move(set));
        }
      }
    }
  }

  std::vector<Outcome> outcomes(instances.size());
  run_parallel(instances.size(), o.workers, [&](std::size_t i) {
    const auto& inst = instances[i];
    const std::int64_t len =
        std::int64_t{multiplicity_of(inst)} * base_of(inst).size();
    outcomes[i] = evaluate(inst, alphas_for(o.alphas, len), o.oracle);
  });

  // Merge in instance order so the report does not depend on scheduling.
  CampaignReport rep;
  rep.universe = {sequences ? "sequences" : "sets", o.max_abs, o.k_min, o.k_max,
                  sequences ? o.r_min : 1, sequences ? o.r_max : 1,
                  describe_alphas(o.alphas), o.oracle, 0};
  for (std::string id : {"T2_1", "C2_2", "T2_3", "C2_4", "C2_5"}) {
    if (!sequences) rep.tight_by_theorem[id] = 0;
  }
  for (std::string id : {"T3_1", "T3_2", "C3_3", "C3_4"}) {
    if (sequences) rep.tight_by_theorem[id] = 0;
  }
  std::map<std::tuple<int, int, std::int64_t>, MinimumCell> minima;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const int k = base_of(inst).size();
    const std::string literal = format_set(base_of(inst));
    ++rep.counts.instances;
    rep.counts.oracle_mismatches += outcomes[i].oracle_mismatches;
    for (auto& rec : outcomes[i].records) {
      ++rep.counts.pairs;
      if (rec.oracle_checked) ++rep.counts.oracle_checks;
      for (const auto& c : rec.bounds) {
        ++rep.counts.checks;
        if (c.violated) ++rep.counts.violations;
        if (c.tight) ++rep.tight_by_theorem[bounds::theorem_string(c.bound.theorem)];
      }
      auto [it, fresh] = minima.try_emplace({k, rec.r, rec.alpha});
      MinimumCell& cell = it->second;
      if (fresh || rec.sigma_size < cell.size) {
        cell = {k, rec.r, rec.alpha, rec.sigma_size, {}};
      }
      if (rec.sigma_size == cell.size &&
          cell.witnesses.size() < kMaxWitnessesPerCell) {
        cell.witnesses.push_back(literal);
      }
      if (o.keep_records) {
        rec.instance = literal;
        rep.records.push_back(std::move(rec));
      }
    }
  }
  for (auto& [key, cell] : minima) rep.minima.push_back(std::move(cell));
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace

std::vector<std::vector<std::int64_t>> k_subsets(std::int64_t lo,
                                                 std::int64_t hi, int k) {
  std::vector<std::vector<std::int64_t>> out;
  const std::int64_t n = hi - lo + 1;
  if (k < 1 || k > n) return out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = lo + i;
  while (true) {
    out.push_back(cur);
    // Advance the rightmost position that still has room.
    int i = k - 1;
    while (i >= 0 && cur[i] == hi - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::int64_t sweep_cost(const SweepOptions& o, bool sequences) {
  std::int64_t total = 0;
  const std::int64_t universe = 2 * o.max_abs + 1;
  for (int k = o.k_min; k <= o.k_max; ++k) {
    const std::int64_t sets = binomial(universe, k);
    for (int r = sequences ? o.r_min : 1; r <= (sequences ? o.r_max : 1); ++r) {
      const auto per = static_cast<std::int64_t>(
          alphas_for(o.alphas, std::int64_t{r} * k).size());
      total = saturating_add(total, saturating_mul(sets, per));
    }
  }
  return total;
}

CampaignReport sweep_sets(const SweepOptions& options) {
  return run_campaign(options, false);
}

CampaignReport sweep_sequences(const SweepOptions& options) {
  return run_campaign(options, true);
}

EmpiricalMinimum empirical_minimum(int k, std::int64_t alpha,
                                   std::int64_t max_abs, ZeroPolicy policy,
                                   std::int64_t budget) {
  if (k < 1 || alpha < 0 || alpha > k) {
    throw Error(ErrorCode::kRange, "empirical_minimum needs 0 <= alpha <= k, k >= 1");
  }
  if (max_abs < 0) throw Error(ErrorCode::kInvalidArgument, "max_abs must be >= 0");
  const std::int64_t cost = binomial(2 * max_abs + 1, k);
  if (cost > budget) {
    throw Error(ErrorCode::kBudget, "empirical_minimum universe has " +
                                        std::to_string(cost) +
                                        " sets, budget is " +
                                        std::to_string(budget));
  }
  EmpiricalMinimum best;
  bool seen = false;
  for (auto& elems : k_subsets(-max_abs, max_abs, k)) {
    const bool has_zero = std::binary_search(elems.begin(), elems.end(), 0);
    if (policy == ZeroPolicy::kRequire && !has_zero) continue;
    if (policy == ZeroPolicy::kForbid && has_zero) continue;
    auto set = IntegerSet::from_elements(std::move(elems));
    const std::int64_t size = engine::sigma(set, alpha, SumMode::kAtLeast).size();
    if (!seen || size < best.size) {
      best = {size, 0, {}};
      seen = true;
    }
    if (size == best.size) {
      ++best.minimizers;
      if (best.witnesses.size() < kMaxWitnessesPerCell) {
        best.witnesses.push_back(std::move(set));
      }
    }
  }
  if (!seen) {
    throw Error(ErrorCode::kInvalidArgument,
                "no set in the universe matches the zero policy");
  }
  return best;
}

}  // namespace subsum::verifier
