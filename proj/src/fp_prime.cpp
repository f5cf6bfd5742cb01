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

#include "subsum/fp_prime.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <string>

#include "subsum/bounds.hpp"
#include "subsum/error.hpp"

namespace subsum::fp {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
}

// Bit-parallel walk over admissible subsets: one residue mask per subset
// size, rotated by the inserted residue.
class AdmissibleWalk {
 public:
  explicit AdmissibleWalk(int p)
      : p_(p), half_((p - 1) / 2), full_((std::uint64_t{1} << p) - 1) {}

  verifier::CampaignReport run() {
    std::array<std::uint64_t, kMaxVerifyPrime> layers{};
    layers[0] = 1;  // empty subset sums to 0
    descend(1, layers);

    rep_.universe.kind = "fp";
    rep_.universe.prime = p_;
    rep_.universe.k_min = 1;
    rep_.universe.k_max = half_;
    rep_.tight_by_theorem["T1_3"] = tight_;
    for (auto& [key, cell] : minima_) rep_.minima.push_back(std::move(cell));
    return std::move(rep_);
  }

 private:
  std::uint64_t rotate(std::uint64_t m, int v) const {
    if (v == 0) return m;
    return ((m << v) | (m >> (p_ - v))) & full_;
  }

  void descend(int x, const std::array<std::uint64_t, kMaxVerifyPrime>& layers) {
    if (x > half_) {
      if (!chosen_.empty()) visit(layers);
      return;
    }
    descend(x + 1, layers);
    for (int v : {x, p_ - x}) {
      auto next = layers;
      const std::size_t size = chosen_.size();
      for (std::size_t c = size + 1; c-- > 0;) next[c + 1] |= rotate(layers[c], v);
      chosen_.push_back(v);
      descend(x + 1, next);
      chosen_.pop_back();
    }
  }

  void visit(const std::array<std::uint64_t, kMaxVerifyPrime>& layers) {
    const auto size = static_cast<std::int64_t>(chosen_.size());
    // Pairing x with p - x caps admissible sets at (p-1)/2 elements.
    if (size > half_) throw Error(ErrorCode::kInternal, "admissible set too large");
    ++rep_.counts.instances;
    std::uint64_t acc = 0;
    for (std::int64_t alpha = size; alpha >= 0; --alpha) {
      acc |= layers[alpha];
      const std::int64_t got = std::popcount(acc);
      const auto bound = bounds::bound_prime_field(p_, size, alpha);
      ++rep_.counts.pairs;
      ++rep_.counts.checks;
      if (got < bound.value) ++rep_.counts.violations;
      if (got == bound.value) ++tight_;
      record_minimum(size, alpha, got);
    }
  }

  void record_minimum(std::int64_t size, std::int64_t alpha, std::int64_t got) {
    auto [it, fresh] = minima_.try_emplace({size, alpha});
    auto& cell = it->second;
    if (fresh || got < cell.size) {
      cell = {static_cast<int>(size), 1, alpha, got, {}};
    }
    if (got == cell.size &&
        cell.witnesses.size() < verifier::kMaxWitnessesPerCell) {
      auto sorted = chosen_;
      std::sort(sorted.begin(), sorted.end());
      std::string s = "{";
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        s += (i ? "," : "") + std::to_string(sorted[i]);
      }
      cell.witnesses.push_back(s + "}");
    }
  }

  int p_;
  int half_;
  std::uint64_t full_;
  std::vector<int> chosen_;
  std::int64_t tight_ = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, verifier::MinimumCell> minima_;
  verifier::CampaignReport rep_;
};

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FpSubset::FpSubset(int p, const std::vector<std::int64_t>& values) : p_(p) {
  require_prime(p);
  if (values.empty()) throw Error(ErrorCode::kParse, "empty subset of F_p");
  for (auto v : values) {
    residues_.push_back(static_cast<int>(((v % p) + p) % p));
  }
  std::sort(residues_.begin(), residues_.end());
  if (std::adjacent_find(residues_.begin(), residues_.end()) != residues_.end()) {
    throw Error(ErrorCode::kParse, "residues collide mod " + std::to_string(p));
  }
}

bool FpSubset::self_disjoint() const {
  for (int x : residues_) {
    if (x == 0) return false;
    if (std::binary_search(residues_.begin(), residues_.end(), p_ - x)) {
      return false;
    }
  }
  return true;
}

std::vector<int> sigma_fp(const FpSubset& set, std::int64_t alpha) {
  const int p = set.p();
  const int k = set.size();
  if (alpha < 0 || alpha > k) {
    throw Error(ErrorCode::kRange, "alpha outside [0,|A|]");
  }
  // reach[c][s]: some c-subset sums to s mod p.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(k + 1),
                                       std::vector<char>(static_cast<std::size_t>(p), 0));
  reach[0][0] = 1;
  int filled = 0;
  for (int a : set.residues()) {
    for (int c = filled; c >= 0; --c) {
      for (int s = 0; s < p; ++s) {
        if (reach[c][s]) reach[c + 1][(s + a) % p] = 1;
      }
    }
    ++filled;
  }
  std::vector<int> out;
  for (int s = 0; s < p; ++s) {
    for (int c = static_cast<int>(alpha); c <= k; ++c) {
      if (reach[c][s]) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

verifier::CampaignReport verify_balandraud(int p) {
  require_prime(p);
  if (p > kMaxVerifyPrime) {
    throw Error(ErrorCode::kRange, "prime-field check enumerates p <= " +
                                       std::to_string(kMaxVerifyPrime));
  }
  const auto start = std::chrono::steady_clock::now();
  auto rep = AdmissibleWalk(p).run();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace subsum::fp
