/*
    Copyright 2026 The corrforms Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "corrforms/correspondence.hpp"
#include "corrforms/invariance.hpp"

namespace corrforms {

enum class SkipKind { Denominator, LeadingCoefficient, DegreeDrop, Wild, Inseparable, Error };

std::string_view to_string(SkipKind kind) noexcept;

struct SkipReason {
  SkipKind kind;
  std::string detail;
};

/// Base change of a Q-correspondence to F_p when p is a prime of good reduction:
/// no coefficient denominator divisible by p, leading coefficients survive,
/// degrees are preserved, p does not divide d1 d2, and both reductions are
/// separable and tame. Otherwise the first failed condition is returned.
std::variant<Correspondence, SkipReason> reduce_mod_p(const Correspondence& c, std::uint32_t p);

struct SweepEntry {
  std::uint32_t p;
  /// 2 d1 d2 < p.
  bool guard;
  std::variant<SkipReason, GroupReport> outcome;

  bool skipped() const noexcept { return std::holds_alternative<SkipReason>(outcome); }
};

struct SweepSummary {
  std::size_t primes = 0;
  std::size_t skipped = 0;
  std::size_t trivial = 0;
  std::size_t weight1 = 0;
  std::size_t weight2 = 0;
  std::size_t guarded_good = 0;
  std::size_t guarded_weight1 = 0;

  /// Every good prime past the guard reported a weight-1 primitive (and there was at least one).
  bool weight1_evidence() const noexcept { return guarded_good > 0 && guarded_weight1 == guarded_good; }
};

struct SweepReport {
  std::vector<SweepEntry> entries;  // strictly increasing p

  SweepSummary summary() const;
};

/// Reduces and searches every prime in [pmin, pmax] on `jobs` worker threads.
/// Entries come back sorted by p whatever the scheduling. Per-prime failures
/// become SkipKind::Error entries.
SweepReport sweep(const Correspondence& c, std::uint64_t pmin, std::uint64_t pmax, unsigned jobs = 1);

}  // namespace corrforms
