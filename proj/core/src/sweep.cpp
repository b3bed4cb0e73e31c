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

#include "corrforms/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "corrforms/ramification.hpp"

namespace corrforms {

std::string_view to_string(SkipKind kind) noexcept {
  switch (kind) {
    case SkipKind::Denominator: return "denominator";
    case SkipKind::LeadingCoefficient: return "leading-coefficient";
    case SkipKind::DegreeDrop: return "degree-drop";
    case SkipKind::Wild: return "wild";
    case SkipKind::Inseparable: return "inseparable";
    case SkipKind::Error: return "error";
  }
  return "unknown";
}

namespace {

using Reduced = std::variant<RationalMap, SkipReason>;

Reduced reduce_map(const RationalMap& sigma, Field target, const char* name) {
  const std::uint32_t p = target.characteristic();
  const Polynomial& num = sigma.body().num();
  const Polynomial& den = sigma.body().den();
  for (const Polynomial* poly : {&num, &den})
    for (const Scalar& c : poly->coefficients())
      if (mpz_divisible_ui_p(c.as_rational().denominator().get_mpz_t(), p) != 0)
        return SkipReason{SkipKind::Denominator, std::string(name) + " has coefficient " + c.to_string()};
  if (mpz_divisible_ui_p(num.leading().as_rational().numerator().get_mpz_t(), p) != 0)
    return SkipReason{SkipKind::LeadingCoefficient,
                      std::string(name) + " has leading coefficient " + num.leading().to_string()};
  RationalFunction body(reduce_mod(num, target), reduce_mod(den, target));
  if (body.is_constant() || std::max(body.num().degree(), body.den().degree()) != static_cast<long>(sigma.degree()))
    return SkipReason{SkipKind::DegreeDrop, std::string(name) + " loses degree mod " + std::to_string(p)};
  return RationalMap(std::move(body));
}

}  // namespace

std::variant<Correspondence, SkipReason> reduce_mod_p(const Correspondence& c, std::uint32_t p) {
  if (!c.field().is_rational())
    throw MathError(ErrorCode::UnsupportedCharacteristic, "reduction mod p needs a correspondence over Q");
  const Field target = Field::prime(p);

  Reduced r1 = reduce_map(c.sigma1(), target, "sigma1");
  if (auto* skip = std::get_if<SkipReason>(&r1)) return std::move(*skip);
  Reduced r2 = reduce_map(c.sigma2(), target, "sigma2");
  if (auto* skip = std::get_if<SkipReason>(&r2)) return std::move(*skip);

  if (c.d1() % p == 0) return SkipReason{SkipKind::Wild, "p divides d1 = " + std::to_string(c.d1())};
  if (c.d2() % p == 0) return SkipReason{SkipKind::Wild, "p divides d2 = " + std::to_string(c.d2())};

  auto& s1 = std::get<RationalMap>(r1);
  auto& s2 = std::get<RationalMap>(r2);
  for (const auto& [sigma, name] : {std::pair{&s1, "sigma1"}, std::pair{&s2, "sigma2"}}) {
    if (!sigma->is_separable())
      return SkipReason{SkipKind::Inseparable, std::string(name) + " is inseparable mod " + std::to_string(p)};
    TamenessReport tame = is_tame(*sigma);
    if (!tame.tame) return SkipReason{SkipKind::Wild, std::string(name) + ": " + tame.witness};
  }
  return Correspondence(std::move(s1), std::move(s2));
}

SweepSummary SweepReport::summary() const {
  SweepSummary s;
  for (const SweepEntry& e : entries) {
    ++s.primes;
    if (e.skipped()) {
      ++s.skipped;
      continue;
    }
    const GroupReport& g = std::get<GroupReport>(e.outcome);
    const bool w1 = g.primitive && g.primitive->weight == 1;
    if (!g.primitive) ++s.trivial;
    else if (w1) ++s.weight1;
    else ++s.weight2;
    if (e.guard) {
      ++s.guarded_good;
      if (w1) ++s.guarded_weight1;
    }
  }
  return s;
}

SweepReport sweep(const Correspondence& c, std::uint64_t pmin, std::uint64_t pmax, unsigned jobs) {
  if (!c.field().is_rational())
    throw MathError(ErrorCode::UnsupportedCharacteristic, "sweep needs a correspondence over Q");
  require_flat_search_domain(c);
  if (pmin > pmax)
    throw MathError(ErrorCode::InvalidArgument,
                    "empty prime range [" + std::to_string(pmin) + ", " + std::to_string(pmax) + "]");
  if (pmax >= kMaxModulus) throw MathError(ErrorCode::InvalidArgument, "pmax must be below 2^31");

  std::vector<std::uint32_t> primes;
  for (std::uint64_t n = pmin; n <= pmax; ++n)
    if (is_prime(n)) primes.push_back(static_cast<std::uint32_t>(n));

  const std::uint64_t guard_bound = 2ULL * c.d1() * c.d2();
  std::vector<std::optional<SweepEntry>> slots(primes.size());
  auto run_one = [&](std::size_t i) {
    const std::uint32_t p = primes[i];
    SweepEntry entry{p, guard_bound < p, SkipReason{SkipKind::Error, {}}};
    try {
      auto reduced = reduce_mod_p(c, p);
      if (auto* skip = std::get_if<SkipReason>(&reduced))
        entry.outcome = std::move(*skip);
      else
        entry.outcome = find_primitive(std::get<Correspondence>(reduced));
    } catch (const MathError& e) {
      entry.outcome = SkipReason{SkipKind::Error, e.what()};
    }
    slots[i] = std::move(entry);
  };

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
          try {
            run_one(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  SweepReport report;
  report.entries.reserve(slots.size());
  for (auto& slot : slots) report.entries.push_back(std::move(*slot));
  return report;
}

}  // namespace corrforms
