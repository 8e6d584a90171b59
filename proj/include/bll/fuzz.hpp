#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bll/admissibility.hpp"
#include "bll/functional.hpp"
#include "bll/instance_gen.hpp"
#include "bll/interval_set.hpp"
#include "bll/problem_io.hpp"

namespace bll {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> reproducers;  // serialized offending instances, capped

  void violation(const std::string& repro) {
    ++violations;
    if (reproducers.size() < 8) reproducers.push_back(repro);
  }
};

// deficit >= 0 exactly, on arbitrary random problems.
inline SuiteResult fuzz_inequality(std::uint64_t instances, std::uint64_t seed) {
  SuiteResult res{"rearrangement_inequality"};
  for (std::uint64_t i = 0; i < instances; ++i) {
    Gen g(derive_seed(seed, i));
    const Problem p = rand_problem(g, int(g.integer(3, 5)), 3);
    ++res.checked;
    if (deficit(p) < 0) res.violation(problem_to_json(p).dump());
  }
  return res;
}

// Geometric classification vs the per-index measure comparison, on the sum
// system where they must agree.
inline SuiteResult fuzz_admissibility_agreement(std::uint64_t instances, std::uint64_t seed) {
  SuiteResult res{"measure_condition_agreement"};
  const auto forms = sum_system();
  for (std::uint64_t i = 0; i < instances; ++i) {
    Gen g(derive_seed(seed, i));
    std::vector<Rat> m;
    for (int j = 0; j < 3; ++j) m.push_back(g.positive(8, 4));
    // Exercise the boundary: occasionally force an exact equality.
    if (g.integer(0, 3) == 0) {
      const std::size_t i = std::size_t(g.integer(0, 2));
      m[i] = m[(i + 1) % 3] + m[(i + 2) % 3];
    }
    ++res.checked;
    if (check(forms, m).verdict != burchard_verdict(m))
      res.violation(rats_to_json(m).dump());
  }
  return res;
}

// Two-sided truncation: |∩E_i| <= alpha + beta + |∩E_i(alpha,beta)|, with
// exact equality when the sets are intervals and the truncated intersection
// is nonempty.
inline SuiteResult fuzz_truncation(std::uint64_t instances, std::uint64_t seed) {
  SuiteResult res{"truncation_slack"};
  for (std::uint64_t i = 0; i < instances; ++i) {
    Gen g(derive_seed(seed, i));
    const int k = int(g.integer(1, 4));
    std::vector<IntervalSet> sets;
    Rat min_measure;
    for (int j = 0; j < k; ++j) {
      sets.push_back(rand_set(g, 3));
      const Rat m = sets.back().measure();
      min_measure = (j == 0) ? m : std::min(min_measure, m);
    }
    const Rat alpha = min_measure * g.integer(0, 4) / 16;
    const Rat beta = min_measure * g.integer(0, 4) / 16;

    IntervalSet inter = sets[0], inter_t = truncate(sets[0], alpha, beta).set;
    for (int j = 1; j < k; ++j) {
      inter = intersect(inter, sets[std::size_t(j)]);
      inter_t = intersect(inter_t, truncate(sets[std::size_t(j)], alpha, beta).set);
    }
    ++res.checked;
    if (inter.measure() > alpha + beta + inter_t.measure()) {
      json repro{{"alpha", rat_to_json(alpha)}, {"beta", rat_to_json(beta)}, {"sets", json::array()}};
      for (const auto& e : sets) repro["sets"].push_back(set_to_json(e));
      res.violation(repro.dump());
    }

    // Interval equality case: overlapping intervals, truncation amounts small
    // enough that the truncated intersection stays nonempty.
    std::vector<IntervalSet> ivs;
    IntervalSet jnter;
    for (int j = 0; j < k; ++j) {
      const Rat c = g.rational(-1, 1, 4);
      const Rat h = g.rational(2, 4, 4);
      ivs.push_back(IntervalSet::interval(c - h, c + h));
      jnter = (j == 0) ? ivs[0] : intersect(jnter, ivs.back());
    }
    const Rat a2 = g.positive(1, 4) / 2, b2 = g.positive(1, 4) / 2;
    IntervalSet jnter_t = truncate(ivs[0], a2, b2).set;
    for (int j = 1; j < k; ++j) jnter_t = intersect(jnter_t, truncate(ivs[std::size_t(j)], a2, b2).set);
    ++res.checked;
    if (jnter_t.empty() || jnter.measure() != a2 + b2 + jnter_t.measure()) {
      json repro{{"alpha", rat_to_json(a2)}, {"beta", rat_to_json(b2)}, {"sets", json::array()}};
      for (const auto& e : ivs) repro["sets"].push_back(set_to_json(e));
      res.violation(repro.dump());
    }
  }
  return res;
}

inline json suite_to_json(const SuiteResult& r) {
  json out{{"checked", r.checked}, {"violations", r.violations}};
  if (!r.reproducers.empty()) {
    out["reproducers"] = json::array();
    for (const auto& s : r.reproducers) out["reproducers"].push_back(json::parse(s));
  }
  return out;
}

}  // namespace bll
