#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bll/admissibility.hpp"
#include "bll/errors.hpp"
#include "bll/interval_set.hpp"
#include "bll/linear_form.hpp"
#include "bll/rational.hpp"

namespace bll {

// Deterministic random instances. mt19937_64 with plain modulo draws keeps
// streams identical across standard libraries; distribution bias is
// irrelevant here.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {  // inclusive bounds
    if (hi < lo) throw precondition_error("empty integer range");
    return lo + long(eng_() % std::uint64_t(hi - lo + 1));
  }

  Rat rational(long lo, long hi, long max_den) {  // in [lo, hi]
    const long den = integer(1, max_den);
    return rat(integer(lo * den, hi * den), den);
  }

  Rat positive(long hi, long max_den) {  // in (0, hi]
    const long den = integer(1, max_den);
    return rat(integer(1, hi * den), den);
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Stable per-instance seed stream (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Nonempty set with the requested number of components and positive gaps.
inline IntervalSet rand_set(Gen& g, int max_comps) {
  const int k = int(g.integer(1, max_comps));
  std::vector<Interval> parts;
  Rat cursor = g.rational(-8, 0, 4);
  for (int i = 0; i < k; ++i) {
    const Rat len = g.positive(2, 4);
    parts.push_back(Interval{cursor, cursor + len});
    cursor += len + g.positive(2, 4);
  }
  return IntervalSet::from_intervals(std::move(parts));
}

// Exact total measure m split over `comps` components.
inline IntervalSet rand_set_with_measure(Gen& g, const Rat& m, int comps) {
  if (m <= 0 || comps < 1) throw precondition_error("need positive measure and component count");
  std::vector<long> weights;
  long total = 0;
  for (int i = 0; i < comps; ++i) {
    weights.push_back(g.integer(1, 8));
    total += weights.back();
  }
  std::vector<Interval> parts;
  Rat cursor = g.rational(-8, 8, 4);
  for (int i = 0; i < comps; ++i) {
    const Rat len = m * weights[std::size_t(i)] / total;
    parts.push_back(Interval{cursor, cursor + len});
    cursor += len + g.positive(2, 4);
  }
  return IntervalSet::from_intervals(std::move(parts));
}

inline std::vector<LinearForm> rand_forms(Gen& g, int n1) {
  for (int tries = 0; tries < 4000; ++tries) {
    std::vector<LinearForm> fs;
    for (int j = 0; j < n1; ++j) fs.push_back(LinearForm{rat(g.integer(-3, 3)), rat(g.integer(-3, 3))});
    if (is_nondegenerate(fs)) return fs;
  }
  throw certificate_error("form sampling exhausted");
}

inline std::vector<LinearForm> sum_system() {
  return {LinearForm{1, 0}, LinearForm{0, 1}, LinearForm{1, 1}};
}

inline Problem rand_problem(Gen& g, int n1, int max_comps) {
  Problem p;
  p.forms = rand_forms(g, n1);
  for (int j = 0; j < n1; ++j) p.sets.push_back(rand_set(g, max_comps));
  return p;
}

inline Rat one_norm(const LinearForm& f) { return rat_abs(f.a) + rat_abs(f.b); }

// Measures near the profile where every strip is tangent to a common box;
// that profile is admissible, so jittered copies are accepted often enough
// for rejection sampling.
inline std::optional<std::vector<Rat>> rand_admissible_measures(Gen& g, const std::vector<LinearForm>& forms,
                                                                bool require_strict, int tries = 200) {
  for (int t = 0; t < tries; ++t) {
    std::vector<Rat> m;
    for (const auto& f : forms) m.push_back(2 * one_norm(f) * rat(g.integer(6, 10), 8));
    const Verdict v = check(forms, m).verdict;
    if (v == Verdict::strictly_admissible) return m;
    if (!require_strict && v == Verdict::admissible_not_strict) return m;
  }
  return std::nullopt;
}

// Positive measures that are inadmissible with a guaranteed witness index:
// one measure is inflated past the reach of the other strips. Returns the
// measures and the witness.
inline std::pair<std::vector<Rat>, int> rand_inadmissible_measures(Gen& g,
                                                                   const std::vector<LinearForm>& forms) {
  std::vector<Rat> m;
  for (const auto& f : forms) m.push_back(2 * one_norm(f) * rat(g.integer(6, 10), 8));
  const int k = int(g.integer(0, long(forms.size()) - 1));
  const Rat sk = support(strip_polytope(strips_for(forms, m), k), forms[std::size_t(k)]);
  m[std::size_t(k)] = 2 * sk * rat(g.integer(5, 8), 4);
  return {std::move(m), k};
}

}  // namespace bll
