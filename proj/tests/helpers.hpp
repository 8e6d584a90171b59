#pragma once

#include <utility>
#include <vector>

#include "bll/bll.hpp"

namespace testutil {

using namespace bll;

inline Interval iv(long lo, long hi) { return Interval{rat(lo), rat(hi)}; }

inline IntervalSet set_of(std::vector<std::pair<Rat, Rat>> pairs) {
  std::vector<Interval> parts;
  for (auto& pr : pairs) parts.push_back(Interval{std::move(pr.first), std::move(pr.second)});
  return IntervalSet::from_intervals(std::move(parts));
}

inline Problem sum_problem(std::vector<IntervalSet> sets) {
  Problem p;
  p.forms = sum_system();
  p.sets = std::move(sets);
  return p;
}

// Independent exact evaluation: enumerate one component per set and sum the
// areas of the polygons {lo_c <= L_j <= hi_c for all j}. Shares no code with
// the sweep evaluator beyond the polygon clipper.
inline Rat oracle_evaluate(const Problem& p) {
  for (const auto& e : p.sets)
    if (e.empty()) return 0;
  Rat total = 0;
  std::vector<std::size_t> idx(p.size(), 0);
  while (true) {
    std::vector<HalfPlane> hs;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Interval& c = p.sets[j].components()[idx[j]];
      hs.push_back(HalfPlane{p.forms[j], c.hi});
      hs.push_back(HalfPlane{LinearForm{-p.forms[j].a, -p.forms[j].b}, -c.lo});
    }
    total += intersect_halfplanes(hs).area();
    std::size_t j = 0;
    while (j < p.size()) {
      if (++idx[j] < p.sets[j].components().size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == p.size()) break;
  }
  return total;
}

}  // namespace testutil
