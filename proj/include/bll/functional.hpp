#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bll/convex_polygon.hpp"
#include "bll/errors.hpp"
#include "bll/interval_set.hpp"
#include "bll/linear_form.hpp"
#include "bll/rational.hpp"

namespace bll {

// A problem in normal form: slot 0 carries the form (1, 0) and the base set,
// slot j >= 1 carries the form (t_j, 1) and sets[j-1]. The functional is
//   integral over x in base of |intersection_j (sets[j] - t_j x)|.
struct NormalProblem {
  IntervalSet base;
  std::vector<Rat> t;
  std::vector<IntervalSet> sets;

  std::vector<Rat> measures() const {
    std::vector<Rat> m{base.measure()};
    for (const auto& e : sets) m.push_back(e.measure());
    return m;
  }
};

inline NormalProblem as_normal(const Problem& p) {
  if (p.forms.empty() || !(p.forms[0] == LinearForm{1, 0}))
    throw precondition_error("slot 0 must carry the form (1, 0)");
  NormalProblem np;
  np.base = p.sets[0];
  for (std::size_t j = 1; j < p.size(); ++j) {
    if (p.forms[j].b != 1) throw precondition_error("slot must carry a form (t, 1)");
    np.t.push_back(p.forms[j].a);
    np.sets.push_back(p.sets[j]);
  }
  return np;
}

inline Problem as_problem(const NormalProblem& np) {
  Problem p;
  p.forms.push_back(LinearForm{1, 0});
  p.sets.push_back(np.base);
  for (std::size_t j = 0; j < np.t.size(); ++j) {
    p.forms.push_back(LinearForm{np.t[j], 1});
    p.sets.push_back(np.sets[j]);
  }
  return p;
}

// F(x) = |intersection of the translated inner sets at abscissa x|.
inline Rat slice_measure(const NormalProblem& np, const Rat& x) {
  if (np.sets.empty()) throw precondition_error("no inner sets");
  IntervalSet acc = translate(np.sets[0], -np.t[0] * x);
  for (std::size_t j = 1; j < np.sets.size() && !acc.empty(); ++j)
    acc = intersect(acc, translate(np.sets[j], -np.t[j] * x));
  return acc.measure();
}

// Abscissas where the slice structure can change: base endpoints plus every
// collision of a slot-j endpoint with a slot-k endpoint. Between consecutive
// values the slice measure is affine, so each segment integrates as a
// trapezoid.
inline std::vector<Rat> sweep_breakpoints(const NormalProblem& np) {
  std::vector<Rat> bps;
  for (const auto& iv : np.base.components()) {
    bps.push_back(iv.lo);
    bps.push_back(iv.hi);
  }
  const std::size_t n = np.sets.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rat dt = np.t[j] - np.t[k];
      if (dt == 0) continue;
      for (const auto& ij : np.sets[j].components()) {
        for (const auto& ik : np.sets[k].components()) {
          for (const Rat* p : {&ij.lo, &ij.hi})
            for (const Rat* q : {&ik.lo, &ik.hi}) bps.push_back((*p - *q) / dt);
        }
      }
    }
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  return bps;
}

inline Rat evaluate_normal(const NormalProblem& np) {
  if (np.t.size() != np.sets.size()) throw precondition_error("slopes/sets size mismatch");
  if (np.base.empty() || np.sets.empty()) return 0;
  for (const auto& e : np.sets)
    if (e.empty()) return 0;

  const std::vector<Rat> bps = sweep_breakpoints(np);
  Rat twice_total = 0;
  for (const auto& comp : np.base.components()) {
    auto first = std::upper_bound(bps.begin(), bps.end(), comp.lo);
    Rat prev_x = comp.lo;
    Rat prev_f = slice_measure(np, prev_x);
    for (auto it = first; it != bps.end() && *it < comp.hi; ++it) {
      const Rat f = slice_measure(np, *it);
      twice_total += (prev_f + f) * (*it - prev_x);
      prev_x = *it;
      prev_f = f;
    }
    twice_total += (prev_f + slice_measure(np, comp.hi)) * (comp.hi - prev_x);
  }
  return twice_total / 2;
}

// Exact value of the functional: the measure-weighted overlap
//   integral over the plane of prod_j 1_{E_j}(L_j(x, y)).
inline Rat evaluate(const Problem& p) {
  validate_problem(p);
  for (const auto& e : p.sets)
    if (e.empty()) return 0;
  auto [nf, reduced] = to_normal_form(p, 0, 1);
  return nf.c * evaluate_normal(as_normal(reduced));
}

inline Problem symmetrized_problem(const Problem& p) {
  Problem q;
  q.forms = p.forms;
  for (const auto& e : p.sets) q.sets.push_back(IntervalSet::from_intervals({symmetrize(e)}));
  return q;
}

inline Rat evaluate_symmetrized(const Problem& p) { return evaluate(symmetrized_problem(p)); }

// I(E*) - I(E), nonnegative by the rearrangement inequality.
inline Rat deficit(const Problem& p) { return evaluate_symmetrized(p) - evaluate(p); }

struct McEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t hits = 0;
};

// Rejection sampling over the bounding box of the feasible region
//   {(x, y) : L_j(x, y) in hull(E_j) for all j};
// the integrand's support lies inside it. Deterministic for a fixed seed.
inline McEstimate mc_estimate(const Problem& p, std::uint64_t samples, std::uint64_t seed) {
  validate_problem(p);
  if (samples == 0) throw precondition_error("need at least one sample");
  for (const auto& e : p.sets)
    if (e.empty()) return {};

  std::vector<HalfPlane> hs;
  for (std::size_t j = 0; j < p.size(); ++j) {
    hs.push_back(HalfPlane{p.forms[j], p.sets[j].sup()});
    hs.push_back(HalfPlane{LinearForm{-p.forms[j].a, -p.forms[j].b}, -p.sets[j].inf()});
  }
  const ConvexPolygon box_region = intersect_halfplanes(hs);
  if (box_region.vertices().size() < 3) return {};

  Rat xlo = box_region.vertices()[0].x, xhi = xlo, ylo = box_region.vertices()[0].y, yhi = ylo;
  for (const auto& v : box_region.vertices()) {
    xlo = std::min(xlo, v.x);
    xhi = std::max(xhi, v.x);
    ylo = std::min(ylo, v.y);
    yhi = std::max(yhi, v.y);
  }
  const double bx = to_double(xlo), bw = to_double(xhi - xlo);
  const double by = to_double(ylo), bh = to_double(yhi - ylo);
  const double box_area = bw * bh;

  struct FlatForm {
    double a, b;
    std::vector<std::pair<double, double>> comps;
  };
  std::vector<FlatForm> flat;
  for (std::size_t j = 0; j < p.size(); ++j) {
    FlatForm ff{to_double(p.forms[j].a), to_double(p.forms[j].b), {}};
    for (const auto& iv : p.sets[j].components()) ff.comps.emplace_back(to_double(iv.lo), to_double(iv.hi));
    flat.push_back(std::move(ff));
  }

  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double x = bx + unit() * bw;
    const double y = by + unit() * bh;
    bool in = true;
    for (const auto& ff : flat) {
      const double v = ff.a * x + ff.b * y;
      bool member = false;
      for (const auto& c : ff.comps) {
        if (v >= c.first && v <= c.second) {
          member = true;
          break;
        }
      }
      if (!member) {
        in = false;
        break;
      }
    }
    if (in) ++hits;
  }

  const double phat = double(hits) / double(samples);
  McEstimate out;
  out.hits = hits;
  out.estimate = box_area * phat;
  out.std_error = box_area * std::sqrt(phat * (1.0 - phat) / double(samples));
  return out;
}

}  // namespace bll
