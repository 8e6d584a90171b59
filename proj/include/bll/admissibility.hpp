#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bll/convex_polygon.hpp"
#include "bll/errors.hpp"
#include "bll/linear_form.hpp"
#include "bll/rational.hpp"

namespace bll {

// Strip system {|L_j| <= w_j}. Admissibility of a measure tuple is the
// geometric condition: for every k, the polytope cut out by the other strips
// must not fit inside an open shrinking of strip k.
struct StripSystem {
  std::vector<LinearForm> forms;
  std::vector<Rat> half_widths;

  std::size_t size() const { return forms.size(); }
};

inline StripSystem strips_for(const std::vector<LinearForm>& forms, const std::vector<Rat>& measures) {
  if (forms.size() != measures.size()) throw precondition_error("forms/measures size mismatch");
  StripSystem sys{forms, {}};
  sys.half_widths.reserve(measures.size());
  for (const auto& m : measures) sys.half_widths.push_back(m / 2);
  return sys;
}

// K_k: intersection of every strip except strip k.
inline ConvexPolygon strip_polytope(const StripSystem& sys, int exclude) {
  if (exclude < 0 || std::size_t(exclude) >= sys.size()) throw precondition_error("index out of range");
  std::vector<HalfPlane> hs;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (int(j) == exclude) continue;
    auto [h1, h2] = strip_halfplanes(sys.forms[j], sys.half_widths[j]);
    hs.push_back(h1);
    hs.push_back(h2);
  }
  return intersect_halfplanes(hs);
}

enum class Verdict { strictly_admissible, admissible_not_strict, inadmissible };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::strictly_admissible: return "strictly_admissible";
    case Verdict::admissible_not_strict: return "admissible_not_strict";
    default: return "inadmissible";
  }
}

// slacks[k] = max |L_k| over K_k minus the half-width w_k. Strip k contains
// an open neighborhood of K_k exactly when slacks[k] < 0; those k are the
// witnesses of inadmissibility.
struct AdmissibilityReport {
  Verdict verdict;
  std::vector<Rat> slacks;
  std::vector<int> witnesses;  // indices with slack <= 0 (containment up to touching)
};

// Geometric classification. Zero half-widths are allowed here; use check()
// for the measure-tuple entry point that insists on positive widths.
inline AdmissibilityReport classify_strips(const StripSystem& sys) {
  if (sys.forms.size() != sys.half_widths.size()) throw precondition_error("forms/widths size mismatch");
  if (sys.size() < 3) throw precondition_error("need at least three strips");
  if (auto bad = degenerate_pair(sys.forms))
    throw degenerate_error("degenerate form pair (" + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second) + ")");
  for (const auto& w : sys.half_widths)
    if (w < 0) throw precondition_error("negative strip width");

  AdmissibilityReport rep;
  bool any_equal = false, any_less = false;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    const Rat sk = support(strip_polytope(sys, int(k)), sys.forms[k]);
    const Rat slack = sk - sys.half_widths[k];
    if (slack < 0) any_less = true;
    if (slack == 0) any_equal = true;
    if (slack <= 0) rep.witnesses.push_back(int(k));
    rep.slacks.push_back(slack);
  }
  rep.verdict = any_less    ? Verdict::inadmissible
                : any_equal ? Verdict::admissible_not_strict
                            : Verdict::strictly_admissible;
  return rep;
}

inline AdmissibilityReport check(const StripSystem& sys) {
  for (const auto& w : sys.half_widths)
    if (w <= 0) throw precondition_error("admissibility needs positive measures");
  return classify_strips(sys);
}

inline AdmissibilityReport check(const std::vector<LinearForm>& forms, const std::vector<Rat>& measures) {
  return check(strips_for(forms, measures));
}

inline AdmissibilityReport check(const Problem& p) { return check(p.forms, p.measures()); }

// Per-index measure comparison m_i vs sum of the others. For the sum system
// (x, y, x+y) this matches the geometric classification index by index.
enum class MeasureCondition { strict, equality, violated };

inline std::vector<MeasureCondition> burchard_check(const std::vector<Rat>& measures) {
  if (measures.size() < 3) throw precondition_error("need at least three measures");
  Rat total = 0;
  for (const auto& m : measures) {
    if (m <= 0) throw precondition_error("measures must be positive");
    total += m;
  }
  std::vector<MeasureCondition> out;
  for (const auto& m : measures) {
    const Rat rest = total - m;
    out.push_back(m < rest ? MeasureCondition::strict
                           : (m == rest ? MeasureCondition::equality : MeasureCondition::violated));
  }
  return out;
}

inline Verdict burchard_verdict(const std::vector<Rat>& measures) {
  bool any_eq = false;
  for (const auto& c : burchard_check(measures)) {
    if (c == MeasureCondition::violated) return Verdict::inadmissible;
    if (c == MeasureCondition::equality) any_eq = true;
  }
  return any_eq ? Verdict::admissible_not_strict : Verdict::strictly_admissible;
}

namespace detail {

// Smallest candidate at which pred flips to false. Candidates are sorted,
// pred is true before its zero and false from it on, and the last candidate
// must fail.
template <typename Pred>
const Rat& first_failure(const std::vector<Rat>& candidates, Pred&& strict_at) {
  std::size_t lo = 0, hi = candidates.size() - 1;
  if (strict_at(candidates[hi])) throw certificate_error("monotone scan has no failing end");
  if (!strict_at(candidates[lo])) return candidates[lo];
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (strict_at(candidates[mid]) ? lo : hi) = mid;
  }
  return candidates[hi];
}

}  // namespace detail

// Largest eps such that growing strip k's half-width by eps/2 while shrinking
// all others by eps/2 (floored at zero) stays admissible for every k, i.e.
// the distance to inadmissibility under the worst single-index perturbation.
// Requires a strictly admissible system.
inline Rat stability_margin(const StripSystem& sys) {
  const AdmissibilityReport base = check(sys);
  if (base.verdict != Verdict::strictly_admissible)
    throw precondition_error("stability margin needs strict admissibility");

  const std::size_t n1 = sys.size();
  Rat best = -1;
  for (std::size_t k = 0; k < n1; ++k) {
    // Width of strip j at parameter eps, and the threshold strip k must beat.
    auto width_at = [&](std::size_t j, const Rat& eps) {
      return std::max(Rat(sys.half_widths[j] - eps / 2), Rat(0));
    };
    auto strict_at = [&](const Rat& eps) {
      StripSystem pert;
      Rat thr = sys.half_widths[k] + eps / 2;
      for (std::size_t j = 0; j < n1; ++j) {
        if (j == k) continue;
        pert.forms.push_back(sys.forms[j]);
        pert.half_widths.push_back(width_at(j, eps));
      }
      std::vector<HalfPlane> hs;
      for (std::size_t j = 0; j < pert.size(); ++j) {
        auto [h1, h2] = strip_halfplanes(pert.forms[j], pert.half_widths[j]);
        hs.push_back(h1);
        hs.push_back(h2);
      }
      return support(intersect_halfplanes(hs), sys.forms[k]) > thr;
    };

    // Clamp events split the parameter axis into pieces where all widths are
    // affine; on each piece the critical eps solves a vertex equation.
    Rat eps_max = 0;
    std::vector<Rat> events{Rat(0)};
    for (std::size_t j = 0; j < n1; ++j) {
      if (j == k) continue;
      eps_max = std::max(eps_max, Rat(2 * sys.half_widths[j]));
    }
    for (std::size_t j = 0; j < n1; ++j) {
      if (j == k) continue;
      const Rat clamp = 2 * sys.half_widths[j];
      if (clamp > 0 && clamp <= eps_max) events.push_back(clamp);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<Rat> candidates(events.begin() + 1, events.end());
    candidates.push_back(eps_max);
    for (std::size_t seg = 0; seg < events.size(); ++seg) {
      const Rat seg_lo = events[seg];
      const Rat seg_hi = (seg + 1 < events.size()) ? events[seg + 1] : eps_max;
      if (!(seg_lo < seg_hi)) continue;
      // Affine widths on (seg_lo, seg_hi]: A + B*eps.
      std::vector<std::pair<Rat, Rat>> aff(n1);
      for (std::size_t j = 0; j < n1; ++j) {
        if (j == k) continue;
        if (2 * sys.half_widths[j] <= seg_lo)
          aff[j] = {0, 0};
        else
          aff[j] = {sys.half_widths[j], rat(-1, 2)};
      }
      for (std::size_t i = 0; i < n1; ++i) {
        if (i == k) continue;
        for (std::size_t j = i + 1; j < n1; ++j) {
          if (j == k) continue;
          const Rat D = det(sys.forms[i], sys.forms[j]);
          for (int si : {1, -1}) {
            for (int sj : {1, -1}) {
              // Vertex v(eps) solving L_i = si*w_i(eps), L_j = sj*w_j(eps).
              const Rat rhs_iA = si * aff[i].first, rhs_iB = si * aff[i].second;
              const Rat rhs_jA = sj * aff[j].first, rhs_jB = sj * aff[j].second;
              const Rat vxA = (rhs_iA * sys.forms[j].b - rhs_jA * sys.forms[i].b) / D;
              const Rat vxB = (rhs_iB * sys.forms[j].b - rhs_jB * sys.forms[i].b) / D;
              const Rat vyA = (sys.forms[i].a * rhs_jA - sys.forms[j].a * rhs_iA) / D;
              const Rat vyB = (sys.forms[i].a * rhs_jB - sys.forms[j].a * rhs_iB) / D;
              const Rat pA = sys.forms[k].a * vxA + sys.forms[k].b * vyA;
              const Rat pB = sys.forms[k].a * vxB + sys.forms[k].b * vyB;
              for (int sk : {1, -1}) {
                // L_k(v(eps)) = sk * (w_k + eps/2)
                const Rat denom = pB - Rat(sk) / 2;
                if (denom == 0) continue;
                const Rat root = (sk * sys.half_widths[k] - pA) / denom;
                if (root > seg_lo && root <= seg_hi) candidates.push_back(root);
              }
            }
          }
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    const Rat root_k = detail::first_failure(candidates, strict_at);
    best = (best < 0) ? root_k : std::min(best, root_k);
  }
  return best;
}

// Inadmissible tuple with witness k: every other set is its own
// rearrangement, set k splits into the centered interval filling strip k's
// reachable range plus a far-away remainder. The value then agrees with the
// rearranged value while set k is not an interval: equality without interval
// structure.
inline Problem nonuniqueness_witness(const std::vector<LinearForm>& forms, const std::vector<Rat>& measures,
                                     int k) {
  const StripSystem sys = strips_for(forms, measures);
  const AdmissibilityReport rep = check(sys);
  if (k < 0 || std::size_t(k) >= forms.size()) throw precondition_error("index out of range");
  if (rep.slacks[std::size_t(k)] >= 0)
    throw precondition_error("index " + std::to_string(k) + " is not an inadmissibility witness");

  const Rat sk = support(strip_polytope(sys, k), forms[std::size_t(k)]);
  Rat total = 0;
  for (const auto& m : measures) total += m;
  const Rat far = 10 * total;

  Problem out;
  out.forms = forms;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    if (int(j) == k) {
      out.sets.push_back(IntervalSet::from_intervals(
          {Interval{-sk, sk}, Interval{far, far + measures[j] - 2 * sk}}));
    } else {
      const Rat w = measures[j] / 2;
      out.sets.push_back(IntervalSet::interval(-w, w));
    }
  }
  return out;
}

}  // namespace bll
