#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "bll/errors.hpp"
#include "bll/rational.hpp"

namespace bll {

struct Interval {
  Rat lo, hi;  // lo <= hi; length may be zero

  Rat length() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

inline bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

// Finite union of closed intervals with rational endpoints, kept in normal
// form: components sorted, each of positive length, with positive gaps
// between consecutive components (touching or overlapping inputs merge,
// zero-length inputs drop). Normal form is canonical up to null sets, so
// vector equality decides equality mod null.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet from_intervals(std::vector<Interval> parts) {
    for (const auto& iv : parts)
      if (iv.lo > iv.hi) throw precondition_error("interval with lo > hi");
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Interval> merged;
    for (auto& iv : parts) {
      if (!merged.empty() && iv.lo <= merged.back().hi) {
        if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
      } else {
        merged.push_back(iv);
      }
    }
    std::erase_if(merged, [](const Interval& iv) { return iv.lo == iv.hi; });
    IntervalSet out;
    out.comps_ = std::move(merged);
    return out;
  }

  static IntervalSet interval(const Rat& lo, const Rat& hi) { return from_intervals({Interval{lo, hi}}); }

  const std::vector<Interval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }

  Rat measure() const {
    Rat m = 0;
    for (const auto& iv : comps_) m += iv.length();
    return m;
  }

  const Rat& inf() const {
    if (empty()) throw precondition_error("inf of empty set");
    return comps_.front().lo;
  }
  const Rat& sup() const {
    if (empty()) throw precondition_error("sup of empty set");
    return comps_.back().hi;
  }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<Interval> comps_;
};

inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& A = a.components();
  const auto& B = b.components();
  std::size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    const Rat lo = std::max(A[i].lo, B[j].lo);
    const Rat hi = std::min(A[i].hi, B[j].hi);
    if (lo < hi) out.push_back(Interval{lo, hi});
    (A[i].hi < B[j].hi) ? ++i : ++j;
  }
  return IntervalSet::from_intervals(std::move(out));
}

inline IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.components();
  const auto& B = b.components();
  all.insert(all.end(), B.begin(), B.end());
  return IntervalSet::from_intervals(std::move(all));
}

// A \ B up to null sets (leftover pieces are kept closed).
inline IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& B = b.components();
  for (const auto& comp : a.components()) {
    Rat cur = comp.lo;
    for (const auto& cut : B) {
      if (cut.hi <= cur) continue;
      if (cut.lo >= comp.hi) break;
      if (cut.lo > cur) out.push_back(Interval{cur, cut.lo});
      cur = std::max(cur, cut.hi);
      if (cur >= comp.hi) break;
    }
    if (cur < comp.hi) out.push_back(Interval{cur, comp.hi});
  }
  return IntervalSet::from_intervals(std::move(out));
}

inline IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
  return set_union(set_difference(a, b), set_difference(b, a));
}

inline bool contains_mod_null(const IntervalSet& outer, const IntervalSet& inner) {
  return set_difference(inner, outer).empty();
}

inline Rat intersection_measure(const std::vector<IntervalSet>& sets) {
  if (sets.empty()) throw precondition_error("intersection of no sets");
  IntervalSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i) acc = intersect(acc, sets[i]);
  return acc.measure();
}

// x |-> p*x + q with p != 0.
inline IntervalSet affine_image(const IntervalSet& e, const Rat& p, const Rat& q) {
  if (p == 0) throw precondition_error("affine image with zero scale");
  std::vector<Interval> out;
  out.reserve(e.components().size());
  for (const auto& iv : e.components()) {
    Rat u = p * iv.lo + q, v = p * iv.hi + q;
    if (p < 0) std::swap(u, v);
    out.push_back(Interval{std::move(u), std::move(v)});
  }
  return IntervalSet::from_intervals(std::move(out));
}

inline IntervalSet translate(const IntervalSet& e, const Rat& shift) { return affine_image(e, 1, shift); }

// Symmetric decreasing rearrangement: the centered interval of equal measure.
// A null set rearranges to the degenerate interval {0}.
inline Interval symmetrize(const IntervalSet& e) {
  const Rat half = e.measure() / 2;
  return Interval{-half, half};
}

// |E ∩ (-inf, x]|.
inline Rat cdf_left(const IntervalSet& e, const Rat& x) {
  Rat m = 0;
  for (const auto& iv : e.components()) {
    if (iv.lo >= x) break;
    m += std::min(iv.hi, x) - iv.lo;
  }
  return m;
}

struct Truncation {
  IntervalSet set;
  Rat a, b;  // E(alpha, beta) = E ∩ [a, b]
};

// Removes exactly alpha of measure from the left and beta from the right:
// a is the smallest point with |E ∩ (-inf, a]| = alpha (a = min E when
// alpha = 0), b mirrors from the right. Requires alpha, beta >= 0 and
// alpha + beta <= |E|, which forces a <= b.
inline Truncation truncate(const IntervalSet& e, const Rat& alpha, const Rat& beta) {
  if (alpha < 0 || beta < 0) throw precondition_error("negative truncation amount");
  if (alpha + beta > e.measure()) throw precondition_error("truncation amounts exceed measure");
  if (e.empty()) return Truncation{IntervalSet{}, 0, 0};
  const auto& comps = e.components();

  Rat a;
  if (alpha == 0) {
    a = comps.front().lo;
  } else {
    Rat cum = 0;
    for (const auto& iv : comps) {
      const Rat len = iv.length();
      if (cum + len >= alpha) {
        a = iv.lo + (alpha - cum);
        break;
      }
      cum += len;
    }
  }

  Rat b;
  if (beta == 0) {
    b = comps.back().hi;
  } else {
    Rat cum = 0;
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
      const Rat len = it->length();
      if (cum + len >= beta) {
        b = it->hi - (beta - cum);
        break;
      }
      cum += len;
    }
  }

  return Truncation{intersect(e, a < b ? IntervalSet::interval(a, b) : IntervalSet{}), a, b};
}

// The center of E when E is a single interval up to null sets, else nothing.
inline std::optional<Rat> interval_center_mod_null(const IntervalSet& e) {
  if (e.components().size() != 1) return std::nullopt;
  return e.components().front().midpoint();
}

}  // namespace bll
