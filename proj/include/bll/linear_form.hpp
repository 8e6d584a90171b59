#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bll/errors.hpp"
#include "bll/interval_set.hpp"
#include "bll/rational.hpp"

namespace bll {

struct Point {
  Rat x, y;
};

inline bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

// L(x, y) = a*x + b*y.
struct LinearForm {
  Rat a, b;

  Rat operator()(const Rat& x, const Rat& y) const { return a * x + b * y; }
  Rat operator()(const Point& p) const { return a * p.x + b * p.y; }
  bool is_zero() const { return a == 0 && b == 0; }
};

inline bool operator==(const LinearForm& f, const LinearForm& g) { return f.a == g.a && f.b == g.b; }

inline Rat det(const LinearForm& f, const LinearForm& g) { return f.a * g.b - f.b * g.a; }

// First pair of linearly dependent forms, if any. A zero form reports as the
// pair (j, j).
inline std::optional<std::pair<int, int>> degenerate_pair(const std::vector<LinearForm>& forms) {
  for (std::size_t j = 0; j < forms.size(); ++j)
    if (forms[j].is_zero()) return std::make_pair(int(j), int(j));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (det(forms[i], forms[j]) == 0) return std::make_pair(int(i), int(j));
  return std::nullopt;
}

inline bool is_nondegenerate(const std::vector<LinearForm>& forms) { return !degenerate_pair(forms).has_value(); }

// The multilinear functional's data: nondegenerate forms L_0..L_n on the
// plane and one interval union per form.
struct Problem {
  std::vector<LinearForm> forms;
  std::vector<IntervalSet> sets;

  std::size_t size() const { return forms.size(); }
  std::vector<Rat> measures() const {
    std::vector<Rat> m;
    m.reserve(sets.size());
    for (const auto& e : sets) m.push_back(e.measure());
    return m;
  }
};

inline void validate_problem(const Problem& p) {
  if (p.forms.size() != p.sets.size()) throw precondition_error("forms/sets size mismatch");
  if (p.forms.size() < 3) throw precondition_error("need at least three forms");
  if (auto bad = degenerate_pair(p.forms)) {
    throw degenerate_error("degenerate form pair (" + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second) + ")");
  }
}

// t |-> scale*t + shift on the line.
struct AffineMap1D {
  Rat scale, shift;

  Rat operator()(const Rat& t) const { return scale * t + shift; }
};

// x |-> M x + v on the plane.
struct AffineMap2D {
  Rat m00, m01, m10, m11;
  Rat vx, vy;

  Rat det() const { return m00 * m11 - m01 * m10; }
  Point operator()(const Point& p) const {
    return Point{m00 * p.x + m01 * p.y + vx, m10 * p.x + m11 * p.y + vy};
  }
};

// Change of variables witness for the reduction to normal form:
//   evaluate(original) = c * evaluate(reduced),
// reduced forms are (1,0) and (t_j, 1), reduced set i is set_maps[i] applied
// to original set order[i].
struct NormalForm {
  Rat c;
  std::vector<Rat> t;                 // one per non-pivot slot, reduced slots 1..n
  std::vector<AffineMap1D> set_maps;  // aligned with reduced slots
  AffineMap2D coord_map;              // y |-> original coordinates
  std::vector<int> order;             // reduced slot -> original index
};

// Reduces p so that form `outer` becomes (1, 0) (reduced slot 0) and form
// `inner` becomes (0, 1) written as t = 0; every other form becomes
// (t_j, 1). Sets attached to non-pivot slots are rescaled, the outer set is
// carried unchanged.
inline std::pair<NormalForm, Problem> to_normal_form(const Problem& p, int outer = 0, int inner = 1) {
  validate_problem(p);
  const int n1 = int(p.size());
  if (outer < 0 || outer >= n1 || inner < 0 || inner >= n1 || outer == inner)
    throw precondition_error("bad pivot indices");

  const LinearForm& lo = p.forms[outer];
  const LinearForm& li = p.forms[inner];
  const Rat d = det(lo, li);

  NormalForm nf;
  nf.c = 1 / rat_abs(d);
  // Rows of the inverse of [lo; li]: y-coordinates map back by x = A^{-1} y.
  nf.coord_map = AffineMap2D{li.b / d, -lo.b / d, -li.a / d, lo.a / d, 0, 0};

  Problem out;
  out.forms.push_back(LinearForm{1, 0});
  out.sets.push_back(p.sets[outer]);
  nf.set_maps.push_back(AffineMap1D{1, 0});
  nf.order.push_back(outer);

  for (int j = 0; j < n1; ++j) {
    if (j == outer) continue;
    const Rat aj = det(p.forms[j], li) / d;   // coefficient on y1
    const Rat bj = det(lo, p.forms[j]) / d;   // coefficient on y2, nonzero
    const Rat tj = aj / bj;
    nf.t.push_back(tj);
    nf.set_maps.push_back(AffineMap1D{1 / bj, 0});
    nf.order.push_back(j);
    out.forms.push_back(LinearForm{tj, 1});
    out.sets.push_back(affine_image(p.sets[j], 1 / bj, 0));
  }
  return {std::move(nf), std::move(out)};
}

// Pre-composes the forms with the invertible affine map phi and pushes each
// set through psi[j], absorbing the affine constants so that the indicator
// product is preserved pointwise:
//   prod 1_{E'_j}(L'_j(x)) = prod 1_{E_j}(L_j(phi(x))),
// hence evaluate(P') = evaluate(P) / |det phi|.
inline Problem transform_problem(const Problem& p, const AffineMap2D& phi, const std::vector<AffineMap1D>& psi) {
  if (psi.size() != p.size()) throw precondition_error("one line map per form required");
  if (phi.det() == 0) throw precondition_error("singular coordinate map");
  Problem out;
  const Point v{phi.vx, phi.vy};
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rat& s = psi[j].scale;
    if (s == 0) throw precondition_error("line map with zero scale");
    const LinearForm& f = p.forms[j];
    out.forms.push_back(LinearForm{s * (f.a * phi.m00 + f.b * phi.m10), s * (f.a * phi.m01 + f.b * phi.m11)});
    out.sets.push_back(affine_image(p.sets[j], s, -s * f(v)));
  }
  return out;
}

// Solves L_0(z) = c_0, L_1(z) = c_1 and accepts z only if every remaining
// form matches its center as well.
inline std::optional<Point> coherent_center(const std::vector<LinearForm>& forms, const std::vector<Rat>& centers) {
  if (forms.size() != centers.size() || forms.size() < 2) throw precondition_error("centers/forms size mismatch");
  const Rat d = det(forms[0], forms[1]);
  if (d == 0) throw degenerate_error("dependent leading forms");
  const Point z{(centers[0] * forms[1].b - centers[1] * forms[0].b) / d,
                (forms[0].a * centers[1] - forms[1].a * centers[0]) / d};
  for (std::size_t j = 2; j < forms.size(); ++j)
    if (forms[j](z) != centers[j]) return std::nullopt;
  return z;
}

}  // namespace bll
