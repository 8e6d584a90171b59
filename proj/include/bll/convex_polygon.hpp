#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bll/errors.hpp"
#include "bll/linear_form.hpp"
#include "bll/rational.hpp"

namespace bll {

// Closed half-plane {p : form(p) <= bound}.
struct HalfPlane {
  LinearForm form;
  Rat bound;

  bool contains(const Point& p) const { return form(p) <= bound; }
};

// The two half-planes of the strip {|form| <= width}.
inline std::pair<HalfPlane, HalfPlane> strip_halfplanes(const LinearForm& f, const Rat& width) {
  return {HalfPlane{f, width}, HalfPlane{LinearForm{-f.a, -f.b}, width}};
}

inline Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Convex hull, counterclockwise, collinear points dropped. Degenerate inputs
// yield 0, 1 or 2 vertices.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& p, const Point& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Compact convex region: empty, a point, a segment, or a polygon with
// vertices counterclockwise and no three collinear.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  static ConvexPolygon from_points(std::vector<Point> pts) {
    ConvexPolygon poly;
    poly.verts_ = convex_hull(std::move(pts));
    return poly;
  }

  const std::vector<Point>& vertices() const { return verts_; }
  bool empty() const { return verts_.empty(); }
  bool is_point() const { return verts_.size() == 1; }
  bool is_segment() const { return verts_.size() == 2; }

  Rat area() const {
    if (verts_.size() < 3) return 0;
    Rat twice = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      const Point& p = verts_[i];
      const Point& q = verts_[(i + 1) % verts_.size()];
      twice += p.x * q.y - q.x * p.y;
    }
    return twice / 2;
  }

 private:
  std::vector<Point> verts_;
};

inline Point line_intersection(const LinearForm& f, const Rat& c, const LinearForm& g, const Rat& d) {
  const Rat D = det(f, g);
  if (D == 0) throw precondition_error("parallel boundary lines");
  return Point{(c * g.b - d * f.b) / D, (f.a * d - g.a * c) / D};
}

namespace detail {

// One Sutherland-Hodgman pass; the subject list is cyclic and convex.
inline std::vector<Point> clip_by(const std::vector<Point>& subject, const HalfPlane& h) {
  if (subject.empty()) return {};
  if (subject.size() == 1) return h.contains(subject[0]) ? subject : std::vector<Point>{};
  std::vector<Point> out;
  const std::size_t n = subject.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& s = subject[i];
    const Point& e = subject[(i + 1) % n];
    const Rat fs = h.form(s), fe = h.form(e);
    const bool sin = fs <= h.bound, ein = fe <= h.bound;
    if (sin != ein) {
      const Rat t = (h.bound - fs) / (fe - fs);
      out.push_back(Point{s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)});
    }
    if (ein) out.push_back(e);
  }
  return out;
}

}  // namespace detail

// Intersection of closed half-planes. The input must contain two strips
// (antiparallel pairs) with independent axes so the region is compact;
// otherwise unbounded_error. The result may be empty or degenerate.
inline ConvexPolygon intersect_halfplanes(const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs)
    if (h.form.is_zero()) throw precondition_error("half-plane with zero form");

  // Locate two bounding strips with independent axes.
  auto antiparallel = [](const LinearForm& f, const LinearForm& g) {
    return det(f, g) == 0 && f.a * g.a + f.b * g.b < 0;
  };
  int s1a = -1, s1b = -1, s2a = -1, s2b = -1;
  for (std::size_t i = 0; i < hs.size() && s2a < 0; ++i) {
    for (std::size_t j = i + 1; j < hs.size() && s2a < 0; ++j) {
      if (!antiparallel(hs[i].form, hs[j].form)) continue;
      if (s1a < 0) {
        s1a = int(i);
        s1b = int(j);
      } else if (det(hs[s1a].form, hs[i].form) != 0) {
        s2a = int(i);
        s2b = int(j);
      }
    }
  }
  if (s2a < 0) throw unbounded_error("half-planes do not bound a compact region");

  // Corners of the bounding parallelogram, then clip by everything.
  std::vector<Point> quad;
  for (int u : {s1a, s1b})
    for (int v : {s2a, s2b})
      quad.push_back(line_intersection(hs[u].form, hs[u].bound, hs[v].form, hs[v].bound));
  std::vector<Point> subject = convex_hull(std::move(quad));
  for (const auto& h : hs) {
    subject = detail::clip_by(subject, h);
    if (subject.empty()) break;
  }
  return ConvexPolygon::from_points(std::move(subject));
}

// max |form| over a nonempty compact region; attained at a vertex.
inline Rat support(const ConvexPolygon& poly, const LinearForm& f) {
  if (poly.empty()) throw precondition_error("support of empty region");
  Rat best = 0;
  for (const auto& v : poly.vertices()) best = std::max(best, rat_abs(f(v)));
  return best;
}

}  // namespace bll
