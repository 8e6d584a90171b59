#include <algorithm>
#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace bll;
using testutil::set_of;

namespace {

std::vector<Rat> rats(std::vector<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.push_back(rat(x));
  return out;
}

// Perturbed strictness probe used to cross-check stability_margin: grow strip
// k by eps/2, shrink the others by eps/2 floored at zero.
bool perturbed_strict(const StripSystem& sys, std::size_t k, const Rat& eps) {
  std::vector<HalfPlane> hs;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j == k) continue;
    const Rat w = std::max(Rat(sys.half_widths[j] - eps / 2), Rat(0));
    auto [h1, h2] = strip_halfplanes(sys.forms[j], w);
    hs.push_back(h1);
    hs.push_back(h2);
  }
  return support(intersect_halfplanes(hs), sys.forms[k]) > sys.half_widths[k] + eps / 2;
}

bool perturbed_strict_all(const StripSystem& sys, const Rat& eps) {
  for (std::size_t k = 0; k < sys.size(); ++k)
    if (!perturbed_strict(sys, k, eps)) return false;
  return true;
}

}  // namespace

TEST_CASE("strip polytope of the unit sum system") {
  const StripSystem sys = strips_for(sum_system(), rats({1, 1, 1}));
  const ConvexPolygon k0 = strip_polytope(sys, 0);
  REQUIRE(k0.vertices().size() == 4);
  auto has = [&](long xn, long xd, long yn, long yd) {
    const Point p{rat(xn, xd), rat(yn, yd)};
    return std::any_of(k0.vertices().begin(), k0.vertices().end(),
                       [&](const Point& v) { return v == p; });
  };
  CHECK(has(0, 1, 1, 2));
  CHECK(has(-1, 1, 1, 2));
  CHECK(has(0, 1, -1, 2));
  CHECK(has(1, 1, -1, 2));
  CHECK(support(k0, LinearForm{1, 0}) == rat(1));
  CHECK_THROWS_AS(strip_polytope(sys, 3), precondition_error);
  CHECK_THROWS_AS(strip_polytope(sys, -1), precondition_error);
}

TEST_CASE("verdicts and slacks on the sum system") {
  SECTION("strict") {
    const AdmissibilityReport r = check(sum_system(), rats({1, 1, 1}));
    CHECK(r.verdict == Verdict::strictly_admissible);
    CHECK(r.slacks == std::vector<Rat>{rat(1, 2), rat(1, 2), rat(1, 2)});
    CHECK(r.witnesses.empty());
  }
  SECTION("borderline") {
    const AdmissibilityReport r = check(sum_system(), rats({2, 1, 1}));
    CHECK(r.verdict == Verdict::admissible_not_strict);
    CHECK(r.slacks == std::vector<Rat>{rat(0), rat(1), rat(1)});
    CHECK(r.witnesses == std::vector<int>{0});
  }
  SECTION("violated at the first index") {
    const AdmissibilityReport r = check(sum_system(), rats({3, 1, 1}));
    CHECK(r.verdict == Verdict::inadmissible);
    CHECK(r.slacks[0] == rat(-1, 2));
    CHECK(r.witnesses == std::vector<int>{0});
  }
  SECTION("violated at the last index") {
    const AdmissibilityReport r = check(sum_system(), rats({1, 1, 5}));
    CHECK(r.verdict == Verdict::inadmissible);
    CHECK(r.slacks == std::vector<Rat>{rat(5, 2), rat(5, 2), rat(-3, 2)});
    CHECK(r.witnesses == std::vector<int>{2});
  }
}

TEST_CASE("zero widths are legal for the geometric classifier only") {
  StripSystem sys = strips_for(sum_system(), rats({1, 1, 1}));
  sys.half_widths[0] = 0;
  const AdmissibilityReport r = classify_strips(sys);
  CHECK(r.verdict == Verdict::admissible_not_strict);
  CHECK(r.slacks == std::vector<Rat>{rat(1), rat(0), rat(0)});
  CHECK(r.witnesses == std::vector<int>{1, 2});
  CHECK_THROWS_AS(check(sys), precondition_error);
}

TEST_CASE("classifier rejects malformed systems") {
  CHECK_THROWS_AS(check(std::vector<LinearForm>{LinearForm{1, 0}, LinearForm{0, 1}}, rats({1, 1})),
                  precondition_error);
  CHECK_THROWS_AS(check({LinearForm{1, 0}, LinearForm{0, 1}, LinearForm{2, 0}}, rats({1, 1, 1})),
                  degenerate_error);
  CHECK_THROWS_AS(check(sum_system(), rats({1, 1, -1})), precondition_error);
  CHECK_THROWS_AS(check(sum_system(), rats({1, 1})), precondition_error);
  StripSystem neg = strips_for(sum_system(), rats({1, 1, 1}));
  neg.half_widths[2] = rat(-1, 4);
  CHECK_THROWS_AS(classify_strips(neg), precondition_error);
}

TEST_CASE("measure comparison matches the geometric verdict on the sum system") {
  SECTION("pinned") {
    CHECK(burchard_verdict(rats({1, 1, 1})) == Verdict::strictly_admissible);
    CHECK(burchard_verdict(rats({2, 1, 1})) == Verdict::admissible_not_strict);
    CHECK(burchard_verdict(rats({3, 1, 1})) == Verdict::inadmissible);
    const auto conds = burchard_check(rats({2, 1, 1}));
    CHECK(conds[0] == MeasureCondition::equality);
    CHECK(conds[1] == MeasureCondition::strict);
    CHECK(conds[2] == MeasureCondition::strict);
    CHECK_THROWS_AS(burchard_check(rats({1, 0, 1})), precondition_error);
  }
  SECTION("random agreement, index by index") {
    for (int i = 0; i < 250; ++i) {
      Gen g(derive_seed(3101, std::uint64_t(i)));
      std::vector<Rat> m{g.positive(8, 4), g.positive(8, 4), g.positive(8, 4)};
      if (g.integer(0, 3) == 0) {
        const std::size_t j = std::size_t(g.integer(0, 2));
        m[j] = m[(j + 1) % 3] + m[(j + 2) % 3];
      }
      const AdmissibilityReport r = check(sum_system(), m);
      CHECK(r.verdict == burchard_verdict(m));
      const auto conds = burchard_check(m);
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK((r.slacks[k] > 0) == (conds[k] == MeasureCondition::strict));
        CHECK((r.slacks[k] == 0) == (conds[k] == MeasureCondition::equality));
        CHECK((r.slacks[k] < 0) == (conds[k] == MeasureCondition::violated));
      }
    }
    CHECK(fuzz_admissibility_agreement(300, 3202).violations == 0);
  }
}

TEST_CASE("slacks are homogeneous in the measures") {
  for (int i = 0; i < 120; ++i) {
    Gen g(derive_seed(3303, std::uint64_t(i)));
    const auto forms = rand_forms(g, int(g.integer(3, 5)));
    std::vector<Rat> m;
    for (std::size_t j = 0; j < forms.size(); ++j) m.push_back(g.positive(6, 4));
    const Rat lam = g.positive(5, 3);
    std::vector<Rat> scaled;
    for (const auto& x : m) scaled.push_back(lam * x);
    const AdmissibilityReport a = check(forms, m);
    const AdmissibilityReport b = check(forms, scaled);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witnesses == b.witnesses);
    REQUIRE(a.slacks.size() == b.slacks.size());
    for (std::size_t k = 0; k < a.slacks.size(); ++k) CHECK(b.slacks[k] == lam * a.slacks[k]);
  }
}

TEST_CASE("verdict survives coordinate and line changes") {
  for (int i = 0; i < 80; ++i) {
    Gen g(derive_seed(3404, std::uint64_t(i)));
    Problem p = rand_problem(g, int(g.integer(3, 4)), 1);
    AffineMap2D phi{g.rational(-2, 2, 2), g.rational(-2, 2, 2), g.rational(-2, 2, 2),
                    g.rational(-2, 2, 2), g.rational(-2, 2, 2), g.rational(-2, 2, 2)};
    if (phi.det() == 0) phi.m00 += 1;
    if (phi.det() == 0) continue;
    std::vector<AffineMap1D> psi;
    for (std::size_t j = 0; j < p.size(); ++j) {
      Rat s = g.rational(-2, 2, 2);
      if (s == 0) s = rat(1, 2);
      psi.push_back(AffineMap1D{s, rat(0)});
    }
    const Problem q = transform_problem(p, phi, psi);
    const AdmissibilityReport a = check(p);
    const AdmissibilityReport b = check(q);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witnesses == b.witnesses);
  }
}

TEST_CASE("stability margin") {
  SECTION("pinned values") {
    CHECK(stability_margin(strips_for(sum_system(), rats({1, 1, 1}))) == rat(1, 3));
    CHECK(stability_margin(strips_for(sum_system(), rats({2, 2, 2}))) == rat(2, 3));
    CHECK(stability_margin(strips_for(sum_system(), {rat(17, 10), rat(1), rat(1)})) == rat(1, 10));
  }
  SECTION("probe on both sides of the pinned margin") {
    const StripSystem sys = strips_for(sum_system(), rats({1, 1, 1}));
    const Rat eps = rat(1, 3);
    const Rat tick = rat(1, 1024);
    CHECK(perturbed_strict_all(sys, eps - tick));
    CHECK_FALSE(perturbed_strict_all(sys, eps + tick));
  }
  SECTION("rejects non-strict systems") {
    CHECK_THROWS_AS(stability_margin(strips_for(sum_system(), rats({2, 1, 1}))), precondition_error);
    CHECK_THROWS_AS(stability_margin(strips_for(sum_system(), rats({3, 1, 1}))), precondition_error);
  }
  SECTION("random systems: margin is the exact strictness threshold") {
    const Rat down = rat((1 << 20) - 1, 1 << 20);
    const Rat up = rat((1 << 20) + 1, 1 << 20);
    int ran = 0;
    for (int i = 0; i < 80 && ran < 25; ++i) {
      Gen g(derive_seed(3505, std::uint64_t(i)));
      const auto forms = rand_forms(g, int(g.integer(3, 4)));
      const auto m = rand_admissible_measures(g, forms, true);
      if (!m) continue;
      const StripSystem sys = strips_for(forms, *m);
      const Rat eps = stability_margin(sys);
      CHECK(eps > 0);
      CHECK(perturbed_strict_all(sys, eps * down));
      CHECK_FALSE(perturbed_strict_all(sys, eps * up));
      ++ran;
    }
    CHECK(ran == 25);
  }
  SECTION("margin is homogeneous") {
    for (int i = 0; i < 15; ++i) {
      Gen g(derive_seed(3606, std::uint64_t(i)));
      const auto forms = rand_forms(g, 3);
      const auto m = rand_admissible_measures(g, forms, true);
      if (!m) continue;
      std::vector<Rat> doubled;
      for (const auto& x : *m) doubled.push_back(2 * x);
      CHECK(stability_margin(strips_for(forms, doubled)) ==
            2 * stability_margin(strips_for(forms, *m)));
    }
  }
}

TEST_CASE("equality witness for inadmissible tuples") {
  SECTION("pinned split construction") {
    const Problem w = nonuniqueness_witness(sum_system(), rats({3, 1, 1}), 0);
    CHECK(w.sets[0] == set_of({{rat(-1), rat(1)}, {rat(50), rat(51)}}));
    CHECK(w.sets[1] == set_of({{rat(-1, 2), rat(1, 2)}}));
    CHECK(w.sets[2] == set_of({{rat(-1, 2), rat(1, 2)}}));
    CHECK(w.sets[0].components().size() == 2);
    CHECK(w.sets[0].measure() == rat(3));
    CHECK(deficit(w) == rat(0));
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(nonuniqueness_witness(sum_system(), rats({1, 1, 1}), 0), precondition_error);
    CHECK_THROWS_AS(nonuniqueness_witness(sum_system(), rats({3, 1, 1}), 1), precondition_error);
    CHECK_THROWS_AS(nonuniqueness_witness(sum_system(), rats({3, 1, 1}), 3), precondition_error);
  }
  SECTION("random inadmissible tuples split with zero deficit") {
    for (int i = 0; i < 30; ++i) {
      Gen g(derive_seed(3707, std::uint64_t(i)));
      const auto forms = rand_forms(g, int(g.integer(3, 4)));
      const auto [m, k] = rand_inadmissible_measures(g, forms);
      const AdmissibilityReport r = check(forms, m);
      REQUIRE(r.verdict == Verdict::inadmissible);
      REQUIRE(r.slacks[std::size_t(k)] < 0);
      const Problem w = nonuniqueness_witness(forms, m, k);
      CHECK(w.sets[std::size_t(k)].components().size() == 2);
      CHECK(w.measures() == m);
      CHECK(deficit(w) == rat(0));
    }
  }
}
